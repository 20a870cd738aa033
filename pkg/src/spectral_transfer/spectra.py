"""Assembly of the discrete spectrum of Gamma\\G/H from data on Gamma\\L.

Input is a list of :class:`DiscGammaLEntry`: an irreducible representation
``theta`` occurring discretely in ``L^2(Gamma\\L)``, given either by its
infinitesimal character or, when that is not in Q(i), by the scalar its
Casimir acts by, together with the fiber types ``tau`` it contains.  Each
``(theta, tau)`` contributes ``lambda(chi_theta, tau)``, of type I when
``theta`` is a discrete series representation of ``L`` and of type II
otherwise.

JSON documents are emitted canonically (sorted keys, fixed indentation,
rationals as 4-string arrays), so ``emit(load(emit(x))) == emit(x)``
byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .catalog import TauParam, TransferCase, case_lookup, make_tau
from .errors import ExternalDataError, SchemaError, TransferError, UnknownCaseError
from .hcparam import (
    EigenvalueParam,
    InfinitesimalCharacter,
    casimir_eigenvalue_for_case,
    lambda_from_eigenvalue,
    laplacian_eigenvalue_for_case,
    param_from_json,
)
from .qarith import GaussianRational
from .transfer import scalar_transfer_eigenvalue, scalar_transfer_for, transfer_lambda, transfer_nu

__all__ = [
    "DiscGammaLEntry",
    "DiscDocument",
    "SpectrumEntry",
    "assemble_spectrum",
    "load_disc_data",
    "emit_disc_data",
    "load_spectrum",
    "emit_spectrum",
    "derive_compatible_taus",
]

FILTERS = ("all", "I", "II")


@dataclass(frozen=True)
class DiscGammaLEntry:
    """One ``theta`` in ``Disc(Gamma\\L)`` with the fiber types it meets.

    Exactly one of ``chi`` and ``casimir`` is set.
    """

    label: str
    case_id: str
    taus: tuple[TauParam, ...]
    hc_discrete: bool
    chi: Optional[InfinitesimalCharacter] = None
    casimir: Optional[GaussianRational] = None

    def __post_init__(self):
        if not self.taus:
            raise ValueError(f"entry {self.label!r}: compatible fiber types must be nonempty")
        if (self.chi is None) == (self.casimir is None):
            raise ValueError(f"entry {self.label!r}: give exactly one of chi and casimir")
        if self.chi is not None and self.chi.case_id != self.case_id:
            raise ValueError(f"entry {self.label!r}: chi bound to {self.chi.case_id!r}, not {self.case_id!r}")
        if any(t.case_id != self.case_id for t in self.taus):
            raise ValueError(f"entry {self.label!r}: fiber type bound to another case")


@dataclass
class DiscDocument:
    """A list of entries for one case; iterates like the list of entries."""

    case_id: str
    entries: list[DiscGammaLEntry] = field(default_factory=list)

    def __iter__(self) -> Iterator[DiscGammaLEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class SpectrumEntry:
    lam: Optional[EigenvalueParam]
    t_lambda: GaussianRational
    type_tag: str
    source_label: str
    source_tau: TauParam
    collision: bool = False

    def sort_key(self):
        lam_key = (0, tuple((x.re, x.im) for x in self.lam.rep)) if self.lam is not None else (1, ())
        return (lam_key, (self.t_lambda.re, self.t_lambda.im), self.source_tau.payload, self.source_label,
                self.type_tag)


def derive_compatible_taus(entry, case: TransferCase):
    """Fiber types of ``theta`` from a Blattner-type formula.  Not available; supply ``taus`` explicitly."""
    raise NotImplementedError("compatible fiber types must be supplied by the caller")


def _lambda_key(e: SpectrumEntry):
    if e.lam is not None:
        return ("lam", e.lam.rep)
    return ("t", e.t_lambda)


def assemble_spectrum(
    entries: Iterable[DiscGammaLEntry],
    case: TransferCase | str,
    filter: str = "all",
) -> list[SpectrumEntry]:
    """Transfer every ``(theta, tau)`` to an eigenvalue of the Laplacian on Gamma\\G/H.

    Entries whose eigenvalue parameters coincide but carry different types
    are all kept and flagged with ``collision=True``.
    """
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}, got {filter!r}")
    if isinstance(case, str):
        case = case_lookup(case)
    case.require_transfer()
    st = scalar_transfer_for(case)

    out: list[SpectrumEntry] = []
    for entry in entries:
        if entry.case_id != case.id:
            raise TransferError(f"entry bound to case {entry.case_id!r}, not {case.id!r}", entry.label)
        tag = "I" if entry.hc_discrete else "II"
        for tau in entry.taus:
            try:
                if entry.chi is not None:
                    lam = transfer_lambda(entry.chi, tau, case)
                    if transfer_nu(lam, tau, case) != entry.chi:
                        raise TransferError(f"round-trip audit failed for fiber type {tau}")
                    t = laplacian_eigenvalue_for_case(lam, case)
                    via_casimir = scalar_transfer_eigenvalue(casimir_eigenvalue_for_case(entry.chi, case), tau, st)
                    if via_casimir != t:
                        raise TransferError(f"Casimir relation audit failed: {t} != {via_casimir}")
                else:
                    t = scalar_transfer_eigenvalue(entry.casimir, tau, st)
                    lam = lambda_from_eigenvalue(t, case)
            except TransferError as exc:
                exc.label = entry.label
                raise
            out.append(SpectrumEntry(lam, t, tag, entry.label, tau))

    types_by_key: dict = {}
    for e in out:
        types_by_key.setdefault(_lambda_key(e), set()).add(e.type_tag)
    out = [
        SpectrumEntry(e.lam, e.t_lambda, e.type_tag, e.source_label, e.source_tau,
                      collision=len(types_by_key[_lambda_key(e)]) > 1)
        for e in out
    ]
    if filter != "all":
        out = [e for e in out if e.type_tag == filter]
    return sorted(out, key=SpectrumEntry.sort_key)


# --- JSON -------------------------------------------------------------------

def _dumps(payload) -> bytes:
    return (json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _parse_json(data: bytes | str):
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"input is not UTF-8: {exc}") from None
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _require(obj, key: str, kind, path: str):
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", path)
    if key not in obj:
        raise SchemaError(f"missing field {key!r}", path)
    value = obj[key]
    if kind is bool:
        ok = isinstance(value, bool)
    elif kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise SchemaError(f"expected {getattr(kind, '__name__', kind)}, got {type(value).__name__}", f"{path}.{key}")
    return value


def _load_case(doc, path: str = "$") -> TransferCase:
    case_id = _require(doc, "case", str, path)
    try:
        case = case_lookup(case_id)
    except UnknownCaseError as exc:
        raise SchemaError(str(exc), f"{path}.case") from None
    if case.id != case_id:
        raise SchemaError(f"use the canonical case id {case.id!r}", f"{path}.case")
    return case


def _load_tau(payload, case: TransferCase, path: str) -> TauParam:
    if not isinstance(payload, list):
        raise SchemaError("fiber type must be an array of integers", path)
    try:
        return make_tau(case, payload)
    except (ValueError, ExternalDataError) as exc:
        raise SchemaError(str(exc), path) from None


def _load_scalar(payload, path: str) -> GaussianRational:
    try:
        return GaussianRational.from_json(payload)
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc), path) from None


def load_disc_data(data: bytes | str) -> DiscDocument:
    """Parse and validate a ``Disc(Gamma\\L)`` document.

    Schema::

        {"case": "<id>",
         "entries": [{"label": str,
                      "chi": {"coords": [[4 strings], ...]}   # or "casimir": [4 strings]
                      "taus": [[int, ...], ...],
                      "hc_discrete": bool}]}
    """
    doc = _parse_json(data)
    case = _load_case(doc)
    raw_entries = _require(doc, "entries", list, "$")
    entries = []
    for i, raw in enumerate(raw_entries):
        path = f"$.entries[{i}]"
        label = _require(raw, "label", str, path)
        hc_discrete = _require(raw, "hc_discrete", bool, path)
        raw_taus = _require(raw, "taus", list, path)
        if not raw_taus:
            raise SchemaError("compatible fiber types must be nonempty", f"{path}.taus")
        taus = tuple(_load_tau(t, case, f"{path}.taus[{k}]") for k, t in enumerate(raw_taus))
        has_chi, has_casimir = "chi" in raw, "casimir" in raw
        if has_chi == has_casimir:
            raise SchemaError("give exactly one of 'chi' and 'casimir'", path)
        chi = casimir = None
        if has_chi:
            chi = param_from_json(raw["chi"], case, "L", f"{path}.chi")
        else:
            casimir = _load_scalar(raw["casimir"], f"{path}.casimir")
        extra = set(raw) - {"label", "hc_discrete", "taus", "chi", "casimir"}
        if extra:
            raise SchemaError(f"unknown fields {sorted(extra)}", path)
        entries.append(DiscGammaLEntry(label, case.id, taus, hc_discrete, chi, casimir))
    return DiscDocument(case.id, entries)


def _entry_json(e: DiscGammaLEntry) -> dict:
    out = {"label": e.label, "taus": [list(t.payload) for t in e.taus], "hc_discrete": e.hc_discrete}
    if e.chi is not None:
        out["chi"] = e.chi.to_json()
    else:
        out["casimir"] = e.casimir.to_json()
    return out


def emit_disc_data(doc: DiscDocument | Sequence[DiscGammaLEntry], case_id: str | None = None) -> bytes:
    if isinstance(doc, DiscDocument):
        case_id, entries = doc.case_id, doc.entries
    else:
        entries = list(doc)
        if case_id is None:
            if not entries:
                raise ValueError("case_id is required for an empty entry list")
            case_id = entries[0].case_id
    return _dumps({"case": case_id, "entries": [_entry_json(e) for e in entries]})


def _spectrum_entry_json(e: SpectrumEntry) -> dict:
    return {
        "lambda": e.lam.to_json() if e.lam is not None else None,
        "t_lambda": e.t_lambda.to_json(),
        "type": e.type_tag,
        "source": {"label": e.source_label, "tau": list(e.source_tau.payload)},
        "collision": e.collision,
    }


def emit_spectrum(entries: Sequence[SpectrumEntry], case_id: str) -> bytes:
    return _dumps({"case": case_id, "spectrum": [_spectrum_entry_json(e) for e in entries]})


def load_spectrum(data: bytes | str) -> tuple[str, list[SpectrumEntry]]:
    doc = _parse_json(data)
    case = _load_case(doc)
    raw_entries = _require(doc, "spectrum", list, "$")
    out = []
    for i, raw in enumerate(raw_entries):
        path = f"$.spectrum[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError("expected an object", path)
        lam = None
        if raw.get("lambda") is not None:
            lam = param_from_json(raw["lambda"], case, "G", f"{path}.lambda")
        if "t_lambda" not in raw:
            raise SchemaError("missing field 't_lambda'", path)
        t = _load_scalar(raw["t_lambda"], f"{path}.t_lambda")
        tag = _require(raw, "type", str, path)
        if tag not in ("I", "II"):
            raise SchemaError(f"type must be 'I' or 'II', got {tag!r}", f"{path}.type")
        source = _require(raw, "source", dict, path)
        label = _require(source, "label", str, f"{path}.source")
        tau = _load_tau(_require(source, "tau", list, f"{path}.source"), case, f"{path}.source.tau")
        collision = raw.get("collision", False)
        if not isinstance(collision, bool):
            raise SchemaError("expected bool", f"{path}.collision")
        out.append(SpectrumEntry(lam, t, tag, label, tau, collision))
    return case.id, out
