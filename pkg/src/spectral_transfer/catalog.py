"""Catalog of standard triples (G, H, L) and the group-manifold family.

Each cataloged row is stored as a :class:`TableRow` template.  Rows that
depend on an integer ``n`` are instantiated by :func:`case_lookup` from ids
such as ``"so2n2_so2n1:n=2"``; fixed rows have plain ids like
``"so8c_so7c"``.  Two further id forms are recognised:

``"so4m2_u2m1:m=<m>"``
    row (ii) with ``n = 2m``.  This is the case with explicit transfer maps.
    ``"so2n2_un1:n=<even n>"`` resolves to the same record.
``"group_manifold:sl2r"``
    ``(SL(2,R) x SL(2,R)) / Diag``, i.e. AdS^3 seen as a group manifold with
    ``L = SL(2,R) x SO(2)``.

Form data that is not printed for a case is recorded as ``None`` and every
spectral operation on it raises :class:`ExternalDataError`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from .errors import ExternalDataError, UnknownCaseError
from .qarith import GaussianRational, ParamVector, dot
from .weyl import RootSystemType, WeylType, parse_type, rho, uniform_multiplicities

__all__ = [
    "FormData",
    "TableRow",
    "TransferCase",
    "TauParam",
    "SO4M_U2M",
    "CIRCLE_CHARACTER",
    "EXTERNAL",
    "case_lookup",
    "case_list",
    "group_manifold",
    "make_tau",
    "enumerate_fiber_types",
    "casimir_scalar_on_tau",
    "fiber_term",
    "require_form",
]

SO4M_U2M = "SO4m_U2m"
CIRCLE_CHARACTER = "CircleCharacter"
EXTERNAL = "external"


@dataclass(frozen=True)
class FormData:
    """Normalisation of the invariant form on one side of a case.

    ``scale`` multiplies the standard Euclidean pairing of coordinates and
    ``rho`` is the half-sum of positive roots in the same coordinates.
    """

    scale: Fraction
    rho: ParamVector
    multiplicities: Optional[dict] = None

    def pairing(self, u, v) -> GaussianRational:
        return dot(u, v, self.scale)

    def to_json(self) -> dict:
        out = {"scale": str(self.scale), "rho": [str(x) for x in self.rho]}
        if self.multiplicities is not None:
            out["multiplicities"] = dict(sorted(self.multiplicities.items()))
        return out


@dataclass(frozen=True)
class TableRow:
    row: str
    base_id: str
    G: Callable[[Optional[int]], str]
    H: Callable[[Optional[int]], str]
    L: Callable[[Optional[int]], str]
    rank_formula: str
    casimir_a: Optional[Fraction]
    param: Optional[str] = "n"
    min_param: int = 1
    symmetric_pair: bool = True


def _fmt(template: str) -> Callable[[Optional[int]], str]:
    """``"SO({2n},2)"`` -> function of n; with n=None the template is rendered symbolically."""

    def render(n: Optional[int]) -> str:
        out, i = [], 0
        while i < len(template):
            ch = template[i]
            if ch == "{":
                j = template.index("}", i)
                expr = template[i + 1:j]
                if n is None:
                    out.append(expr)
                else:
                    coeff = expr[:-1]
                    out.append(str((int(coeff) if coeff else 1) * n))
                i = j + 1
            else:
                out.append(ch)
                i += 1
        return "".join(out)

    return render


def _const(text: str) -> Callable[[Optional[int]], str]:
    return lambda n: text


TABLE_ROWS: tuple[TableRow, ...] = (
    TableRow("(i)", "so2n2_so2n1", _fmt("SO({2n},2)"), _fmt("SO({2n},1)"), _fmt("U({n},1)"), "1", Fraction(2)),
    TableRow("(i)'", "so2n2_so2n1_sun1", _fmt("SO({2n},2)"), _fmt("SO({2n},1)"), _fmt("SU({n},1)"), "1", None,
             min_param=2),
    TableRow("(ii)", "so2n2_un1", _fmt("SO({2n},2)"), _fmt("U({n},1)"), _fmt("SO({2n},1)"), "ceil(n/2)", Fraction(2)),
    TableRow("(iii)", "su2n2_u2n1", _fmt("SU({2n},2)"), _fmt("U({2n},1)"), _fmt("Sp({n},1)"), "1", None),
    TableRow("(iv)", "su2n2_spn1", _fmt("SU({2n},2)"), _fmt("Sp({n},1)"), _fmt("U({2n},1)"), "n", None),
    TableRow("(v)", "so4n4_so4n3_sp1spn1", _fmt("SO({4n},4)"), _fmt("SO({4n},3)"), _fmt("Sp(1).Sp({n},1)"), "1",
             None),
    TableRow("(v)'", "so4n4_so4n3_u1spn1", _fmt("SO({4n},4)"), _fmt("SO({4n},3)"), _fmt("U(1).Sp({n},1)"), "1",
             None),
    TableRow("(vi)", "so88_so87", _const("SO(8,8)"), _const("SO(8,7)"), _const("Spin(8,1)"), "1", None, param=None),
    TableRow("(vii)", "so8c_so7c", _const("SO(8,C)"), _const("SO(7,C)"), _const("Spin(7,1)"), "1", Fraction(6),
             param=None),
    TableRow("(viii)", "so44_spin43", _const("SO(4,4)"), _const("Spin(4,3)"), _const("SO(4,1)xSO(3)"), "2", None,
             param=None),
    TableRow("(ix)", "so43_g22", _const("SO(4,3)"), _const("G2(2)"), _const("SO(4,1)xSO(2)"), "1", None,
             param=None, symmetric_pair=False),
)

_ROWS_BY_ID = {r.base_id: r for r in TABLE_ROWS}


def _eval_rank(formula: str, n: Optional[int]) -> Optional[int]:
    if formula == "n":
        return n
    if formula == "ceil(n/2)":
        return None if n is None else math.ceil(n / 2)
    return int(formula)


@dataclass(frozen=True)
class TransferCase:
    """One instantiated triple with everything the transfer layer needs.

    ``g_form``, ``l_form`` and ``lk_form`` are ``None`` when the case's
    normalisation is not printed.  ``fiber_coefficient`` is the factor in
    ``c(tau) = fiber_coefficient * Casimir_{L_K}(tau)``.
    """

    id: str
    row: str
    G: str
    H: str
    L: str
    rank_formula: str
    rank_X: Optional[int]
    params: dict = field(default_factory=dict)
    g_side_weyl: Optional[WeylType] = None
    l_side_weyl: Optional[WeylType] = None
    casimir_a: Optional[Fraction] = None
    fiber_rule: str = EXTERNAL
    fiber_m: Optional[int] = None
    g_form: Optional[FormData] = None
    l_form: Optional[FormData] = None
    lk_form: Optional[FormData] = None
    fiber_coefficient: Optional[Fraction] = None
    conditions_asserted: bool = True
    type_I_empty: Optional[bool] = None

    @property
    def is_external(self) -> bool:
        return self.fiber_rule == EXTERNAL

    @property
    def has_transfer_maps(self) -> bool:
        return not self.is_external and self.g_side_weyl is not None and self.l_side_weyl is not None

    def require_transfer(self) -> None:
        if not self.has_transfer_maps:
            raise ExternalDataError(f"case {self.id!r}: transfer maps are not cataloged (external)")

    def to_json(self) -> dict:
        def form(f):
            return EXTERNAL if f is None else f.to_json()

        return {
            "id": self.id,
            "row": self.row,
            "G": self.G,
            "H": self.H,
            "L": self.L,
            "rank_X": self.rank_X if self.rank_X is not None else self.rank_formula,
            "rank_formula": self.rank_formula,
            "params": self.params,
            "g_side_weyl": str(self.g_side_weyl) if self.g_side_weyl is not None else EXTERNAL,
            "l_side_weyl": str(self.l_side_weyl) if self.l_side_weyl is not None else EXTERNAL,
            "casimir_a": str(self.casimir_a) if self.casimir_a is not None else EXTERNAL,
            "fiber_rule": self.fiber_rule,
            "g_form": form(self.g_form),
            "l_form": form(self.l_form),
            "lk_form": form(self.lk_form),
            "fiber_coefficient": str(self.fiber_coefficient) if self.fiber_coefficient is not None else EXTERNAL,
            "conditions_asserted": self.conditions_asserted,
            "type_I_empty": self.type_I_empty,
        }


@dataclass(frozen=True, order=True)
class TauParam:
    """A fiber K-type.

    ``payload`` is ``(j_1, ..., j_m)`` for the SO(4m)/U(2m) fibers (the
    highest weight is ``(j_1, j_1, ..., j_m, j_m)``) and ``(k,)`` for a circle
    character.
    """

    case_id: str
    payload: tuple[int, ...]

    def highest_weight(self) -> tuple[int, ...]:
        return self.payload

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.payload) + ")"


def _row_instance(row: TableRow, n: Optional[int], case_id: str) -> TransferCase:
    type_I_empty = None
    if row.base_id == "so8c_so7c":
        type_I_empty = True
    elif row.base_id == "so2n2_un1" and n is not None:
        type_I_empty = True if n % 2 else None
    return TransferCase(
        id=case_id,
        row=row.row,
        G=row.G(n),
        H=row.H(n),
        L=row.L(n),
        rank_formula=row.rank_formula,
        rank_X=_eval_rank(row.rank_formula, n),
        params={} if n is None else {row.param: n},
        casimir_a=row.casimir_a,
        fiber_coefficient=Fraction(-1) if row.base_id in ("so2n2_so2n1", "so2n2_un1") else None,
        type_I_empty=type_I_empty,
    )


def _so4m2_case(m: int) -> TransferCase:
    if m < 1:
        raise UnknownCaseError(f"so4m2_u2m1 requires m >= 1, got {m}")
    base = _row_instance(_ROWS_BY_ID["so2n2_un1"], 2 * m, f"so4m2_u2m1:m={m}")
    g_type = RootSystemType("BC", m)
    # multiplicities 2 (e_i +- e_j), 1 (e_i), 1 (2e_i); eigenvalue coordinates are twice the root coordinates
    g_mult = uniform_multiplicities(g_type, middle=2, short=1, long=1)
    g_rho = rho(g_type, g_mult).scale(2)
    return replace(
        base,
        params={"n": 2 * m, "m": m},
        g_side_weyl=g_type,
        l_side_weyl=RootSystemType("B", 2 * m),
        fiber_rule=SO4M_U2M,
        fiber_m=m,
        g_form=FormData(Fraction(1, 2), g_rho, g_mult),
        l_form=FormData(Fraction(1), rho(RootSystemType("B", 2 * m))),
        lk_form=FormData(Fraction(1), rho(RootSystemType("D", 2 * m))),
    )


def group_manifold(name: str) -> TransferCase:
    """Group-manifold case ``('G x 'G)/Diag('G)`` with ``L = 'G x 'K``.

    Only ``'G = SL(2,R)`` is cataloged; its Harish-Chandra normalisation sends
    the trivial representation to the parameter 1 with ``chi_h(C) = (h^2-1)/4``.
    """
    if name != "sl2r":
        raise UnknownCaseError(f"group manifold {name!r} is not cataloged (available: 'sl2r')")
    quarter = Fraction(1, 4)
    return TransferCase(
        id="group_manifold:sl2r",
        row="group manifold",
        G="SL(2,R)xSL(2,R)",
        H="Diag(SL(2,R))",
        L="SL(2,R)xSO(2)",
        rank_formula="1",
        rank_X=1,
        g_side_weyl=RootSystemType("C", 1),
        l_side_weyl=parse_type("C1xT1"),
        casimir_a=Fraction(1),
        fiber_rule=CIRCLE_CHARACTER,
        fiber_m=1,
        g_form=FormData(quarter, ParamVector([1])),
        l_form=FormData(quarter, ParamVector([1, 0])),
        lk_form=FormData(quarter, ParamVector([0])),
        fiber_coefficient=Fraction(-1),
    )


def case_lookup(case_id: str) -> TransferCase:
    """Resolve a case id to its :class:`TransferCase`."""
    base, _, arg = case_id.partition(":")
    if base == "group_manifold":
        return group_manifold(arg)
    if base == "so4m2_u2m1":
        return _so4m2_case(_parse_param(case_id, arg, "m"))
    row = _ROWS_BY_ID.get(base)
    if row is None:
        raise UnknownCaseError(f"unknown case id {case_id!r}")
    if row.param is None:
        if arg:
            raise UnknownCaseError(f"case {base!r} takes no parameter")
        return _row_instance(row, None, base)
    n = _parse_param(case_id, arg, row.param)
    if n < row.min_param:
        raise UnknownCaseError(f"case {base!r} requires {row.param} >= {row.min_param}")
    if base == "so2n2_un1" and n % 2 == 0:
        return _so4m2_case(n // 2)
    return _row_instance(row, n, f"{base}:{row.param}={n}")


def _parse_param(case_id: str, arg: str, name: str) -> int:
    key, _, value = arg.partition("=")
    if key != name or not value.lstrip("-").isdigit():
        raise UnknownCaseError(f"case id {case_id!r} must look like '<base>:{name}=<integer>'")
    return int(value)


def case_list() -> list[TransferCase]:
    """The eleven cataloged rows, uninstantiated (parameter left symbolic)."""
    return [_row_instance(r, None, r.base_id) for r in TABLE_ROWS]


def make_tau(case: TransferCase, payload) -> TauParam:
    """Validate a fiber-type payload against the case's enumeration rule."""
    if isinstance(payload, int):
        payload = (payload,)
    payload = tuple(payload)
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in payload):
        raise ValueError(f"fiber type entries must be integers, got {payload!r}")
    if case.fiber_rule == SO4M_U2M:
        m = case.fiber_m
        if len(payload) != m:
            raise ValueError(f"fiber type for {case.id} needs {m} entries, got {len(payload)}")
        if any(a < b for a, b in zip(payload, payload[1:])) or (payload and payload[-1] < 0):
            raise ValueError(f"fiber type {payload} must satisfy j_1 >= ... >= j_m >= 0")
    elif case.fiber_rule == CIRCLE_CHARACTER:
        if len(payload) != 1:
            raise ValueError(f"circle character takes one integer, got {payload!r}")
    else:
        raise ExternalDataError(f"case {case.id!r}: fiber K-types are not cataloged (external)")
    return TauParam(case.id, payload)


def enumerate_fiber_types(case: TransferCase, bound: int) -> list[TauParam]:
    """All fiber types with entries bounded by ``bound`` in absolute value, lexicographically sorted."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if case.fiber_rule == SO4M_U2M:
        m = case.fiber_m
        # combinations_with_replacement yields nondecreasing tuples; reverse each
        tuples = [tuple(reversed(c)) for c in itertools.combinations_with_replacement(range(bound + 1), m)]
        return [TauParam(case.id, t) for t in sorted(tuples)]
    if case.fiber_rule == CIRCLE_CHARACTER:
        return [TauParam(case.id, (k,)) for k in range(-bound, bound + 1)]
    raise ExternalDataError(f"case {case.id!r}: fiber K-types are not cataloged (external)")


def _tau_weight(tau: TauParam, case: TransferCase) -> tuple[int, ...]:
    if case.fiber_rule == SO4M_U2M:
        return tuple(j for j in tau.payload for _ in range(2))
    return tau.payload


def require_form(case: TransferCase, side: str) -> FormData:
    form = {"G": case.g_form, "L": case.l_form, "LK": case.lk_form}[side]
    if form is None:
        raise ExternalDataError(f"case {case.id!r}: {side}-side form data is external")
    return form


def casimir_scalar_on_tau(tau: TauParam, case: TransferCase) -> GaussianRational:
    """Casimir of ``L_K`` on the fiber type: ``<mu, mu + 2 rho_K>`` for highest weight ``mu``."""
    form = require_form(case, "LK")
    mu = ParamVector(_tau_weight(tau, case))
    if len(mu) != len(form.rho):
        raise ValueError(f"highest weight {tuple(mu)} does not fit L_K of rank {len(form.rho)}")
    return form.pairing(mu, mu + form.rho.scale(2))


def fiber_term(tau: TauParam, case: TransferCase) -> GaussianRational:
    """``c(tau)`` in ``Laplacian o i_tau = a dl(C_L) + c(tau)``."""
    if case.fiber_coefficient is None:
        raise ExternalDataError(f"case {case.id!r}: fiber term of the Casimir relation is external")
    return casimir_scalar_on_tau(tau, case) * case.fiber_coefficient
