"""Eigenvalue parameters and infinitesimal characters as Weyl-orbit classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .catalog import TransferCase, case_lookup, require_form
from .errors import SchemaError
from .qarith import GaussianRational, ParamVector, dot, gq
from .weyl import OrbitClass, WeylType, contains_minus_one, parse_type

__all__ = [
    "EigenvalueParam",
    "InfinitesimalCharacter",
    "laplacian_eigenvalue",
    "laplacian_eigenvalue_for_case",
    "casimir_eigenvalue_for_case",
    "eta_involution",
    "param_from_coords",
    "param_from_json",
    "lambda_from_eigenvalue",
    "gaussian_sqrt",
]


@dataclass(frozen=True)
class _Param:
    orbit: OrbitClass
    case_id: str

    @property
    def rep(self) -> ParamVector:
        return self.orbit.rep

    @property
    def root_type(self) -> WeylType:
        return self.orbit.root_type

    def to_json(self) -> dict:
        return {"coords": self.rep.to_json(), "type": str(self.root_type), "case": self.case_id}

    def __str__(self) -> str:
        return str(self.orbit)


class EigenvalueParam(_Param):
    """A character of the algebra of invariant differential operators on G/H."""


class InfinitesimalCharacter(_Param):
    """A character of the centre of the enveloping algebra of l."""


def laplacian_eigenvalue(lam: EigenvalueParam | Sequence, rho: Sequence, scale: Fraction | int = 1) -> GaussianRational:
    """``<lam, lam> - <rho, rho>`` under the form ``scale * sum(x_i y_i)``."""
    v = lam.rep if isinstance(lam, _Param) else ParamVector(lam)
    if len(v) != len(rho):
        raise ValueError(f"dimension mismatch: parameter of length {len(v)}, rho of length {len(rho)}")
    return dot(v, v, scale) - dot(rho, rho, scale)


def laplacian_eigenvalue_for_case(lam: EigenvalueParam, case: TransferCase) -> GaussianRational:
    form = require_form(case, "G")
    return laplacian_eigenvalue(lam, form.rho, form.scale)


def casimir_eigenvalue_for_case(chi: InfinitesimalCharacter, case: TransferCase) -> GaussianRational:
    """Scalar by which the Casimir of ``L`` acts on a representation with character ``chi``."""
    form = require_form(case, "L")
    return laplacian_eigenvalue(chi.rep, form.rho, form.scale)


def eta_involution(chi: InfinitesimalCharacter) -> InfinitesimalCharacter:
    """Pull back along ``Y_1...Y_m -> (-Y_m)...(-Y_1)``: the class of ``-rep``."""
    return InfinitesimalCharacter(-chi.orbit, chi.case_id)


def _resolve(case: TransferCase | str) -> TransferCase:
    return case_lookup(case) if isinstance(case, str) else case


def param_from_coords(coords: Sequence, case: TransferCase | str, side: str):
    """Canonicalise raw coordinates on the G side (eigenvalue) or L side (infinitesimal character)."""
    case = _resolve(case)
    if side == "G":
        t, cls = case.g_side_weyl, EigenvalueParam
    elif side == "L":
        t, cls = case.l_side_weyl, InfinitesimalCharacter
    else:
        raise ValueError(f"side must be 'G' or 'L', got {side!r}")
    if t is None:
        raise ValueError(f"case {case.id!r}: {side}-side Weyl type is external")
    return cls(OrbitClass(t, ParamVector(coords)), case.id)


def param_from_json(payload, case: TransferCase | str | None = None, side: str = "L", path: str = "$"):
    """Read ``{"coords": [...], "type": "B2", "case": "..."}``.

    ``type`` and ``case`` are optional when ``case`` is supplied by the caller,
    but must agree with it when present.
    """
    if not isinstance(payload, dict):
        raise SchemaError("expected an object with 'coords'", path)
    if "coords" not in payload:
        raise SchemaError("missing field 'coords'", path)
    try:
        coords = ParamVector.from_json(payload["coords"])
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc), f"{path}.coords") from None
    case_id = payload.get("case")
    if case is None:
        if case_id is None:
            raise SchemaError("missing field 'case'", path)
        case = case_id
    case = _resolve(case)
    if case_id is not None and case_id != case.id:
        raise SchemaError(f"parameter bound to case {case_id!r}, expected {case.id!r}", f"{path}.case")
    try:
        param = param_from_coords(coords, case, side)
    except ValueError as exc:
        raise SchemaError(str(exc), f"{path}.coords") from None
    if "type" in payload and parse_type(payload["type"]) != param.root_type:
        raise SchemaError(f"type {payload['type']!r} does not match {param.root_type}", f"{path}.type")
    return param


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    from math import isqrt

    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(z: GaussianRational) -> Optional[GaussianRational]:
    """A square root of ``z`` inside Q(i), or ``None`` if there is none."""
    z = gq(z)
    if z.is_zero():
        return GaussianRational(0)
    # (a + bi)^2 = z  with  a^2 = (|z| + re)/2, b^2 = (|z| - re)/2
    modulus = _rational_sqrt(z.norm())
    if modulus is None:
        return None
    a = _rational_sqrt((modulus + z.re) / 2)
    b = _rational_sqrt((modulus - z.re) / 2)
    if a is None or b is None:
        return None
    if z.im < 0:
        b = -b
    root = GaussianRational(a, b)
    return root if root * root == z else None


def lambda_from_eigenvalue(t: GaussianRational, case: TransferCase) -> Optional[EigenvalueParam]:
    """Recover the rank-one parameter with Laplacian eigenvalue ``t``, if it lies in Q(i)."""
    if case.rank_X != 1 or case.g_side_weyl is None:
        return None
    form = require_form(case, "G")
    square = gq(t) / form.scale + dot(form.rho, form.rho)
    root = gaussian_sqrt(square)
    if root is None:
        return None
    return param_from_coords([root], case, "G")


def eta_is_identity(t: WeylType | str) -> bool:
    return contains_minus_one(parse_type(t))
