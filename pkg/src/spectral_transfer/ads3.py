"""The anti-de Sitter 3-space ``(SL(2,R) x SL(2,R)) / Diag(SL(2,R))``.

Harish-Chandra parameters of ``SL(2,R)`` live in ``C / {+-1}`` and are
normalised so the trivial representation has parameter 1; the Casimir then
acts by ``(h**2 - 1) / 4``.  Type-I eigenvalues are the lattice
``k(k+2)/4``; type-II eigenvalues coming from a hyperbolic surface are
``-2 * mu`` for Maass eigenvalues ``mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .catalog import case_lookup, make_tau
from .qarith import GaussianRational, gq
from .spectra import DiscDocument, DiscGammaLEntry

__all__ = [
    "Trivial",
    "Principal",
    "Complementary",
    "DiscreteSeries",
    "LimitDiscrete",
    "SL2Rep",
    "Ads3Classification",
    "inf_char",
    "casimir_value",
    "type1_value",
    "type1_spectrum",
    "surface_to_ads3",
    "classify",
    "maass_document",
    "GROUP_MANIFOLD_CASE",
]


def _sign(s: str) -> str:
    if s not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {s!r}")
    return s


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class Principal:
    """Unitary principal series ``pi_{i nu, delta}``."""

    nu: Fraction
    delta: str = "+"

    def __post_init__(self):
        object.__setattr__(self, "nu", Fraction(self.nu))
        _sign(self.delta)
        if self.nu < 0 or (self.delta == "-" and self.nu == 0):
            raise ValueError("principal series needs nu >= 0 (delta=+) or nu > 0 (delta=-)")


@dataclass(frozen=True)
class Complementary:
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if not 0 < self.lam < 1:
            raise ValueError("complementary series needs 0 < lambda < 1")


@dataclass(frozen=True)
class DiscreteSeries:
    """Holomorphic (``+``) or antiholomorphic (``-``) discrete series ``varpi_n``."""

    n: int
    sign: str = "+"

    def __post_init__(self):
        _sign(self.sign)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("discrete series index must be a positive integer")


@dataclass(frozen=True)
class LimitDiscrete:
    sign: str = "+"

    def __post_init__(self):
        _sign(self.sign)


SL2Rep = Union[Trivial, Principal, Complementary, DiscreteSeries, LimitDiscrete]


def _mod_sign(h: GaussianRational) -> GaussianRational:
    return max(h, -h)


def inf_char(rep: SL2Rep) -> GaussianRational:
    """Harish-Chandra parameter, as the representative of ``{h, -h}`` that is larger lexicographically."""
    if isinstance(rep, Trivial):
        h = GaussianRational(1)
    elif isinstance(rep, Principal):
        h = GaussianRational(0, rep.nu)
    elif isinstance(rep, Complementary):
        h = GaussianRational(rep.lam - 1)
    elif isinstance(rep, DiscreteSeries):
        h = GaussianRational(rep.n)
    elif isinstance(rep, LimitDiscrete):
        # realised in the principal series at s = 1, parameter s - 1
        h = GaussianRational(0)
    else:
        raise TypeError(f"not an SL(2,R) representation: {rep!r}")
    return _mod_sign(h)


def casimir_value(hc) -> GaussianRational:
    """``(h**2 - 1) / 4``."""
    h = gq(hc)
    return (h * h - 1) * Fraction(1, 4)


def type1_value(k: int) -> Fraction:
    return Fraction(k * (k + 2), 4)


def type1_spectrum(k_max: int, minus_one_in_gamma: bool = False, k0: int = 0) -> list[GaussianRational]:
    """``{k(k+2)/4 : k0 <= k <= k_max}`` with ``k`` restricted to even values when ``-1`` lies in Gamma."""
    if not 0 <= k0 <= k_max:
        raise ValueError("need 0 <= k0 <= k_max")
    step_ok = (lambda k: k % 2 == 0) if minus_one_in_gamma else (lambda k: True)
    return [GaussianRational(type1_value(k)) for k in range(k0, k_max + 1) if step_ok(k)]


def surface_to_ads3(mu) -> GaussianRational:
    """Maass eigenvalue ``mu >= 0`` of a hyperbolic surface to the AdS^3 Laplacian eigenvalue ``-2 mu``."""
    mu = gq(mu)
    if not mu.is_real() or mu.re < 0:
        raise ValueError(f"Maass eigenvalue must be a nonnegative rational, got {mu}")
    return mu * -2


@dataclass(frozen=True)
class Ads3Classification:
    value: GaussianRational
    type_I_candidate: bool
    witness_k: Optional[int]
    type_II_candidate: bool
    zero_special: bool

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "text": str(self.value),
            "type_I_candidate": self.type_I_candidate,
            "witness_k": self.witness_k,
            "type_II_candidate": self.type_II_candidate,
            "zero_special": self.zero_special,
        }


def _lattice_index(t: GaussianRational) -> Optional[int]:
    """``k >= 0`` with ``t == k(k+2)/4``, if any."""
    if not t.is_real():
        return None
    disc = 4 * t.re + 1  # = (k+1)^2
    if disc < 1 or disc.denominator != 1:
        return None
    root = isqrt(disc.numerator)
    return root - 1 if root * root == disc.numerator else None


def classify(t, finite_volume: bool) -> Ads3Classification:
    t = gq(t)
    k = _lattice_index(t)
    type_II = t.is_real() and (t.re < 0 or (t.re == 0 and finite_volume))
    return Ads3Classification(
        value=t,
        type_I_candidate=k is not None,
        witness_k=k,
        type_II_candidate=type_II,
        zero_special=t.is_zero(),
    )


GROUP_MANIFOLD_CASE = "group_manifold:sl2r"


def maass_document(eigenvalues, finite_volume: bool):
    """Package Maass eigenvalues of ``'Gamma\\H^2`` as type-II input for the group-manifold case.

    Each ``mu`` becomes a non-discrete-series entry on the trivial fiber type
    whose Casimir acts by ``-2 mu``.  ``mu = 0`` (constant functions) is only
    admissible for finite volume.
    """
    case = case_lookup(GROUP_MANIFOLD_CASE)
    trivial = make_tau(case, (0,))
    entries = []
    for i, mu in enumerate(eigenvalues):
        mu = gq(mu)
        if mu.is_zero() and not finite_volume:
            raise ValueError("eigenvalue 0 requires finite volume (constants are not square integrable)")
        entries.append(
            DiscGammaLEntry(
                label=f"maass[{i}] mu={mu}",
                case_id=case.id,
                taus=(trivial,),
                hc_discrete=False,
                casimir=surface_to_ads3(mu),
            )
        )
    return DiscDocument(case.id, entries)
