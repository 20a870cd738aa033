"""Classical Weyl groups acting on parameter vectors.

Supported families are A (ambient coordinates, permutations), B, C, BC
(signed permutations), D (signed permutations with an even number of sign
changes) and T (a torus factor with trivial Weyl group).  A
:class:`ProductType` glues several of these along consecutive coordinate
blocks, e.g. ``"C1xT1"`` for ``SL(2,R) x SO(2)``.

Orbits are identified with their lexicographic maximum, computed
combinatorially.  :func:`orbit_enumerate` is the brute-force counterpart
used to check it.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .qarith import GaussianRational, ParamVector

__all__ = [
    "RootSystemType",
    "ProductType",
    "WeylType",
    "OrbitClass",
    "parse_type",
    "canonical_representative",
    "orbit_equal",
    "orbit_enumerate",
    "positive_roots",
    "rho",
    "weyl_order",
    "contains_minus_one",
    "uniform_multiplicities",
    "ENUMERATION_MAX_RANK",
]

FAMILIES = ("A", "B", "C", "D", "BC", "T")
ENUMERATION_MAX_RANK = 8


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown root system family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.family == "D" and self.rank < 2:
            raise ValueError("type D requires rank >= 2")

    @property
    def dim(self) -> int:
        """Length of coordinate vectors (rank + 1 for ambient type A)."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def blocks(self) -> tuple[RootSystemType, ...]:
        return (self,)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class ProductType:
    factors: tuple[RootSystemType, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise ValueError("a product type needs at least two factors")

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def blocks(self) -> tuple[RootSystemType, ...]:
        return self.factors

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)


WeylType = Union[RootSystemType, ProductType]

_TYPE_RE = re.compile(r"^(BC|A|B|C|D|T)([0-9]+)$")


def parse_type(text: str | WeylType) -> WeylType:
    """Parse ``"B3"``, ``"BC2"`` or products like ``"C1xT1"``."""
    if isinstance(text, (RootSystemType, ProductType)):
        return text
    parts = text.strip().split("x")
    factors = []
    for part in parts:
        m = _TYPE_RE.match(part)
        if m is None:
            raise ValueError(f"cannot parse root system type {text!r}")
        factors.append(RootSystemType(m.group(1), int(m.group(2))))
    return factors[0] if len(factors) == 1 else ProductType(tuple(factors))


def _check_dim(v: Sequence, t: WeylType) -> None:
    if len(v) != t.dim:
        raise ValueError(f"dimension mismatch: vector of length {len(v)} for type {t} (expects {t.dim})")


def _split(v: Sequence, t: WeylType) -> list[tuple]:
    out, i = [], 0
    for block in t.blocks:
        out.append(tuple(v[i:i + block.dim]))
        i += block.dim
    return out


def _sign_normalize(x: GaussianRational) -> tuple[GaussianRational, bool]:
    """Return ``max(x, -x)`` and whether a flip was needed."""
    neg = -x
    return (neg, True) if neg > x else (x, False)


def _canonical_block(v: tuple, t: RootSystemType) -> tuple:
    fam = t.family
    if fam == "T":
        return v
    if fam == "A":
        return tuple(sorted(v, reverse=True))
    normalized = [_sign_normalize(x) for x in v]
    out = sorted((y for y, _ in normalized), reverse=True)
    if fam == "D":
        flips = sum(f for _, f in normalized)
        # a zero coordinate absorbs any sign change, so parity is free
        if flips % 2 == 1 and not any(y.is_zero() for y in out):
            out[-1] = -out[-1]
    return tuple(out)


def canonical_representative(v: Sequence, t: WeylType | str) -> ParamVector:
    """Lexicographically maximal element of the Weyl orbit of ``v``."""
    t = parse_type(t)
    v = ParamVector(v)
    _check_dim(v, t)
    out: list = []
    for block, part in zip(t.blocks, _split(v, t)):
        out.extend(_canonical_block(part, block))
    return ParamVector(out)


def orbit_equal(u: Sequence, v: Sequence, t: WeylType | str) -> bool:
    return canonical_representative(u, t) == canonical_representative(v, t)


def _orbit_block(v: tuple, t: RootSystemType) -> set[tuple]:
    if t.family == "T":
        return {v}
    if t.family == "A":
        return set(itertools.permutations(v))
    out = set()
    for signs in itertools.product((1, -1), repeat=len(v)):
        if t.family == "D" and signs.count(-1) % 2:
            continue
        signed = tuple(x if s == 1 else -x for x, s in zip(v, signs))
        out.update(itertools.permutations(signed))
    return out


def orbit_enumerate(v: Sequence, t: WeylType | str) -> set[ParamVector]:
    """Every element of the Weyl orbit of ``v``, by brute force.

    Exponential in the rank; refuses ranks above ``ENUMERATION_MAX_RANK``.
    """
    t = parse_type(t)
    v = ParamVector(v)
    _check_dim(v, t)
    if any(b.rank > ENUMERATION_MAX_RANK for b in t.blocks):
        raise ValueError(f"orbit enumeration limited to rank <= {ENUMERATION_MAX_RANK}")
    pieces = [_orbit_block(part, block) for block, part in zip(t.blocks, _split(v, t))]
    return {ParamVector(itertools.chain.from_iterable(combo)) for combo in itertools.product(*pieces)}


def weyl_order(t: WeylType | str) -> int:
    t = parse_type(t)
    order = 1
    for b in t.blocks:
        n = b.rank
        if b.family == "A":
            order *= math.factorial(n + 1)
        elif b.family in ("B", "C", "BC"):
            order *= 2**n * math.factorial(n)
        elif b.family == "D":
            order *= 2 ** (n - 1) * math.factorial(n)
    return order


def contains_minus_one(t: WeylType | str) -> bool:
    """Whether the longest element acts as ``-1`` on the coordinate space."""
    t = parse_type(t)
    for b in t.blocks:
        if b.family in ("A", "T"):
            return False
        if b.family == "D" and b.rank % 2:
            return False
    return True


# --- positive roots and rho -------------------------------------------------

def _root_label(kind: str, i: int, j: int | None = None) -> str:
    if kind == "e":
        return f"e{i}"
    if kind == "2e":
        return f"2e{i}"
    return f"e{i}{kind}e{j}"


def positive_roots(t: RootSystemType | str) -> dict[str, tuple[Fraction, ...]]:
    """Standard positive roots as ``label -> coordinates``.

    Labels look like ``"e1-e2"``, ``"e1+e3"``, ``"e2"`` and ``"2e1"``.
    Coordinates are 1-indexed in labels.
    """
    t = parse_type(t)
    if isinstance(t, ProductType):
        raise ValueError("positive_roots takes a single root system type")
    n = t.dim

    def vec(pairs):
        out = [Fraction(0)] * n
        for idx, c in pairs:
            out[idx] += c
        return tuple(out)

    roots: dict[str, tuple[Fraction, ...]] = {}
    if t.family == "T":
        return roots
    for i in range(n):
        for j in range(i + 1, n):
            roots[_root_label("-", i + 1, j + 1)] = vec([(i, 1), (j, -1)])
            if t.family != "A":
                roots[_root_label("+", i + 1, j + 1)] = vec([(i, 1), (j, 1)])
    if t.family in ("B", "BC"):
        for i in range(n):
            roots[_root_label("e", i + 1)] = vec([(i, 1)])
    if t.family in ("C", "BC"):
        for i in range(n):
            roots[_root_label("2e", i + 1)] = vec([(i, 2)])
    return roots


def rho(t: RootSystemType | str, multiplicities: Mapping[str, int] | None = None) -> ParamVector:
    """Half the sum of positive roots, counted with multiplicity.

    ``multiplicities`` must name exactly the positive roots of ``t``; when
    omitted every root has multiplicity one.
    """
    t = parse_type(t)
    roots = positive_roots(t)
    if multiplicities is None:
        multiplicities = {label: 1 for label in roots}
    missing = set(roots) - set(multiplicities)
    extra = set(multiplicities) - set(roots)
    if missing or extra:
        raise ValueError(
            f"multiplicity table mismatch for {t}: missing {sorted(missing)}, extraneous {sorted(extra)}"
        )
    total = [Fraction(0)] * t.dim
    for label, coords in roots.items():
        m = multiplicities[label]
        if m < 0:
            raise ValueError(f"negative multiplicity for root {label}")
        for k, c in enumerate(coords):
            total[k] += m * c
    return ParamVector(x / 2 for x in total)


def uniform_multiplicities(t: RootSystemType | str, **by_kind: int) -> dict[str, int]:
    """Multiplicity table assigning one value per root length class.

    Keyword names are ``middle`` (``e_i +- e_j``), ``short`` (``e_i``) and
    ``long`` (``2e_i``).
    """
    out = {}
    for label in positive_roots(t):
        if label.startswith("2e"):
            kind = "long"
        elif "+" in label or "-" in label:
            kind = "middle"
        else:
            kind = "short"
        out[label] = by_kind.get(kind, 1)
    return out


@dataclass(frozen=True)
class OrbitClass:
    """A point of ``C^n / W`` stored as its canonical representative."""

    root_type: WeylType
    rep: ParamVector

    def __post_init__(self):
        t = parse_type(self.root_type)
        object.__setattr__(self, "root_type", t)
        object.__setattr__(self, "rep", canonical_representative(self.rep, t))

    def __neg__(self) -> OrbitClass:
        return OrbitClass(self.root_type, -self.rep)

    def __str__(self) -> str:
        return f"[{', '.join(str(x) for x in self.rep)}] mod W({self.root_type})"
