"""Transfer maps between eigenvalue parameters on G/H and infinitesimal characters of L.

For ``SO(4m,2)/U(2m,1)`` with ``L = SO(4m,1)`` the map attached to the fiber
type ``tau = (j_1, ..., j_m)`` interleaves the eigenvalue coordinates with
fixed slots::

    nu(lam, tau) = 1/2 (lam_1, 2 j_1 + 4m - 3, lam_2, 2 j_2 + 4m - 7, ..., lam_m, 2 j_m + 1)  mod W(B_2m)

For the group manifold ``SL(2,R) x SL(2,R) / Diag`` the L-side character is
the pair (character of the first factor, circle character of the fiber).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .catalog import (
    CIRCLE_CHARACTER,
    SO4M_U2M,
    TauParam,
    TransferCase,
    fiber_term,
)
from .errors import AmbiguousTransferError, ExternalDataError, NotInImageError, TransferError
from .hcparam import EigenvalueParam, InfinitesimalCharacter, param_from_coords
from .qarith import GaussianRational, ParamVector, gq
from .weyl import orbit_equal

__all__ = [
    "ScalarTransfer",
    "fixed_slots",
    "s_tau",
    "transfer_nu",
    "transfer_lambda",
    "scalar_transfer_for",
    "scalar_transfer_eigenvalue",
]


def _check_case(case: TransferCase, *params) -> None:
    case.require_transfer()
    for p in params:
        if p is None:
            continue
        if getattr(p, "case_id", case.id) != case.id:
            raise TransferError(f"parameter bound to case {p.case_id!r}, not {case.id!r}")


def fixed_slots(tau: TauParam, m: int) -> list[Fraction]:
    """The tau-determined coordinates ``(2 j_i + 4m - 4i + 1) / 2`` for ``i = 1..m``."""
    if len(tau.payload) != m:
        raise TransferError(f"fiber type {tau} has {len(tau.payload)} entries, expected {m}")
    return [Fraction(2 * j + 4 * m - 4 * i + 1, 2) for i, j in enumerate(tau.payload, start=1)]


def s_tau(lam: Sequence, tau: TauParam, case: TransferCase) -> ParamVector:
    """The affine map on raw coordinates, before passing to the Weyl quotient."""
    _check_case(case, tau)
    lam = ParamVector(lam)
    if case.fiber_rule == SO4M_U2M:
        m = case.fiber_m
        if len(lam) != m:
            raise TransferError(f"eigenvalue parameter has rank {len(lam)}, case {case.id} needs {m}")
        half = Fraction(1, 2)
        out = []
        for x, slot in zip(lam, fixed_slots(tau, m)):
            out.extend((x * half, GaussianRational(slot)))
        return ParamVector(out)
    if case.fiber_rule == CIRCLE_CHARACTER:
        if len(lam) != 1:
            raise TransferError(f"eigenvalue parameter has rank {len(lam)}, case {case.id} needs 1")
        return lam.concat(tau.payload)
    raise ExternalDataError(f"case {case.id!r}: transfer maps are not cataloged (external)")


def transfer_nu(lam: EigenvalueParam, tau: TauParam, case: TransferCase) -> InfinitesimalCharacter:
    """``nu(lam, tau)``: the L-infinitesimal character matching ``lam`` on the fiber ``tau``."""
    _check_case(case, lam, tau)
    return param_from_coords(s_tau(lam.rep, tau, case), case, "L")


def _leftovers(rep: ParamVector, slots: Sequence[Fraction]) -> list[GaussianRational] | None:
    """Remove one coordinate equal to each slot value; ``None`` if some slot is unmatched."""
    remaining = Counter(rep)
    for slot in slots:
        key = GaussianRational(slot)
        if remaining[key] == 0:
            return None
        remaining[key] -= 1
    return list(remaining.elements())


def transfer_lambda(nu: InfinitesimalCharacter, tau: TauParam, case: TransferCase) -> EigenvalueParam:
    """``lambda(nu, tau)``, the inverse of :func:`transfer_nu` on its image.

    Raises :class:`NotInImageError` when ``nu`` does not vanish on the kernel
    of the fiber action, i.e. the fixed slots of ``tau`` cannot be found in it.
    """
    _check_case(case, nu, tau)
    rep = nu.rep
    if case.fiber_rule == SO4M_U2M:
        slots = fixed_slots(tau, case.fiber_m)
        # slots are positive reals, so after sign normalisation any +-slot
        # coordinate appears exactly as the slot value; removal from a
        # multiset with distinct keys is unique
        leftovers = _leftovers(rep, slots)
        if leftovers is None:
            missing = [str(s) for s in slots if GaussianRational(s) not in rep]
            raise NotInImageError(
                f"{nu} is not in the image of nu(., {tau}): no coordinate equal to {', '.join(missing)}"
            )
        lam = param_from_coords([x * 2 for x in leftovers], case, "G")
    elif case.fiber_rule == CIRCLE_CHARACTER:
        if rep[1] != gq(tau.payload[0]):
            raise NotInImageError(f"{nu} has circle weight {rep[1]}, fiber type {tau} requires {tau.payload[0]}")
        lam = param_from_coords([rep[0]], case, "G")
    else:
        raise ExternalDataError(f"case {case.id!r}: transfer maps are not cataloged (external)")
    back = transfer_nu(lam, tau, case)
    if not orbit_equal(back.rep, rep, case.l_side_weyl):
        raise AmbiguousTransferError(f"round trip failed: nu(lambda({nu}), {tau}) = {back}")
    return lam


@dataclass(frozen=True)
class ScalarTransfer:
    """``t = a * s + c(tau)``: Laplacian eigenvalue from the L-Casimir eigenvalue ``s``."""

    a: Fraction
    c_of_tau: Callable[[TauParam], GaussianRational]

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("the Casimir constant a must be nonzero")


def scalar_transfer_for(case: TransferCase) -> ScalarTransfer:
    if case.casimir_a is None:
        raise ExternalDataError(f"case {case.id!r}: Casimir constant is external")
    return ScalarTransfer(case.casimir_a, lambda tau: fiber_term(tau, case))


def scalar_transfer_eigenvalue(s_nu, tau: TauParam | None, st: ScalarTransfer) -> GaussianRational:
    return gq(s_nu) * st.a + st.c_of_tau(tau)
