"""
Transfer maps for SO(4m,2)/U(2m,1)
==================================

Eigenvalue parameters on G/H and infinitesimal characters of L = SO(4m,1)
are matched fiber type by fiber type.  Everything is exact.
"""

from spectral_transfer import case_lookup, make_tau, param_from_coords, transfer_lambda, transfer_nu
from spectral_transfer.catalog import casimir_scalar_on_tau, enumerate_fiber_types
from spectral_transfer.errors import NotInImageError
from spectral_transfer.hcparam import casimir_eigenvalue_for_case, laplacian_eigenvalue_for_case

case = case_lookup("so4m2_u2m1:m=2")
print(case.id, case.G, "/", case.H, " L =", case.L, " a =", case.casimir_a)

# fiber types with j_1 <= 2
taus = enumerate_fiber_types(case, 2)
print("fiber types:", [t.payload for t in taus])

# (7, 3) is rho itself; take something else
lam = param_from_coords((9, 2), case, "G")
for tau in taus:
    nu = transfer_nu(lam, tau, case)
    back = transfer_lambda(nu, tau, case)
    # two routes to the Laplacian eigenvalue
    t_direct = laplacian_eigenvalue_for_case(lam, case)
    t_casimir = case.casimir_a * casimir_eigenvalue_for_case(nu, case) - casimir_scalar_on_tau(tau, case)
    print(f"tau={tau.payload}  nu={nu}  back={back}  t={t_direct}  via Casimir={t_casimir}")

# an infinitesimal character missing the fixed slot has no preimage
m1 = case_lookup("so4m2_u2m1:m=1")
try:
    transfer_lambda(param_from_coords((4, 1), m1, "L"), make_tau(m1, (2,)), m1)
except NotInImageError as exc:
    print("not in image:", exc)

# complex parameters work the same way
nu = transfer_nu(param_from_coords(("3/2i",), m1, "G"), make_tau(m1, (0,)), m1)
print("imaginary lambda:", nu)
