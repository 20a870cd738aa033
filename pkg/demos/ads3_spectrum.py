"""
Discrete spectrum of a compact anti-de Sitter 3-manifold
=========================================================

The group-manifold AdS^3 = SL(2,R) x SL(2,R) / Diag has two kinds of
discrete eigenvalues: a lattice k(k+2)/4 coming from discrete series,
and -2 times the Maass eigenvalues of a hyperbolic surface.
"""

from fractions import Fraction

from spectral_transfer.ads3 import (
    DiscreteSeries,
    Principal,
    casimir_value,
    classify,
    inf_char,
    surface_to_ads3,
    type1_spectrum,
)

# type I: the lattice, with and without -1 in Gamma
print("type I, k <= 8:          ", [str(t) for t in type1_spectrum(8)])
print("type I, -1 in Gamma:     ", [str(t) for t in type1_spectrum(8, minus_one_in_gamma=True)])

# the same numbers from the discrete series varpi_{k+1}
print("from varpi_{k+1}:        ", [str(casimir_value(inf_char(DiscreteSeries(k + 1)))) for k in range(9)])

# tempered principal series all sit at or below -1/4
print("principal nu = 0, 1/2, 1:", [str(casimir_value(inf_char(Principal(Fraction(n, 2))))) for n in range(3)])

# type II: push Maass eigenvalues forward and classify
for mu in (Fraction(1, 4), Fraction(3, 16), 2, 0):
    t = surface_to_ads3(mu)
    c = classify(t, finite_volume=True)
    print(f"mu = {mu!s:5s} -> t = {t!s:6s} type I? {c.type_I_candidate!s:5s} type II? {c.type_II_candidate}")
