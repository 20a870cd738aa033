from fractions import Fraction

import pytest

from spectral_transfer.catalog import (
    CIRCLE_CHARACTER,
    SO4M_U2M,
    case_list,
    case_lookup,
    casimir_scalar_on_tau,
    enumerate_fiber_types,
    fiber_term,
    make_tau,
)
from spectral_transfer.errors import ExternalDataError, UnknownCaseError
from spectral_transfer.qarith import ParamVector

TABLE_RANKS = {
    "(i)": "1", "(i)'": "1", "(ii)": "ceil(n/2)", "(iii)": "1", "(iv)": "n", "(v)": "1",
    "(v)'": "1", "(vi)": "1", "(vii)": "1", "(viii)": "2", "(ix)": "1",
}


def test_case_list_has_all_eleven_rows():
    rows = case_list()
    assert len(rows) == 11
    assert {c.row: c.rank_formula for c in rows} == TABLE_RANKS
    assert all(c.conditions_asserted for c in rows)


def test_lookup_examples():
    c = case_lookup("so2n2_so2n1:n=2")
    assert (c.G, c.H, c.L) == ("SO(4,2)", "SO(4,1)", "U(2,1)")
    assert c.rank_X == 1 and c.casimir_a == 2
    c = case_lookup("so8c_so7c")
    assert c.L == "Spin(7,1)" and c.casimir_a == 6
    assert c.type_I_empty is True
    c = case_lookup("group_manifold:sl2r")
    assert c.casimir_a == 1


def test_row_ii_parity_and_alias():
    assert case_lookup("so2n2_un1:n=3").type_I_empty is True
    assert case_lookup("so2n2_un1:n=3").rank_X == 2
    even = case_lookup("so2n2_un1:n=4")
    assert even.id == "so4m2_u2m1:m=2"
    assert even == case_lookup("so4m2_u2m1:m=2")
    assert even.rank_X == 2 and str(even.g_side_weyl) == "BC2" and str(even.l_side_weyl) == "B4"


@pytest.mark.parametrize("bad", ["nope", "so2n2_so2n1", "so2n2_so2n1:m=2", "so8c_so7c:n=1",
                                 "so2n2_so2n1_sun1:n=1", "group_manifold:sl3r", "so4m2_u2m1:m=0"])
def test_lookup_errors(bad):
    with pytest.raises(UnknownCaseError):
        case_lookup(bad)


def test_enumerate_examples():
    m2 = case_lookup("so4m2_u2m1:m=2")
    assert [t.payload for t in enumerate_fiber_types(m2, 1)] == [(0, 0), (1, 0), (1, 1)]
    gm = case_lookup("group_manifold:sl2r")
    assert gm.fiber_rule == CIRCLE_CHARACTER
    assert [t.payload for t in enumerate_fiber_types(gm, 2)] == [(-2,), (-1,), (0,), (1,), (2,)]
    m1 = case_lookup("so4m2_u2m1:m=1")
    assert [t.payload for t in enumerate_fiber_types(m1, 3)] == [(0,), (1,), (2,), (3,)]


def test_enumerate_external_raises():
    with pytest.raises(ExternalDataError):
        enumerate_fiber_types(case_lookup("so88_so87"), 2)


@pytest.mark.parametrize("m, bound", [(1, 4), (2, 3), (3, 2), (3, 4)])
def test_enumeration_is_box_partitions(m, bound):
    case = case_lookup(f"so4m2_u2m1:m={m}")
    got = [t.payload for t in enumerate_fiber_types(case, bound)]
    assert got == sorted(set(got))
    from math import comb

    assert len(got) == comb(m + bound, m)  # partitions in an m x bound box
    assert all(case.fiber_rule == SO4M_U2M for _ in got)


def test_make_tau_validation():
    case = case_lookup("so4m2_u2m1:m=2")
    with pytest.raises(ValueError):
        make_tau(case, (0, 1))
    with pytest.raises(ValueError):
        make_tau(case, (1,))
    with pytest.raises(ValueError):
        make_tau(case, (1, -1))
    with pytest.raises(ExternalDataError):
        make_tau(case_lookup("so44_spin43"), (0,))


def test_casimir_scalar_examples():
    gm = case_lookup("group_manifold:sl2r")
    # u(1) with form scale 1/4 on t*: dual element of the generator H (acting by n) is H/4
    for n in range(-5, 6):
        h_dual_coefficient = Fraction(1, 4)
        brute = n * (h_dual_coefficient * n)
        assert casimir_scalar_on_tau(make_tau(gm, n), gm) == brute == Fraction(n * n, 4)
    m2 = case_lookup("so4m2_u2m1:m=2")
    assert casimir_scalar_on_tau(make_tau(m2, (0, 0)), m2) == 0


def test_casimir_scalar_so4m_by_hand():
    # SO(8): rho = (3,2,1,0), mu = (2,2,1,1): <mu, mu + 2 rho> = 2*8 + 2*6 + 1*3 + 1*1
    m2 = case_lookup("so4m2_u2m1:m=2")
    assert casimir_scalar_on_tau(make_tau(m2, (2, 1)), m2) == 16 + 12 + 3 + 1


def test_casimir_monotone_in_each_j():
    for m in (1, 2, 3):
        case = case_lookup(f"so4m2_u2m1:m={m}")
        taus = enumerate_fiber_types(case, 4)
        values = {t.payload: casimir_scalar_on_tau(t, case) for t in taus}
        for p, v in values.items():
            for i in range(m):
                q = p[:i] + (p[i] + 1,) + p[i + 1:]
                if q in values:
                    assert values[q].re >= v.re


def test_fiber_term_sign():
    m1 = case_lookup("so4m2_u2m1:m=1")
    tau = make_tau(m1, (2,))
    assert fiber_term(tau, m1) == -casimir_scalar_on_tau(tau, m1)
    with pytest.raises(ExternalDataError):
        fiber_term(tau, case_lookup("so8c_so7c"))


def test_so4m_form_data():
    c = case_lookup("so4m2_u2m1:m=3")
    assert c.g_form.scale == Fraction(1, 2)
    assert c.g_form.rho == ParamVector([11, 7, 3])
    assert c.l_form.rho == ParamVector([Fraction(k, 2) for k in (11, 9, 7, 5, 3, 1)])
    assert c.lk_form.rho == ParamVector([5, 4, 3, 2, 1, 0])


def test_to_json_is_serializable():
    import json

    for c in case_list() + [case_lookup("so4m2_u2m1:m=1"), case_lookup("group_manifold:sl2r")]:
        json.dumps(c.to_json())
