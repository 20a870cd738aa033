from fractions import Fraction

import pytest

from spectral_transfer.catalog import case_lookup, make_tau
from spectral_transfer.errors import NotInImageError, SchemaError, TransferError
from spectral_transfer.hcparam import param_from_coords
from spectral_transfer.qarith import GaussianRational as G, ParamVector
from spectral_transfer.spectra import (
    DiscDocument,
    DiscGammaLEntry,
    assemble_spectrum,
    derive_compatible_taus,
    emit_disc_data,
    emit_spectrum,
    load_disc_data,
    load_spectrum,
)

GM = case_lookup("group_manifold:sl2r")
M1 = case_lookup("so4m2_u2m1:m=1")
HALF = Fraction(1, 2)


def chi_entry(label, case, coords, taus, discrete):
    return DiscGammaLEntry(label, case.id, tuple(make_tau(case, t) for t in taus), discrete,
                           chi=param_from_coords(coords, case, "L"))


def test_holomorphic_weight_two():
    out = assemble_spectrum([chi_entry("w2", GM, (2, -3), [-3], True)], GM)
    assert len(out) == 1
    assert out[0].lam.rep == ParamVector((2,)) and out[0].t_lambda == Fraction(3, 4)
    assert out[0].type_tag == "I"


def test_casimir_entry_is_type_two():
    e = DiscGammaLEntry("m", GM.id, (make_tau(GM, 0),), False, casimir=G(Fraction(-1, 2)))
    (out,) = assemble_spectrum([e], GM)
    assert out.type_tag == "II" and out.t_lambda == Fraction(-1, 2)
    assert out.lam.rep == ParamVector((G(0, 1),))


def test_irrational_parameter_has_no_lambda():
    e = DiscGammaLEntry("m", GM.id, (make_tau(GM, 0),), False, casimir=G(Fraction(-2, 3)))
    (out,) = assemble_spectrum([e], GM)
    assert out.lam is None and out.t_lambda == Fraction(-2, 3)


def test_empty_input():
    assert assemble_spectrum([], GM) == []
    assert load_disc_data(emit_disc_data([], GM.id)).entries == []


def test_so4m_entries_by_hand():
    # chi = (7/2, 5/2) on tau=(2): slot 5/2 leaves 7/2, lambda = 7, t = (49 - 9)/2
    out = assemble_spectrum([chi_entry("d", M1, (7 * HALF, 5 * HALF), [(2,), (3,)], True)], M1)
    assert [(e.lam.rep[0], e.t_lambda) for e in out] == [(5, 8), (7, 20)]


def test_filters_partition():
    entries = [
        chi_entry("a", M1, (7 * HALF, HALF), [(0,)], True),
        chi_entry("b", M1, (3 * HALF, HALF), [(0,)], False),
        chi_entry("c", M1, (G(0, 2), 3 * HALF), [(1,)], False),
    ]
    full = assemble_spectrum(entries, M1)
    one = assemble_spectrum(entries, M1, "I")
    two = assemble_spectrum(entries, M1, "II")
    assert sorted(one + two, key=lambda e: e.sort_key()) == full
    assert {e.type_tag for e in one} == {"I"} and {e.type_tag for e in two} == {"II"}
    with pytest.raises(ValueError):
        assemble_spectrum(entries, M1, "III")


def test_output_sorted_and_deterministic():
    entries = [chi_entry("x", GM, (3, -4), [-4], True), chi_entry("y", GM, (2, -3), [-3], True)]
    a = assemble_spectrum(entries, GM)
    b = assemble_spectrum(list(reversed(entries)), GM)
    assert a == b and [e.source_label for e in a] == ["y", "x"]


def test_collisions_flagged():
    entries = [chi_entry("d", GM, (2, 0), [0], True), chi_entry("c", GM, (2, 0), [0], False)]
    out = assemble_spectrum(entries, GM)
    assert len(out) == 2 and all(e.collision for e in out)
    assert all(e.collision for e in assemble_spectrum(entries, GM, "I"))


def test_not_in_image_carries_label():
    with pytest.raises(NotInImageError) as info:
        assemble_spectrum([chi_entry("bad", M1, (4, 1), [(2,)], False)], M1)
    assert info.value.label == "bad"


def test_entry_validation():
    tau = make_tau(GM, 0)
    with pytest.raises(ValueError):
        DiscGammaLEntry("x", GM.id, (), False, casimir=G(0))
    with pytest.raises(ValueError):
        DiscGammaLEntry("x", GM.id, (tau,), False)
    with pytest.raises(ValueError):
        DiscGammaLEntry("x", M1.id, (tau,), False, casimir=G(0))
    e = DiscGammaLEntry("x", GM.id, (tau,), False, casimir=G(0))
    with pytest.raises(TransferError):
        assemble_spectrum([e], M1)


def test_blattner_hook_is_a_stub():
    with pytest.raises(NotImplementedError):
        derive_compatible_taus(None, GM)


@pytest.mark.parametrize("name", ["sl2r_disc", "so4m2_m1_disc", "maass10_disc"])
def test_golden_disc_round_trip(data_dir, name):
    raw = (data_dir / f"{name}.json").read_bytes()
    assert emit_disc_data(load_disc_data(raw)) == raw


@pytest.mark.parametrize("name", ["sl2r", "so4m2_m1", "maass10"])
def test_golden_spectrum(data_dir, name):
    doc = load_disc_data((data_dir / f"{name}_disc.json").read_bytes())
    expected = (data_dir / f"{name}_spectrum.json").read_bytes()
    assert emit_spectrum(assemble_spectrum(doc, doc.case_id), doc.case_id) == expected
    case_id, entries = load_spectrum(expected)
    assert emit_spectrum(entries, case_id) == expected


def test_sl2r_golden_values(data_dir):
    doc = load_disc_data((data_dir / "sl2r_disc.json").read_bytes())
    got = {e.source_label: e.t_lambda for e in assemble_spectrum(doc, doc.case_id)}
    # (h^2 - 1)/4 for h = 2, 3, i, i, 1
    assert got == {"holomorphic n=2": Fraction(3, 4), "holomorphic n=3": 2, "principal nu=1": Fraction(-1, 2),
                   "maass mu=1/4": Fraction(-1, 2), "trivial": 0}


BAD_DOCS = {
    "not json": b"{",
    "not object": b"[]",
    "unknown case": b'{"case": "nope", "entries": []}',
    "alias id": b'{"case": "so2n2_un1:n=2", "entries": []}',
    "no entries": b'{"case": "group_manifold:sl2r"}',
    "empty taus": b'{"case": "group_manifold:sl2r", "entries": [{"label": "x", "hc_discrete": false, "taus": [], "casimir": "0"}]}',
    "both": b'{"case": "group_manifold:sl2r", "entries": [{"label": "x", "hc_discrete": false, "taus": [[0]], "casimir": "0", "chi": {"coords": ["1", "0"]}}]}',
    "extra": b'{"case": "group_manifold:sl2r", "entries": [{"label": "x", "hc_discrete": false, "taus": [[0]], "casimir": "0", "z": 1}]}',
    "bad bool": b'{"case": "group_manifold:sl2r", "entries": [{"label": "x", "hc_discrete": 0, "taus": [[0]], "casimir": "0"}]}',
    "bad tau": b'{"case": "so4m2_u2m1:m=2", "entries": [{"label": "x", "hc_discrete": false, "taus": [[0, 1]], "casimir": "0"}]}',
    "bad scalar": b'{"case": "group_manifold:sl2r", "entries": [{"label": "x", "hc_discrete": false, "taus": [[0]], "casimir": "0.5"}]}',
}


@pytest.mark.parametrize("name", sorted(BAD_DOCS))
def test_schema_rejections(name):
    with pytest.raises(SchemaError):
        load_disc_data(BAD_DOCS[name])


def test_schema_error_paths():
    with pytest.raises(SchemaError) as info:
        load_disc_data(BAD_DOCS["empty taus"])
    assert info.value.path == "$.entries[0].taus"
    with pytest.raises(SchemaError) as info:
        load_disc_data(BAD_DOCS["bad tau"])
    assert info.value.path == "$.entries[0].taus[0]"


def test_scalar_string_accepted_and_canonicalised():
    doc = load_disc_data(b'{"case": "group_manifold:sl2r", "entries": [{"label": "x", "hc_discrete": false, "taus": [[0]], "casimir": "-1/2"}]}')
    assert doc[0].casimir == Fraction(-1, 2)
    assert b'"-1"' in emit_disc_data(doc)
