import json
import subprocess
import sys
from fractions import Fraction

import pytest

from spectral_transfer.cli import main
from spectral_transfer.qarith import GaussianRational


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def scalar(payload):
    return GaussianRational.from_json(payload)


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--json")
    assert code == 0
    ids = [c["id"] for c in json.loads(out)]
    assert len(ids) == 12 and "group_manifold:sl2r" in ids
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "so8c_so7c" in out


def test_catalog_show(capsys):
    code, out, _ = run(capsys, "catalog", "show", "so2n2_so2n1:n=3")
    assert code == 0 and json.loads(out)["L"] == "U(3,1)"
    code, _, err = run(capsys, "catalog", "show", "nope")
    assert code == 2 and "nope" in err


def test_transfer_both_directions(capsys):
    code, out, _ = run(capsys, "transfer", "--case", "so4m2_u2m1:m=2", "--tau", "2,0", "--lambda", "7,3")
    assert code == 0
    nu = [scalar(x) for x in json.loads(out)["nu"]["coords"]]
    assert nu == [Fraction(k, 2) for k in (9, 7, 3, 1)]
    code, out, _ = run(capsys, "transfer", "--case", "so4m2_u2m1:m=2", "--tau", "2,0", "--nu", "1/2,3/2,7/2,9/2")
    payload = json.loads(out)
    assert code == 0 and payload["roundtrip_ok"] is True
    assert [scalar(x) for x in payload["lambda"]["coords"]] == [7, 3]


def test_transfer_errors(capsys):
    assert run(capsys, "transfer", "--case", "so4m2_u2m1:m=1", "--tau", "2", "--nu", "4,1")[0] == 3
    assert run(capsys, "transfer", "--case", "so88_so87", "--tau", "0", "--lambda", "1")[0] == 3
    assert run(capsys, "transfer", "--case", "so4m2_u2m1:m=1", "--tau", "2", "--lambda", "x")[0] == 2


def test_ads3_type1(capsys):
    code, out, _ = run(capsys, "ads3", "type1", "--kmax", "4", "--k0", "0")
    payload = json.loads(out)
    assert code == 0
    assert [e["text"] for e in payload["spectrum"]] == ["0", "3/4", "2", "15/4", "6"]
    code, out, _ = run(capsys, "ads3", "type1", "--kmax", "4", "--k0", "0", "--minus-one")
    assert [e["k"] for e in json.loads(out)["spectrum"]] == [0, 2, 4]
    assert run(capsys, "ads3", "type1", "--kmax", "1", "--k0", "3")[0] == 2


def test_ads3_classify(capsys):
    code, out, _ = run(capsys, "ads3", "classify", "--value=-1/2")
    payload = json.loads(out)
    assert code == 0 and payload["type_II_candidate"] and not payload["type_I_candidate"]


def test_push_surface_matches_golden(capsys, tmp_path, data_dir):
    target = tmp_path / "disc.json"
    code, _, _ = run(capsys, "ads3", "push-surface", "--input", str(data_dir / "maass10_eigenvalues.json"),
                     "--output", str(target))
    assert code == 0
    assert target.read_bytes() == (data_dir / "maass10_disc.json").read_bytes()


def test_push_surface_rejects(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    for payload in ({"eigenvalues": [0.25]}, {"eigenvalues": ["-1"]}, {"eigenvalues": ["0"], "finite_volume": False},
                    {"values": []}):
        bad.write_text(json.dumps(payload))
        assert run(capsys, "ads3", "push-surface", "--input", str(bad))[0] == 2


def test_assemble_matches_golden(capsys, data_dir):
    code, out, _ = run(capsys, "assemble", "--case", "group_manifold:sl2r", "--input", str(data_dir / "sl2r_disc.json"))
    assert code == 0
    assert out.encode("utf-8") == (data_dir / "sl2r_spectrum.json").read_bytes()


def test_assemble_errors(capsys, tmp_path, data_dir):
    assert run(capsys, "assemble", "--case", "so4m2_u2m1:m=1", "--input", str(data_dir / "sl2r_disc.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"case": "group_manifold:sl2r", "entries": [{"label": "x"}]}')
    code, _, err = run(capsys, "assemble", "--case", "group_manifold:sl2r", "--input", str(bad))
    assert code == 2 and "$.entries[0]" in err
    assert run(capsys, "assemble", "--case", "group_manifold:sl2r", "--input", str(tmp_path / "missing.json"))[0] == 2
    unreachable = tmp_path / "u.json"
    unreachable.write_text('{"case": "so4m2_u2m1:m=1", "entries": [{"label": "x", "hc_discrete": false, '
                           '"taus": [[2]], "chi": {"coords": ["4", "1"]}}]}')
    code, _, err = run(capsys, "assemble", "--case", "so4m2_u2m1:m=1", "--input", str(unreachable))
    assert code == 3 and "x" in err


def test_argparse_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spectral_transfer.cli", "ads3", "type1", "--kmax", "2", "--k0", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["kmax"] == 2
