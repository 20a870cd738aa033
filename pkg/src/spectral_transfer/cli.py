"""Command-line entry point ``spectral-transfer``.

Exit codes: 0 success, 2 malformed input (schema, unknown case, bad
arguments), 3 transfer errors and requests on external cases.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import ads3
from .catalog import case_list, case_lookup, group_manifold, make_tau
from .errors import ExternalDataError, SchemaError, TransferError, UnknownCaseError
from .hcparam import param_from_coords
from .qarith import parse_scalar
from .spectra import assemble_spectrum, emit_disc_data, emit_spectrum, load_disc_data
from .transfer import transfer_lambda, transfer_nu

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_TRANSFER = 3


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _scalars(text: str):
    return [parse_scalar(x) for x in text.strip("[]() ").split(",") if x.strip()]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.strip("[]() ").split(",") if x.strip()]


def cmd_catalog(args) -> int:
    if args.action == "list":
        cases = case_list() + [group_manifold("sl2r")]
        if args.json:
            print(_dump([c.to_json() for c in cases]))
        else:
            for c in cases:
                a = c.casimir_a if c.casimir_a is not None else "external"
                rank = c.rank_X if c.rank_X is not None else c.rank_formula
                print(f"{c.id:24s} {c.row:15s} {c.G}/{c.H}  L={c.L}  rank={rank}  a={a}")
    else:
        print(_dump(case_lookup(args.id).to_json()))
    return EXIT_OK


def cmd_transfer(args) -> int:
    case = case_lookup(args.case)
    tau = make_tau(case, _ints(args.tau))
    if args.lam is not None:
        lam = param_from_coords(_scalars(args.lam), case, "G")
        nu = transfer_nu(lam, tau, case)
        print(_dump({"nu": nu.to_json()}))
    else:
        nu = param_from_coords(_scalars(args.nu), case, "L")
        lam = transfer_lambda(nu, tau, case)
        print(_dump({"lambda": lam.to_json(), "roundtrip_ok": transfer_nu(lam, tau, case) == nu}))
    return EXIT_OK


def cmd_ads3(args) -> int:
    if args.mode == "type1":
        values = []
        for t in ads3.type1_spectrum(args.kmax, args.minus_one, args.k0):
            k = ads3.classify(t, finite_volume=True).witness_k
            values.append({"k": k, "value": t.to_json(), "text": str(t)})
        print(_dump({"kmax": args.kmax, "k0": args.k0, "minus_one_in_gamma": args.minus_one, "spectrum": values}))
    elif args.mode == "classify":
        print(_dump(ads3.classify(parse_scalar(args.value), args.finite_volume).to_json()))
    else:
        raw = json.loads(Path(args.input).read_text(encoding="utf-8"))
        if not isinstance(raw, dict) or not isinstance(raw.get("eigenvalues"), list):
            raise SchemaError("expected an object with an 'eigenvalues' array")
        finite_volume = raw.get("finite_volume", True)
        if not isinstance(finite_volume, bool):
            raise SchemaError("expected bool", "$.finite_volume")
        mus = []
        for i, x in enumerate(raw["eigenvalues"]):
            if not isinstance(x, str):
                raise SchemaError("eigenvalues are strings like '1/4'", f"$.eigenvalues[{i}]")
            try:
                mus.append(parse_scalar(x))
            except ValueError as exc:
                raise SchemaError(str(exc), f"$.eigenvalues[{i}]") from None
        try:
            doc = ads3.maass_document(mus, finite_volume)
        except ValueError as exc:
            raise SchemaError(str(exc), "$.eigenvalues") from None
        _write(emit_disc_data(doc).decode("utf-8"), args.output)
    return EXIT_OK


def cmd_assemble(args) -> int:
    doc = load_disc_data(Path(args.input).read_bytes())
    case = case_lookup(args.case)
    if doc.case_id != case.id:
        raise SchemaError(f"input document is for case {doc.case_id!r}, not {case.id!r}", "$.case")
    spectrum = assemble_spectrum(doc, case, args.filter)
    _write(emit_spectrum(spectrum, case.id).decode("utf-8"), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-transfer",
        description="Discrete spectra of standard pseudo-Riemannian locally symmetric spaces, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or show cataloged cases")
    csub = p.add_subparsers(dest="action", required=True)
    pl = csub.add_parser("list")
    pl.add_argument("--json", action="store_true")
    ps = csub.add_parser("show")
    ps.add_argument("id")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("transfer", help="evaluate nu(lambda, tau) or lambda(nu, tau)")
    p.add_argument("--case", required=True)
    p.add_argument("--tau", required=True, help="comma-separated integers, e.g. 2,0")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="lam", help="eigenvalue coordinates, e.g. 7,3 or i/2")
    g.add_argument("--nu", help="infinitesimal character coordinates")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("ads3", help="AdS^3 spectra")
    asub = p.add_subparsers(dest="mode", required=True)
    pt = asub.add_parser("type1")
    pt.add_argument("--kmax", type=int, required=True)
    pt.add_argument("--k0", type=int, required=True)
    pt.add_argument("--minus-one", action="store_true", help="-1 lies in Gamma")
    pc = asub.add_parser("classify")
    pc.add_argument("--value", required=True, help="scalar such as 3/4; write negatives as --value=-1/2")
    pc.add_argument("--finite-volume", action="store_true")
    pp = asub.add_parser("push-surface")
    pp.add_argument("--input", required=True)
    pp.add_argument("--output")
    p.set_defaults(func=cmd_ads3)

    p = sub.add_parser("assemble", help="assemble Spec_d from Disc(Gamma\\L) data")
    p.add_argument("--case", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--filter", choices=("all", "I", "II"), default="all")
    p.add_argument("--output")
    p.set_defaults(func=cmd_assemble)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TransferError, ExternalDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRANSFER
    except (SchemaError, UnknownCaseError, ValueError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA


if __name__ == "__main__":
    sys.exit(main())
