"""Command-line interface.

    lctkit transform  --frft THETA --chirp JSON --u0 U0 --du DU --n N
    lctkit verify     all --frft THETA --seed 0
    lctkit compose    DESCRIPTOR DESCRIPTOR
    lctkit table      composition | frft-cycle | hybrid
    lctkit version

Exit codes: 0 ok, 1 failed check or table mismatch, 2 bad arguments,
3 divergent / near-degenerate / inadmissible input, 4 quadrature node
budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from importlib.metadata import PackageNotFoundError, version

from .algebra import Quaternion, Sl2cMatrix, composition_table, matrix_to_json, signed_basis_label
from .engine import QuadratureConfig, grid_points
from .errors import (
    ComplexScaleOnSamples,
    DegenerateMatrix,
    InadmissibleAuxiliary,
    NearDegenerate,
    NodeBudgetExceeded,
    NonConvergent,
    NotDegenerate,
)
from .identities import FAIL, IDENTITIES, run_suite
from .signals import GaussianChirp, SampledSignal
from . import transforms as tr

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3, 4

# the composition table with parity written as a P prefix
COMPOSITION_EXPECTED = {
    "1": ["1", "I", "J", "K"],
    "I": ["I", "P", "K", "PJ"],
    "J": ["J", "PK", "P", "I"],
    "K": ["K", "J", "PI", "P"],
}
FRFT_CYCLE_EXPECTED = ["1", "F", "P", "F^-1", "1"]
HYBRID_EXPECTED = ["J", "K", "J^-1", "K^-1", "J"]


class UsageError(Exception):
    pass


def _add_descriptor_args(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--frft", type=float, metavar="THETA", help="fractional Fourier transform F_theta")
    g.add_argument("--versor", type=float, nargs=3, metavar=("XI1", "ETA", "XI2"), help="Versor transform")
    g.add_argument("--hybrid", type=float, metavar="THETA", help="Fourier/Laplace hybrid H_theta")
    g.add_argument("--scale-i", type=float, metavar="THETA", help="domain rotation I_theta")
    g.add_argument("--frac-laplace", type=float, metavar="THETA", help="fractional Laplace K_theta")
    g.add_argument("--basis", choices=["1", "P", "I", "J", "K"], help="basis operator")
    g.add_argument("--lct", type=float, nargs=4, metavar=("A", "B", "C", "D"), help="real LCT matrix")
    g.add_argument("--descriptor", metavar="JSON", help='e.g. {"kind": "frft", "theta": 1.0}')
    p.add_argument("--degrees", action="store_true", help="angles are given in degrees")


def _add_quadrature_args(p: argparse.ArgumentParser):
    p.add_argument("--env-tol", type=float, default=QuadratureConfig.env_tol)
    p.add_argument("--oversample", type=float, default=QuadratureConfig.oversample)
    p.add_argument("--max-nodes", type=int, default=QuadratureConfig.max_nodes)


def _quadrature_config(args) -> QuadratureConfig:
    try:
        return QuadratureConfig(args.env_tol, args.oversample, args.max_nodes)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def descriptor_from_args(args) -> tr.NamedTransform:
    conv = math.radians if args.degrees else (lambda v: v)
    if args.frft is not None:
        return tr.make_frft(conv(args.frft))
    if args.versor is not None:
        return tr.make_versor(tuple(conv(v) for v in args.versor))
    if args.hybrid is not None:
        return tr.make_hybrid(conv(args.hybrid))
    if args.scale_i is not None:
        return tr.make_scale_i(conv(args.scale_i))
    if args.frac_laplace is not None:
        return tr.make_frac_laplace(conv(args.frac_laplace))
    if args.basis is not None:
        return tr.make_basis(args.basis)
    if args.lct is not None:
        a, b, c, d = args.lct
        m = Sl2cMatrix(a, b, c, d)
        if not m.is_unimodular(1e-9):
            raise UsageError(f"--lct matrix has determinant {m.det().real:.12g}, expected 1")
        return tr.make_raw(m)
    try:
        return tr.from_json(args.descriptor)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad transform descriptor: {exc}") from exc


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _check_grid(du, n):
    if not (du > 0 and n >= 1):
        raise UsageError("grid needs --du > 0 and --n >= 1")


def cmd_transform(args) -> int:
    t = descriptor_from_args(args)
    cfg = _quadrature_config(args)
    if args.chirp is not None:
        try:
            f = GaussianChirp.from_json(args.chirp)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad chirp JSON: {exc}") from exc
        if None in (args.u0, args.du, args.n):
            raise UsageError("chirp input needs --u0, --du and --n")
        u0, du, n = args.u0, args.du, args.n
        _check_grid(du, n)
        u = grid_points(u0, du, n)
        if args.method == "oracle":
            values = t.oracle(f)(u)
        else:
            values = t.quadrature(f, u, cfg)
    else:
        try:
            text = sys.stdin.read() if args.csv == "-" else open(args.csv).read()
            s = SampledSignal.from_csv(text)
        except (OSError, ValueError) as exc:
            raise UsageError(f"bad CSV input: {exc}") from exc
        if args.method == "oracle":
            raise UsageError("--method oracle needs --chirp input")
        u0 = s.x0 if args.u0 is None else args.u0
        du = s.dx if args.du is None else args.du
        n = len(s) if args.n is None else args.n
        _check_grid(du, n)
        values = t.sampled(s, grid_points(u0, du, n))
    _write(SampledSignal(u0, du, values).to_csv("u"), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    t = descriptor_from_args(args)
    cfg = _quadrature_config(args)
    names = IDENTITIES if args.identity == "all" else (args.identity,)
    reports = run_suite(t, names, seed=args.seed, order=args.order, cfg=cfg, formulas=args.formulas)
    payload = [r.to_json() for r in reports]
    _write(json.dumps(payload, indent=2, allow_nan=False) + "\n", args.output)
    return EXIT_FAIL if any(r.verdict == FAIL for r in reports) else EXIT_OK


def cmd_compose(args) -> int:
    try:
        t1, t2 = tr.from_json(args.first), tr.from_json(args.second)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad transform descriptor: {exc}") from exc
    m = tr.compose_matrices(t1, t2)
    out = {"matrix": matrix_to_json(m), "basis": signed_basis_label(m)}
    _write(json.dumps(out) + "\n", None)
    return EXIT_OK


def _parity_notation(label: str) -> str:
    if label == "-1":
        return "P"
    return "P" + label[1:] if label.startswith("-") else label


def _quaternion_power(q: Quaternion, n: int) -> Quaternion:
    out = Quaternion(1.0)
    for _ in range(n):
        out = out * q
    return out


def _quaternion_label(q: Quaternion) -> str:
    for name, comp in zip(("1", "i", "j", "k"), q.as_tuple()):
        if abs(comp - 1) < 1e-12 and abs(q.norm() - 1) < 1e-12:
            return name
        if abs(comp + 1) < 1e-12 and abs(q.norm() - 1) < 1e-12:
            return "-" + name
    return "?"


def table_lines(which: str) -> tuple[list[str], bool]:
    """Rendered table rows and whether they match the pinned expectations."""
    if which == "composition":
        table = composition_table()
        keys = ["1", "I", "J", "K"]
        rows = {r: [_parity_notation(table[(r, c)]) for c in keys] for r in keys}
        lines = ["o | " + " ".join(f"{k:>3}" for k in keys)]
        lines += [f"{r} | " + " ".join(f"{v:>3}" for v in rows[r]) for r in keys]
        return lines, rows == COMPOSITION_EXPECTED
    if which == "frft-cycle":
        i = Quaternion(0.0, 1.0)
        labels, lines = [], ["n | i^n | F^n"]
        for n in range(5):
            lab = tr.operator_label(tr.make_frft(n * math.pi / 2))
            lab = {"J": "F", "J^-1": "F^-1"}.get(lab, lab)
            labels.append(lab)
            lines.append(f"{n} | {_quaternion_label(_quaternion_power(i, n)):>3} | {lab}")
        return lines, labels == FRFT_CYCLE_EXPECTED
    if which == "hybrid":
        names = ["0", "pi/2", "pi", "3pi/2", "2pi"]
        labels, lines = [], ["theta | H_theta"]
        for k, name in enumerate(names):
            lab = tr.operator_label(tr.make_hybrid(k * math.pi / 2))
            labels.append(lab)
            lines.append(f"{name:>5} | {lab}")
        return lines, labels == HYBRID_EXPECTED
    raise UsageError(f"unknown table {which!r}")


def cmd_table(args) -> int:
    lines, ok = table_lines(args.table)
    _write("\n".join(lines) + "\n", None)
    if not ok:
        print("table does not match the expected values", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_version(args) -> int:
    try:
        v = version("artifact")
    except PackageNotFoundError:
        v = "unknown"
    print(f"lctkit {v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lctkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply a transform, write u,re,im CSV")
    _add_descriptor_args(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--chirp", metavar="JSON", help='{"amp":[re,im],"sigma":[re,im],"beta":[re,im]}')
    src.add_argument("--csv", metavar="PATH", help="x,re,im samples ('-' for stdin)")
    p.add_argument("--u0", type=float)
    p.add_argument("--du", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=["quadrature", "oracle"], default="quadrature")
    p.add_argument("--output", "-o")
    _add_quadrature_args(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check transform identities numerically, print JSON reports")
    p.add_argument("identity", choices=list(IDENTITIES) + ["all"])
    _add_descriptor_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", type=int, default=2, choices=[0, 1, 2, 3], help="derivative order")
    p.add_argument("--formulas", choices=["lct", "angles"], default="lct")
    p.add_argument("--output", "-o")
    _add_quadrature_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compose", help="matrix of the composite of two transforms")
    p.add_argument("first", metavar="DESCRIPTOR")
    p.add_argument("second", metavar="DESCRIPTOR")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("table", help="print an operator table computed from the matrices")
    p.add_argument("table", choices=["composition", "frft-cycle", "hybrid"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("version")
    p.set_defaults(func=cmd_version)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergent, NearDegenerate, InadmissibleAuxiliary, NotDegenerate,
            DegenerateMatrix, ComplexScaleOnSamples) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NodeBudgetExceeded as exc:
        print(f"error: NodeBudgetExceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
