"""Command-line interface.

Exit codes: 0 success, 2 usage or malformed input, 3 I/O error,
4 no metric (complex spectrum), 5 near-defective (too close to an EP),
1 any other numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import contextmanager

import numpy as np

from . import domain, epn, reports
from .errors import ComplexSpectrum, EP4Error, InvalidGrid, NearDefective
from .secular import DEGENERACY_TOL, SecularQuartic

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_NO_METRIC, EXIT_DEFECTIVE = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _g(x: float) -> str:
    return f"{x:.17g}"


def _cstr(z, fmt=_g) -> str:
    re, im = z
    if im == 0.0:
        return fmt(re)
    return f"{fmt(re)}{'+' if im >= 0 else '-'}{fmt(abs(im))}i"


def _short(x: float) -> str:
    return f"{x:.15g}"


def _dump_matrix_payload(payload: dict, out) -> None:
    # one matrix row per line keeps the JSON readable and diffable
    rows = payload.pop("matrix")
    head = json.dumps(payload)[:-1]
    body = ",\n  ".join(json.dumps(r) for r in rows)
    sep = ", " if payload else ""
    out.write(f'{head}{sep}"matrix": [\n  {body}\n]}}\n')


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be strictly positive")
    return v


def _complex(text: str) -> complex:
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    with fh:
        yield fh


def _read_matrix(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return epn.matrix_from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _matrix_rows(A) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(A, dtype=complex)]


def cmd_classify(args) -> int:
    rep = reports.classification_report(args.alpha, args.beta, args.gamma, args.tol)
    with _output(args.out) as out:
        if args.format == "json":
            json.dump(rep, out, indent=1)
            out.write("\n")
        else:
            out.write(f"verdict: {rep['verdict']}\n")
            roots = ", ".join(
                _cstr(r, _short) + (f" (x{m})" if m > 1 else "")
                for r, m in zip(rep["roots"], rep["multiplicity"]))
            out.write(f"roots: {roots}\n")
            pts = ", ".join(f"{_g(e)} [S={_g(v)}]"
                            for e, v in zip(rep["stationary_points"], rep["stationary_values"]))
            out.write(f"stationary: {pts}\n")
            if rep["alpha_interval"] is not None:
                lo, hi = rep["alpha_interval"]
                out.write(f"alpha_interval: ({_g(lo)}, {_g(hi)})\n")
    if args.plot_data:
        s = SecularQuartic(args.alpha, args.beta, args.gamma)
        with _output(args.plot_data) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["x", "s", "ds"])
            for row in reports.secular_curves(s, args.samples):
                w.writerow([_g(v) for v in row])
    return EXIT_OK


def cmd_scan(args) -> int:
    grid = domain.GridSpec.square(args.beta_range, args.alpha_range, args.grid)
    rows = domain.scan_domain(args.gamma, grid, args.tol)
    with _output(args.out) as out:
        if args.format == "json":
            out.write(domain.scan_to_json(rows))
            out.write("\n")
        else:
            domain.write_scan_csv(rows, out)
    return EXIT_OK


def cmd_bh(args) -> int:
    if args.N < 2:
        raise UsageError("N must be >= 2")
    if args.g_range is not None:
        gs = reports.g_range(*args.g_range)
    elif args.g is not None:
        gs = [args.g]
    else:
        raise UsageError("give a coupling g or --g-range START STOP STEP")
    rows = reports.bh_report(args.N, gs)
    with _output(args.out) as out:
        if args.format == "json":
            json.dump({"N": args.N, "rows": rows}, out, indent=1)
            out.write("\n")
        elif args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["g", "real", "ep_order"] + [f"e{k}" for k in range(args.N)])
            for r in rows:
                w.writerow([_g(r["g"]), int(r["real"]), r["ep_order"] or ""]
                           + [_cstr(v) for v in r["eigenvalues"]])
        else:
            for r in rows:
                flag = "real" if r["real"] else "complex"
                ep = f"  EP{r['ep_order']}" if r["ep_order"] else ""
                ev = ", ".join(_cstr(v, _short) for v in r["eigenvalues"])
                out.write(f"g={r['g']!r}  {flag}{ep}  [{ev}]\n")
    return EXIT_OK


def cmd_jordan(args) -> int:
    if args.matrix is None:
        if args.dim is None:
            raise UsageError("give --dim N or --matrix FILE")
        if args.dim < 1:
            raise UsageError("--dim must be >= 1")
        J = epn.jordan_matrix(args.dim, args.eigenvalue)
        payload = {"dim": args.dim, "matrix": _matrix_rows(J)}
    else:
        H = _read_matrix(args.matrix)
        order = epn.epn_order(H, args.eigenvalue, args.tol)
        T = epn.transition_matrix(H, args.eigenvalue)
        payload = {"dim": T.dim, "epn_order": order, "chain_residual": T.chain_residual,
                   "matrix": _matrix_rows(T.U)}
    with _output(args.out) as out:
        _dump_matrix_payload(payload, out)
    return EXIT_OK


def cmd_avatar(args) -> int:
    H = _read_matrix(args.matrix)
    if args.transition is not None:
        U = _read_matrix(args.transition)
    elif args.reference is not None:
        U = epn.transition_matrix(_read_matrix(args.reference), args.eigenvalue).U
    else:
        U = epn.transition_matrix(H, args.eigenvalue).U
    P = epn.to_avatar(H, U)
    with _output(args.out) as out:
        _dump_matrix_payload({"dim": P.shape[0], "matrix": _matrix_rows(P)}, out)
    return EXIT_OK


def cmd_hermitize(args) -> int:
    H = _read_matrix(args.matrix)
    rep = reports.hermitize_report(H, args.weights)
    with _output(args.out) as out:
        if args.format == "json":
            json.dump(rep, out, indent=1)
            out.write("\n")
        else:
            for key in ("dim", "quasi_hermiticity_residual", "metric_min_eigenvalue",
                        "dyson_residual", "hermiticity_residual", "isospectrality_error"):
                v = rep[key]
                out.write(f"{key}: {v if isinstance(v, int) else _g(v)}\n")
            out.write("theta:\n")
            for row in rep["theta"]:
                out.write("  " + "  ".join(_cstr(v, _short) for v in row) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ep4", description="Fourth-order exceptional points in quasi-Hermitian models.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--tol", type=_positive, default=DEGENERACY_TOL,
                     help="relative degeneracy/rank tolerance (default %(default)g)")

    p = sub.add_parser("classify", parents=[common, tol],
                       help="classify (alpha, beta, gamma) against the physical domain")
    p.add_argument("alpha", type=float)
    p.add_argument("beta", type=float)
    p.add_argument("gamma", type=float)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--plot-data", metavar="PATH", help="write sampled S(x), S'(x) as CSV")
    p.add_argument("--samples", type=int, default=401)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", parents=[common, tol], help="classify a (beta, alpha) grid")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--beta-range", type=float, nargs=2, metavar=("LO", "HI"), default=[-9.0, 9.0])
    p.add_argument("--alpha-range", type=float, nargs=2, metavar=("LO", "HI"), default=[-10.0, 1.0])
    p.add_argument("--grid", type=int, default=51, metavar="R", help="points per axis")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bh", parents=[common], help="Bose-Hubbard benchmark spectra")
    p.add_argument("N", type=int)
    p.add_argument("g", type=float, nargs="?")
    p.add_argument("--g-range", type=float, nargs=3, metavar=("START", "STOP", "STEP"))
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_bh)

    p = sub.add_parser("jordan", parents=[common, tol],
                       help="print J_N(x), or the transition matrix of a matrix file")
    p.add_argument("--dim", type=int)
    p.add_argument("--eigenvalue", type=_complex, default=0j, metavar="X")
    p.add_argument("--matrix", metavar="FILE")
    p.set_defaults(func=cmd_jordan, tol=epn.RANK_TOL)

    p = sub.add_parser("avatar", parents=[common], help="apply P = U^-1 H U")
    p.add_argument("--matrix", required=True, metavar="FILE", help="Hamiltonian H")
    p.add_argument("--transition", metavar="FILE", help="transition matrix U")
    p.add_argument("--reference", metavar="FILE",
                   help="EP-limit Hamiltonian to build U from (default: H itself)")
    p.add_argument("--eigenvalue", type=_complex, default=0j, metavar="X")
    p.set_defaults(func=cmd_avatar)

    p = sub.add_parser("hermitize", parents=[common], help="metric, Dyson map and Hermitian partner")
    p.add_argument("matrix", metavar="FILE")
    p.add_argument("--weights", type=_positive, nargs="+")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_hermitize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ComplexSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_METRIC
    except NearDefective as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFECTIVE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, InvalidGrid, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EP4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
