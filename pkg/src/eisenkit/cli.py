"""Command-line surface: point evaluations, verification sweeps, Euler
products from place data, and decomposition tables.

Commands: eval, fourier, fe-check, xi, euler, decompose.  Every command is
deterministic for fixed arguments, emits text, JSON, or CSV, and exits with
0 on success, 2 on usage/precondition errors, 3 on data errors, and 4 on
numeric failures (poles, overflow).  Complex numbers are written as a single
token like ``0.3+2i`` (no spaces; ``j`` also accepted).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import warnings

from . import __version__
from ._kernels import backend
from .eisenstein import (
    DEFAULT_TRUNCATION,
    TruncationPolicy,
    eval_fourier,
    eval_lattice_sum,
    extract_coefficient_by_quadrature,
    first_coefficient_xi_check,
    fourier_coefficient,
    functional_equation_defect,
    functional_equation_grid,
    scattering_ratio,
)
from .errors import (
    ConvergenceWarning,
    DivergenceError,
    EisenkitError,
    InvalidTypeError,
    PlaceDataError,
    PoleError,
)
from .euler_products import partial_l, read_place_data
from .root_systems import TABLE_COLUMNS, enumerate_table
from .special_functions import xi_completed, xi_reflection_sample

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4


def parse_complex(token: str) -> complex:
    """Parse ``a+bi`` single-token complex notation (also bare reals, ``2i``)."""
    text = token.strip().replace("I", "i").replace("i", "j")
    if text.endswith("j") and text[:-1] in ("", "+", "-"):
        text = text[:-1] + "1j"
    try:
        return complex(text)
    except ValueError:
        raise ValueError(f"cannot parse complex number {token!r}; use forms like 0.3+2i") from None


def format_complex(value: complex) -> str:
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real:.12g}{sign}{abs(value.imag):.12g}i"


def _policy_from_args(args) -> TruncationPolicy:
    return TruncationPolicy(
        lattice_radius=args.radius,
        fourier_terms=args.terms,
        quadrature_nodes=getattr(args, "nodes", DEFAULT_TRUNCATION.quadrature_nodes),
    )


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return value


def _emit(report: dict, fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(report, stream, indent=2)
        stream.write("\n")
        return
    rows = report.get("rows")
    if fmt == "csv":
        writer = csv.writer(stream)
        if rows is not None:
            header = list(rows[0].keys()) if rows else []
            writer.writerow(header)
            for row in rows:
                writer.writerow([_csv_cell(row[k]) for k in header])
        else:
            writer.writerow(["key", "value"])
            for key, value in report.items():
                writer.writerow([key, _csv_cell(value)])
        return
    # text
    for key, value in report.items():
        if key == "rows":
            continue
        print(f"{key}: {value}", file=stream)
    if rows is not None:
        for row in rows:
            print("  " + "  ".join(f"{k}={v}" for k, v in row.items()), file=stream)


def _print_defaults(args) -> None:
    print(
        "defaults: "
        f"radius={args.radius} terms={args.terms} "
        f"nodes={getattr(args, 'nodes', DEFAULT_TRUNCATION.quadrature_nodes)} "
        f"format={args.format} kernel_backend={backend()}",
        file=sys.stderr,
    )


def _complex_fields(prefix: str, value: complex) -> dict:
    return {f"{prefix}_re": value.real, f"{prefix}_im": value.imag}


def cmd_eval(args) -> dict:
    z = parse_complex(args.z)
    s = parse_complex(args.s)
    policy = _policy_from_args(args)
    report = {
        "command": "eval",
        "z": format_complex(z),
        "s": format_complex(s),
        "method": args.method,
    }
    if args.method in ("lattice", "both"):
        lat = eval_lattice_sum(z, s, policy)
    if args.method in ("fourier", "both"):
        fou = eval_fourier(z, s, policy)
    if args.method == "lattice":
        report.update(_complex_fields("value", lat.value))
        report["tail_bound"] = lat.tail_bound
    elif args.method == "fourier":
        report.update(_complex_fields("value", fou.value))
        report["tail_bound"] = fou.tail_bound
    else:
        report.update(_complex_fields("lattice_value", lat.value))
        report["lattice_tail_bound"] = lat.tail_bound
        report.update(_complex_fields("fourier_value", fou.value))
        report["fourier_tail_bound"] = fou.tail_bound
        report["discrepancy"] = abs(lat.value - fou.value)
    return report


def cmd_fourier(args) -> dict:
    s = parse_complex(args.s)
    policy = _policy_from_args(args)
    a_n = fourier_coefficient(args.n, args.y, s)
    report = {
        "command": "fourier",
        "n": args.n,
        "y": args.y,
        "s": format_complex(s),
    }
    report.update(_complex_fields("a_n", a_n))
    if args.extract:
        extracted = extract_coefficient_by_quadrature(args.n, args.y, s, policy, source="lattice")
        report.update(_complex_fields("extracted", extracted))
        report["extraction_difference"] = abs(extracted - a_n)
    return report


def _grid_points(args) -> list[complex]:
    if args.points:
        return [parse_complex(tok) for tok in args.points.split(",")]
    return list(functional_equation_grid())


def cmd_fe_check(args) -> dict:
    policy = _policy_from_args(args)
    z = parse_complex(args.z)
    rows = []
    defects = []
    skipped = 0
    if args.check == "xi":
        points = (
            [parse_complex(tok) for tok in args.points.split(",")]
            if args.points
            else list(xi_reflection_sample())
        )
    else:
        points = _grid_points(args)
    for s in points:
        row = {"s": format_complex(s)}
        try:
            if args.check == "eisenstein":
                defect = functional_equation_defect(z, s, policy)
            elif args.check == "xi":
                defect = abs(xi_completed(s) - xi_completed(1.0 - s))
            elif args.check == "first-coefficient":
                defect = first_coefficient_xi_check(s)
            else:  # scattering
                defect = abs(scattering_ratio(s) * scattering_ratio(1.0 - s) - 1.0)
            row["defect"] = defect
            defects.append(defect)
        except (PoleError, DivergenceError) as exc:
            row["skipped"] = f"{type(exc).__name__}: pole exclusion"
            skipped += 1
        rows.append(row)
    return {
        "command": "fe-check",
        "check": args.check,
        "z": format_complex(z),
        "points": len(points),
        "skipped": skipped,
        "max_defect": max(defects) if defects else None,
        "rows": rows,
    }


def cmd_xi(args) -> dict:
    s = parse_complex(args.s)
    value = xi_completed(s)
    reflected = xi_completed(1.0 - s)
    report = {"command": "xi", "s": format_complex(s)}
    report.update(_complex_fields("xi", value))
    report.update(_complex_fields("xi_reflected", reflected))
    report["reflection_defect"] = abs(value - reflected)
    return report


def cmd_euler(args) -> dict:
    s = parse_complex(args.s)
    data = read_place_data(args.input)
    caught: list[str] = []
    with warnings.catch_warnings(record=True) as log:
        warnings.simplefilter("always", ConvergenceWarning)
        result = partial_l(data, s, args.max_q)
        caught = [str(w.message) for w in log]
    if not data.places:
        caught.append("no places parsed; value is the empty product 1")
    report = {
        "command": "euler",
        "input": str(args.input),
        "s": format_complex(s),
        "max_q": args.max_q,
        "factor_count": result.factor_count,
    }
    report.update(_complex_fields("value", result.value))
    report["tail_bound"] = result.tail_bound
    report["convergence_margin"] = result.margin
    report["warnings"] = caught
    return report


def cmd_decompose(args) -> dict:
    if args.table:
        specs = []
        for token in args.table.split(","):
            token = token.strip()
            letter, rank_text = token[0], token[1:]
            try:
                specs.append((letter, int(rank_text)))
            except ValueError:
                raise InvalidTypeError(f"bad type token {token!r}; expected e.g. G2") from None
    else:
        if args.cartan_type is None or args.rank is None:
            raise InvalidTypeError("decompose needs TYPE RANK arguments or --table")
        specs = [(args.cartan_type, args.rank)]
    rows = enumerate_table(specs)
    return {
        "command": "decompose",
        "columns": list(TABLE_COLUMNS),
        "rows": [row.as_dict() for row in rows],
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenkit",
        description="Eisenstein series, completed zeta, Euler products, root-system tables",
    )
    parser.add_argument("--version", action="version", version=f"eisenkit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--verbose", action="store_true", help="print effective defaults to stderr")
    common.add_argument(
        "--radius", type=int, default=DEFAULT_TRUNCATION.lattice_radius, help="lattice radius"
    )
    common.add_argument(
        "--terms", type=int, default=DEFAULT_TRUNCATION.fourier_terms, help="Fourier mode count"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate E(z, s)")
    p_eval.add_argument("--z", required=True, help="half-plane point, e.g. 0.3+1.2i")
    p_eval.add_argument("--s", required=True, help="spectral parameter, e.g. 2.5 or 3+1i")
    p_eval.add_argument("--method", choices=("lattice", "fourier", "both"), default="both")
    p_eval.set_defaults(func=cmd_eval)

    p_fourier = sub.add_parser("fourier", parents=[common], help="Fourier coefficient a_n(y, s)")
    p_fourier.add_argument("--n", type=int, required=True)
    p_fourier.add_argument("--y", type=float, required=True)
    p_fourier.add_argument("--s", required=True)
    p_fourier.add_argument(
        "--extract", action="store_true", help="also extract a_n by lattice quadrature"
    )
    p_fourier.add_argument("--nodes", type=int, default=DEFAULT_TRUNCATION.quadrature_nodes)
    p_fourier.set_defaults(func=cmd_fourier)

    p_fe = sub.add_parser("fe-check", parents=[common], help="verification sweeps")
    p_fe.add_argument(
        "--check",
        choices=("eisenstein", "xi", "first-coefficient", "scattering"),
        default="eisenstein",
    )
    p_fe.add_argument("--z", default="0.3+1.4i", help="half-plane point for the eisenstein sweep")
    p_fe.add_argument("--points", default=None, help="comma-separated s values overriding the grid")
    p_fe.set_defaults(func=cmd_fe_check)

    p_xi = sub.add_parser("xi", parents=[common], help="completed zeta at a point")
    p_xi.add_argument("--s", required=True)
    p_xi.set_defaults(func=cmd_xi)

    p_euler = sub.add_parser("euler", parents=[common], help="truncated Euler product from a file")
    p_euler.add_argument("--input", required=True, help="place-data file: q re im re im ...")
    p_euler.add_argument("--s", default="2")
    p_euler.add_argument("--max-q", type=int, default=100000, dest="max_q")
    p_euler.set_defaults(func=cmd_euler)

    p_dec = sub.add_parser("decompose", parents=[common], help="parabolic decomposition table")
    p_dec.add_argument("cartan_type", nargs="?", help="Cartan type letter A..G")
    p_dec.add_argument("rank", nargs="?", type=int)
    p_dec.add_argument("--table", default=None, help="comma-separated types, e.g. A2,G2,F4")
    p_dec.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        _print_defaults(args)
    try:
        report = args.func(args)
    except (PlaceDataError, OSError) as exc:
        _emit_error(exc, args.format)
        return EXIT_DATA
    except (PoleError, OverflowError) as exc:
        _emit_error(exc, args.format)
        return EXIT_NUMERIC
    except (EisenkitError, ValueError) as exc:
        _emit_error(exc, args.format)
        return EXIT_PRECONDITION
    _emit(report, args.format, sys.stdout)
    return EXIT_OK


def _emit_error(exc: Exception, fmt: str) -> None:
    record = {"error": type(exc).__name__, "message": str(exc)}
    if fmt == "json":
        json.dump(record, sys.stderr, indent=2)
        sys.stderr.write("\n")
    else:
        print(f"error [{record['error']}]: {record['message']}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
