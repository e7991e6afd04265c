"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 capability limit, 4 broken
internal invariant.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .codes import (
    Code,
    EaqecCode,
    StabilizerCode,
    as_stabilizer,
    check_bounds,
    dump_code,
    format_code,
    max_movable_ebits,
    parse_code,
    standard_to_eaqec,
)
from .decoder import STRATEGIES, NoiseModel, build_table, table_weight_profile
from .distill import (
    compare_schemes,
    compile_scheme,
    distill_then_eaqec_fidelity,
    distillation_fidelity,
    parse_scheme,
    resolve_code,
    unique_names,
)
from .errors import CapabilityError, EaqecError, InvariantError
from .fidelity import (
    enumerate_correctable,
    fidelity_lower_bounds,
    fidelity_poly,
    fidelity_value,
    monte_carlo_fidelity,
    require_exact,
)
from .symplectic import standard_form


class InputError(Exception):
    """Bad command-line input detected by the CLI itself."""


def fmt(x: float) -> str:
    """17 significant digits: lossless for doubles."""
    return f"{x:.17g}"


def load_code(args: argparse.Namespace) -> Code:
    if getattr(args, "file", None):
        path = Path(args.file)
        if not path.is_file():
            raise InputError(f"no such code file: {args.file}")
        return parse_code(path.read_text(), name=path.stem)
    if getattr(args, "code", None):
        return resolve_code(args.code)
    raise InputError("give --code NAME or --file PATH")


def parse_range(text: str) -> list[float]:
    """``0.1`` or ``start:stop:steps`` (inclusive, evenly spaced)."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            vals = [float(parts[0])]
        elif len(parts) == 3:
            start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
            if steps < 1:
                raise InputError("range needs at least one step")
            vals = [start] if steps == 1 else np.linspace(start, stop, steps).tolist()
        else:
            raise InputError(f"bad range {text!r}; use VALUE or START:STOP:STEPS")
    except ValueError:
        raise InputError(f"bad range {text!r}") from None
    if any(not 0.0 <= v <= 1.0 for v in vals):
        raise InputError(f"rates in {text!r} must lie in [0, 1]")
    return vals


def build_grid(args: argparse.Namespace) -> list[tuple[float, float]]:
    pa = parse_range(args.pa)
    if args.ratio is not None:
        if args.pb is not None:
            raise InputError("--pb and --ratio are mutually exclusive")
        grid = [(a, args.ratio * a) for a in pa]
        if any(b > 1 for _, b in grid):
            raise InputError("--ratio pushes p_b above 1")
        return grid
    pb = parse_range(args.pb) if args.pb is not None else [0.0]
    return [(a, b) for a in pa for b in pb]


def noise_of(args: argparse.Namespace) -> NoiseModel:
    return NoiseModel(args.pa, args.pb if args.pb is not None else 0.0)


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- code ----------------------------------------------------------------------


def _bound_lines(code: Code) -> list[str]:
    if code.d is None:
        return ["bounds: distance not declared"]
    c = code.c if isinstance(code, EaqecCode) else 0
    lines = []
    for name, b in check_bounds(code.n, code.k, code.d, c).items():
        status = "holds" if b.holds else "fails"
        eq = " (met with equality)" if b.equality else ""
        lines.append(f"{name}: {b.lhs} {b.relation} {b.rhs} {status}{eq}")
    return lines


def cmd_code_show(args: argparse.Namespace) -> int:
    code = load_code(args)
    c = code.c if isinstance(code, EaqecCode) else 0
    print(f"name: {code.name}")
    print(f"n={code.n} k={code.k} c={c} d={code.d if code.d is not None else '?'}")
    print("generators:")
    for line in format_code(code):
        print(f"  {line}")
    if isinstance(code, StabilizerCode):
        print(f"s = {max_movable_ebits(code)}")
    else:
        stab = as_stabilizer(code)
        s = standard_form(stab.check_matrix()).s if stab.r else 0
        print(f"s (extended code) = {s}")
    for line in _bound_lines(code):
        print(line)
    return 0


def cmd_code_transform(args: argparse.Namespace) -> int:
    code = load_code(args)
    if not isinstance(code, StabilizerCode):
        raise InputError("transform needs a stabilizer code")
    ea = standard_to_eaqec(code, args.c)
    text = dump_code(ea)
    perm = " ".join(str(q + 1) for q in ea.permutation)
    emit(f"# qubit order of the extended code: {perm}\n{text}", args.out)
    return 0


def cmd_code_bounds(args: argparse.Namespace) -> int:
    if args.code or args.file:
        code = load_code(args)
        n, k, d = code.n, code.k, code.d
        c = code.c if isinstance(code, EaqecCode) else 0
        if d is None:
            raise InputError("code has no declared distance; pass --n --k --d --c")
    else:
        if None in (args.n, args.k, args.d):
            raise InputError("give --code/--file or all of --n --k --d")
        n, k, d, c = args.n, args.k, args.d, args.c or 0
    print(f"[[{n},{k},{d};{c}]]")
    for name, b in check_bounds(n, k, d, c).items():
        status = "holds" if b.holds else "fails"
        eq = " (met with equality)" if b.equality else ""
        print(f"{name}: {b.lhs} {b.relation} {b.rhs} {status}{eq}")
    return 0


# -- table ---------------------------------------------------------------------


def _table(args: argparse.Namespace, code: Code):
    noise = noise_of(args) if args.strategy == "minprob" else None
    return build_table(code, args.strategy, noise)


def cmd_table_build(args: argparse.Namespace) -> int:
    code = load_code(args)
    table = _table(args, code)
    print(f"strategy: {table.strategy}")
    print(f"entries: {len(table)}")
    print("weight profile (w_A, w_B): count")
    for (a, b), n in table_weight_profile(table).items():
        print(f"  ({a}, {b}): {n}")
    return 0


def cmd_table_export(args: argparse.Namespace) -> int:
    code = load_code(args)
    table = _table(args, code)
    emit(table.to_csv(noise_of(args)), args.out)
    return 0


# -- fidelity ------------------------------------------------------------------


def cmd_fidelity(args: argparse.Namespace) -> int:
    code = load_code(args)
    mode = args.mode
    if mode != "mc":
        require_exact(code)
    if mode == "poly":
        enum = enumerate_correctable(code, _table(args, code), bivariate=False)
        if isinstance(code, EaqecCode) and args.perfect:
            enum = enumerate_correctable(code, _table(args, code), bivariate=True).alice_only()
        print(fidelity_poly(enum))
        return 0
    noise = noise_of(args)
    table = _table(args, code)
    if mode == "exact":
        print(repr(fidelity_value(enumerate_correctable(code, table), noise)))
    elif mode == "mc":
        res = monte_carlo_fidelity(code, table, noise, args.N, args.seed, args.workers)
        print(f"estimate {fmt(res.estimate)}")
        print(f"std_error {fmt(res.std_error)}")
        print(f"samples {res.samples}")
    elif mode == "bounds":
        bounds = fidelity_lower_bounds(code, table, noise)
        exact = fidelity_value(enumerate_correctable(code, table), noise)
        print(f"rep_bound {fmt(bounds['rep_bound'])}")
        dist = bounds["distance_bound"]
        print(f"distance_bound {'n/a' if dist is None else fmt(dist)}")
        print(f"exact {fmt(exact)}")
    return 0


# -- sweep / compare ---------------------------------------------------------------


def _schemes(args: argparse.Namespace):
    texts = list(args.scheme or []) + list(args.code or [])
    if not texts:
        raise InputError("give at least one --scheme")
    return [parse_scheme(t) for t in texts]


def _mc_evaluator(spec, N: int, seed: int, workers: int | None):
    from .codes import combine

    if spec.kind in ("standard", "eaqec_imperfect_ebits"):
        code = spec.codes[0]
    elif spec.kind == "combination_single":
        code = combine(spec.codes[0], spec.codes[1]).joint
    else:
        raise CapabilityError(f"Monte Carlo sweeps do not support {spec.kind} schemes")

    def fn(p_a: float, p_b: float) -> float:
        noise = NoiseModel(p_a, p_b)
        table = build_table(code, spec.strategy, noise if spec.strategy == "minprob" else None)
        return monte_carlo_fidelity(code, table, noise, N, seed, workers).estimate

    return fn


def cmd_sweep(args: argparse.Namespace) -> int:
    schemes = _schemes(args)
    grid = build_grid(args)
    names = unique_names([s.name for s in schemes])
    if args.method == "mc":
        fns = [_mc_evaluator(s, args.N, args.seed, args.workers) for s in schemes]
    else:
        fns = [compile_scheme(s) for s in schemes]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p_a", "p_b", *names])
    for p_a, p_b in grid:
        writer.writerow([fmt(p_a), fmt(p_b), *(fmt(fn(p_a, p_b)) for fn in fns)])
    emit(buf.getvalue(), args.out)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    schemes = _schemes(args)
    grid = build_grid(args)
    res = compare_schemes(schemes, grid)
    diffs = res.differences()
    best = res.best()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p_a", "p_b", *res.names, "best", *diffs])
    for i, (p_a, p_b) in enumerate(res.points):
        writer.writerow(
            [fmt(p_a), fmt(p_b), *(fmt(v) for v in res.values[i]), best[i], *(fmt(d[i]) for d in diffs.values())]
        )
    emit(buf.getvalue(), args.out)
    return 0


# -- distill -------------------------------------------------------------------


def cmd_distill(args: argparse.Namespace) -> int:
    inner = load_code(args)
    if not isinstance(inner, StabilizerCode):
        raise InputError("the distillation code must be a stabilizer code")
    if args.mode == "fidelity":
        print(repr(distillation_fidelity(inner, args.pc)))
        return 0
    if not args.outer:
        raise InputError("compose needs --outer CODE")
    outer = resolve_code(args.outer)
    if not isinstance(outer, EaqecCode):
        raise InputError("the outer code must be an EAQEC code")
    print(repr(distill_then_eaqec_fidelity(inner, outer, args.pa, args.pc)))
    return 0


# -- parser --------------------------------------------------------------------


def _rate(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"rate {v} outside [0, 1]")
    return v


def _code_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--code", help="catalog name or path to a code file")
    g.add_argument("--file", help="path to a code file")


def _noise_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pa", type=_rate, default=0.0, help="depolarizing rate on Alice's qubits")
    p.add_argument("--pb", type=_rate, default=None, help="depolarizing rate on Bob's qubits (default 0)")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eaqec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    code = sub.add_parser("code", help="inspect and transform codes")
    code_sub = code.add_subparsers(dest="action", required=True)
    p = code_sub.add_parser("show")
    _code_args(p)
    p.set_defaults(func=cmd_code_show)
    p = code_sub.add_parser("transform")
    _code_args(p)
    p.add_argument("--c", type=int, required=True, help="ebits to move to Bob")
    p.add_argument("--out")
    p.set_defaults(func=cmd_code_transform)
    p = code_sub.add_parser("bounds")
    _code_args(p)
    for flag in ("--n", "--k", "--d", "--c"):
        p.add_argument(flag, type=int)
    p.set_defaults(func=cmd_code_bounds)

    table = sub.add_parser("table", help="syndrome tables")
    table_sub = table.add_subparsers(dest="action", required=True)
    for action, func in (("build", cmd_table_build), ("export", cmd_table_export)):
        p = table_sub.add_parser(action)
        _code_args(p)
        _noise_args(p)
        if action == "export":
            p.add_argument("--out")
        p.set_defaults(func=func)

    fid = sub.add_parser("fidelity", help="channel fidelity")
    fid.add_argument("mode", choices=("exact", "mc", "bounds", "poly"))
    _code_args(fid)
    _noise_args(fid)
    fid.add_argument("--N", type=int, default=100_000)
    fid.add_argument("--seed", type=int, default=0)
    fid.add_argument("--workers", type=int, default=None)
    fid.add_argument("--perfect", action="store_true", help="poly: EAQEC code with error-free ebits")
    fid.set_defaults(func=cmd_fidelity)

    for name, func in (("sweep", cmd_sweep), ("compare", cmd_compare)):
        p = sub.add_parser(name, help=f"{name} schemes over a rate grid")
        p.add_argument("--scheme", action="append", help="scheme string; repeatable")
        p.add_argument("--code", action="append", help="plain code scheme; repeatable")
        p.add_argument("--pa", default="0:1:11", help="VALUE or START:STOP:STEPS")
        p.add_argument("--pb", default=None, help="VALUE or START:STOP:STEPS")
        p.add_argument("--ratio", type=float, default=None, help="bind p_b = RATIO * p_a")
        p.add_argument("--out")
        if name == "sweep":
            p.add_argument("--method", choices=("exact", "mc"), default="exact")
            p.add_argument("--N", type=int, default=100_000)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--workers", type=int, default=None)
        p.set_defaults(func=func)

    dist = sub.add_parser("distill", help="entanglement distillation")
    dist.add_argument("mode", choices=("fidelity", "compose"))
    _code_args(dist)
    dist.add_argument("--outer", help="EAQEC code fed with the distilled ebits")
    dist.add_argument("--pa", type=_rate, default=0.0)
    dist.add_argument("--pc", type=_rate, default=None, help="rate on raw ebits (default p_a)")
    dist.set_defaults(func=cmd_distill)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "distill" and args.mode == "fidelity" and args.pc is None:
        args.pc = args.pa
    if getattr(args, "N", 1) < 1:
        parser.error("--N must be at least 1")
    try:
        return args.func(args)
    except CapabilityError as exc:
        print(f"error: capability limit: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"error: internal invariant failed: {exc}", file=sys.stderr)
        return 4
    except (InputError, EaqecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
