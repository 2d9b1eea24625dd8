"""Command-line front end.

Subcommands: chern | slope | check | wall | walls | chi | support | selftest.
Rationals are printed exactly ('p' or 'p/q'); --approx adds a clearly labeled
decimal. Exit codes: 0 success / inequality holds, 1 negative verdict
(inequality violated, no support witness, selftest failure), 2 malformed
input.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

from .chern import (
    ReducedClass,
    TiltPoint,
    beta_bar,
    parse_reduced,
    reduced,
    tensor_line,
    twist,
    validate_lattice_reduced,
)
from .exactnum import format_quadrat, format_rat, parse_rat
from .geometry import (
    RuledThreefold,
    dual_char,
    euler_char,
    euler_char_pair,
    fiber_pushforward_char,
    format_char,
    line_bundle_char,
    parse_char,
    validate_lattice_char,
)
from .inequalities import (
    bg_main_defect,
    bg_nu_zero_defect,
    bg_star_defect,
    bg_weak_defect,
    corollary_defect,
    disc_bar,
    disc_classical,
    disc_tilde,
    fiber_bogomolov_defect,
    nabla,
)
from .selftest import run_selftest
from .stability import ChargeParams, mu_C, mu_HF, nu, nu_mixed, nu_sigma
from .support import verify_support
from .walls import (
    EVERYWHERE,
    SemicircleWall,
    VerticalWall,
    Wall,
    enumerate_destabilizers,
    numerical_wall,
)


class CLIInputError(ValueError):
    pass


def _type(parser_fn, what):
    def convert(text):
        try:
            return parser_fn(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"bad {what}: {exc}") from exc

    return convert


_rat = _type(parse_rat, "rational")
_char = _type(lambda s: validate_lattice_char(parse_char(s)), "character")
_reduced = _type(lambda s: validate_lattice_reduced(parse_reduced(s)), "reduced class")


def _pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected two comma-separated values")
    return parts


def _int_pair(text):
    a, b = _pair(text)
    return int(a), int(b)


def _point(text):
    a2, b = _pair(text)
    return TiltPoint(parse_rat(a2), parse_rat(b))


def _grid(text):
    start, stop, step = (parse_rat(p) for p in text.split(","))
    if step <= 0:
        raise ValueError("grid step must be positive")
    out = []
    v = start
    while v <= stop:
        out.append(v)
        v += step
    return out


def apply_config(argv: list[str]) -> list[str]:
    """Splice `key = value` config entries in as flags, explicit flags win."""
    path = None
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
    if path is None:
        return argv
    extra: list[str] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise CLIInputError(f"config line without '=': {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            flag = f"--{key}"
            present = any(t == flag or t.startswith(flag + "=") for t in argv)
            if present:
                continue
            if value.lower() in ("true", "false"):
                if value.lower() == "true":
                    extra.append(flag)
            else:
                extra.extend([flag, value])
    return argv + extra


def _threefold(args) -> RuledThreefold:
    if args.genus is None or args.degree is None:
        raise CLIInputError("this command needs --genus and --degree")
    X = RuledThreefold(args.genus, args.degree)
    if X.degree < 0:
        print("note: degree < 0, the relative hyperplane class is not nef", file=sys.stderr)
    return X


def _approx(q: Fraction) -> str:
    return f"{float(q):.6g}"


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _require(args, names: list[str]) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        raise CLIInputError("missing required flags: " + ", ".join(f"--{n}" for n in missing))


# ---------------------------------------------------------------- subcommands


def _cmd_chern(args) -> int:
    X = _threefold(args)
    if (args.char is None) == (args.line_bundle is None):
        raise CLIInputError("give exactly one of --char or --line-bundle")
    ch = args.char if args.char is not None else line_bundle_char(*args.line_bundle, X)
    if args.dual:
        ch = dual_char(ch)
    if args.tensor_line is not None:
        ch = tensor_line(ch, *args.tensor_line, X)
    if args.twist is not None:
        ch = twist(ch, args.twist, X)
    if args.pushforward is not None:
        ch = fiber_pushforward_char(args.pushforward, ch)
    red = reduced(ch)
    payload: dict = {
        "char": format_char(ch),
        "reduced": ",".join(format_rat(x) for x in red.as_tuple()),
        "lattice": ch.is_lattice(),
        "disc_bar": format_rat(disc_bar(ch)),
        "disc_tilde0": format_rat(disc_tilde(ch, 0, X)),
        "nabla": format_rat(nabla(ch, X)),
        "mu_HF": str(mu_HF(ch)),
        "mu_C": str(mu_C(ch)),
    }
    try:
        payload["beta_bar"] = format_quadrat(beta_bar(ch))
    except ValueError as exc:
        payload["beta_bar"] = None
        payload["beta_bar_note"] = str(exc)
    lines = [f"{k} = {v}" for k, v in payload.items()]
    _emit(args, payload, lines)
    return 0


def _cmd_slope(args) -> int:
    kind = args.kind
    ch = args.char
    if ch is None:
        raise CLIInputError("missing required flags: --char")
    if kind == "muHF":
        value = mu_HF(ch)
    elif kind == "muC":
        value = mu_C(ch)
    else:
        _require(args, ["alpha2", "beta"])
        pt = TiltPoint(args.alpha2, args.beta)
        if kind == "nu":
            value = nu(ch, pt)
        elif kind == "nuMixed":
            _require(args, ["t"])
            value = nu_mixed(ch, pt, args.t, _threefold(args))
        else:  # nuSigma
            _require(args, ["s", "t"])
            p = ChargeParams(args.alpha2, args.beta, args.s, args.t)
            value = nu_sigma(ch, p, _threefold(args))
    out = str(value)
    if args.format == "json":
        print(json.dumps({"kind": kind, "value": out}))
    else:
        suffix = "" if value.is_infinite or not args.approx else f"  (approx {_approx(value.value)})"
        print(out + suffix)
    return 0


def _verdict_lines(args, defects: dict) -> tuple[int, list[str]]:
    ok = all(v >= 0 for v in defects.values())
    lines = []
    for name, v in defects.items():
        extra = f"  (approx {_approx(v)})" if args.approx else ""
        lines.append(f"{name} = {format_rat(v)}{extra}")
    lines.append(
        "verdict: holds (conditional on semistability)" if ok else "verdict: violated"
    )
    return (0 if ok else 1), lines


def _cmd_check(args) -> int:
    X = _threefold(args)
    ch = args.char
    if ch is None:
        raise CLIInputError("missing required flags: --char")
    needs_pt = args.ineq in ("conj31", "conj32", "star", "weak")
    pt = None
    if needs_pt:
        _require(args, ["alpha2", "beta"])
        pt = TiltPoint(args.alpha2, args.beta)
    if args.ineq == "conj31":
        defects = {"defect": bg_main_defect(ch, pt, X)}
    elif args.ineq == "conj32":
        defects = {"defect": bg_nu_zero_defect(ch, pt, X)}
    elif args.ineq == "star":
        if nu(ch, pt).is_infinite:
            raise CLIInputError("star form needs a finite tilt slope at (alpha2, beta)")
        defects = {"defect": bg_star_defect(ch, pt, X)}
    elif args.ineq == "weak":
        defects = {"defect": bg_weak_defect(ch, pt, X)}
    elif args.ineq == "nabla":
        defects = {"defect": nabla(ch, X)}
    elif args.ineq == "corollary":
        defects = {"defect": corollary_defect(ch, X)}
    elif args.ineq == "fiber-bog":
        defects = {"defect": fiber_bogomolov_defect(args.k, ch, X)}
    else:  # classical
        f_delta, h_delta = disc_classical(ch, X)
        defects = {"F_defect": f_delta, "H_defect": h_delta}
    code, lines = _verdict_lines(args, defects)
    payload = {name: format_rat(v) for name, v in defects.items()}
    payload["holds"] = code == 0
    _emit(args, payload, lines)
    return code


def _wall_payload(wall) -> dict:
    if wall is EVERYWHERE:
        return {"type": "everywhere"}
    if wall is None:
        return {"type": "none"}
    if isinstance(wall, VerticalWall):
        return {"type": "vertical", "beta": format_rat(wall.beta)}
    return {
        "type": "semicircle",
        "center": format_rat(wall.center),
        "radius_sq": format_rat(wall.radius_sq),
    }


def _wall_text(wall) -> str:
    p = _wall_payload(wall)
    if p["type"] == "semicircle":
        return f"semicircle center={p['center']} radius_sq={p['radius_sq']}"
    if p["type"] == "vertical":
        return f"vertical beta={p['beta']}"
    return p["type"]


def _cmd_wall(args) -> int:
    wall = numerical_wall(args.u, args.w)
    payload = _wall_payload(wall)
    if args.format == "text":
        print(_wall_text(wall))
    else:
        print(json.dumps(payload))
    return 0


def _cmd_walls(args) -> int:
    found = enumerate_destabilizers(args.u, args.rank_bound, args.at)
    payload = [
        dict(w=",".join(format_rat(x) for x in w.as_tuple()), **_wall_payload(wall))
        for w, wall in found
    ]
    lines = [
        f"{_wall_text(wall)}  (w={','.join(format_rat(x) for x in w.as_tuple())})"
        for w, wall in found
    ] or ["no walls"]
    if args.csv:
        emit_csv([(w, wall) for w, wall in found], args.csv)
    if args.svg:
        emit_svg([wall for _, wall in found], args.at, args.svg)
    _emit(args, {"walls": payload}, lines)
    return 0


def _cmd_chi(args) -> int:
    X = _threefold(args)
    ch = args.char
    if ch is None:
        raise CLIInputError("missing required flags: --char")
    if args.pair_from is not None:
        value = euler_char_pair(X, line_bundle_char(*args.pair_from, X), ch)
    else:
        value = euler_char(X, ch)
    if args.format == "json":
        print(json.dumps({"chi": format_rat(value)}))
    else:
        extra = f"  (approx {_approx(value)})" if args.approx else ""
        print(format_rat(value) + extra)
    return 0


def _cmd_support(args) -> int:
    X = _threefold(args)
    _require(args, ["alpha2", "beta", "s", "t"])
    p = ChargeParams(args.alpha2, args.beta, args.s, args.t)
    witness = verify_support(p, X, args.lambda_grid, args.mu_grid)
    if witness is None:
        if args.format == "json":
            print(json.dumps({"witness": None}))
        else:
            print("no witness in grid")
        return 1
    entries = witness.form.upper_entries()
    if args.format == "json":
        print(
            json.dumps(
                {
                    "witness": {
                        "lambda": format_rat(witness.lam),
                        "mu": format_rat(witness.mu),
                        "Q": {f"{i},{j}": format_rat(v) for i, j, v in entries},
                    }
                }
            )
        )
    else:
        print(f"witness: lambda={format_rat(witness.lam)} mu={format_rat(witness.mu)}")
        for i, j, v in entries:
            print(f"Q[{i},{j}] = {format_rat(v)}")
    return 0


def _cmd_selftest(args) -> int:
    results = run_selftest(args.seed)
    failed_total = 0
    for name, checks, fails in results:
        failed_total += fails
        status = "PASS" if fails == 0 else "FAIL"
        print(f"{name}: {status} ({checks - fails}/{checks} checks)")
    print(f"selftest: {'PASS' if failed_total == 0 else 'FAIL'}")
    return 0 if failed_total == 0 else 1


# ------------------------------------------------------------------ emission


def emit_csv(pairs: list[tuple[ReducedClass, Wall]], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["w_r", "w_c", "w_d", "wall_type", "center", "radius_sq"])
        for w, wall in pairs:
            if isinstance(wall, VerticalWall):
                kind, center, rsq = "vertical", format_rat(wall.beta), ""
            else:
                kind = "semicircle"
                center = format_rat(wall.center)
                rsq = format_rat(wall.radius_sq)
            writer.writerow(
                [format_rat(w.r), format_rat(w.c), format_rat(w.dd), kind, center, rsq]
            )


def emit_svg(walls: list[Wall], query: TiltPoint | None, path: str) -> None:
    """Deterministic plot: beta horizontal, alpha vertical, equal aspect."""
    width, height, margin = 800.0, 520.0, 48.0
    xs: list[float] = []
    tops: list[float] = []
    for wall in walls:
        if isinstance(wall, SemicircleWall):
            c = float(wall.center)
            r = math.sqrt(float(wall.radius_sq))
            xs.extend([c - r, c + r])
            tops.append(r)
        else:
            xs.append(float(wall.beta))
    if query is not None:
        xs.append(float(query.beta))
        tops.append(math.sqrt(float(query.alpha2)))
    if not xs:
        xs = [-2.0, 2.0]
    if not tops:
        tops = [2.0]
    xmin, xmax = min(xs) - 0.5, max(xs) + 0.5
    ymax = max(tops) * 1.15 + 0.1
    scale = min((width - 2 * margin) / (xmax - xmin), (height - 2 * margin) / ymax)

    def sx(x: float) -> float:
        return margin + (x - xmin) * scale

    def sy(y: float) -> float:
        return height - margin - y * scale

    f = lambda v: f"{v:.4f}"
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {int(width)} {int(height)}">',
        f'<line x1="{f(sx(xmin))}" y1="{f(sy(0))}" x2="{f(sx(xmax))}" y2="{f(sy(0))}" '
        'stroke="black" stroke-width="1"/>',
    ]
    if xmin <= 0 <= xmax:
        parts.append(
            f'<line x1="{f(sx(0))}" y1="{f(sy(0))}" x2="{f(sx(0))}" y2="{f(sy(ymax))}" '
            'stroke="black" stroke-width="0.5" stroke-dasharray="4 3"/>'
        )
    parts.append(
        f'<text x="{f(width - margin + 6)}" y="{f(sy(0) + 4)}" font-size="14">beta</text>'
    )
    parts.append(f'<text x="{f(margin - 34)}" y="{f(margin)}" font-size="14">alpha</text>')
    for wall in walls:
        if isinstance(wall, SemicircleWall):
            c = float(wall.center)
            r = math.sqrt(float(wall.radius_sq))
            rr = r * scale
            parts.append(
                f'<path d="M {f(sx(c - r))} {f(sy(0))} A {f(rr)} {f(rr)} 0 0 1 '
                f'{f(sx(c + r))} {f(sy(0))}" fill="none" stroke="crimson" stroke-width="1.5"/>'
            )
        else:
            b = float(wall.beta)
            parts.append(
                f'<line x1="{f(sx(b))}" y1="{f(sy(0))}" x2="{f(sx(b))}" y2="{f(sy(ymax))}" '
                'stroke="steelblue" stroke-width="1.5"/>'
            )
    if query is not None:
        qx = sx(float(query.beta))
        qy = sy(math.sqrt(float(query.alpha2)))
        parts.append(f'<circle cx="{f(qx)}" cy="{f(qy)}" r="4" fill="black"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="tiltwall", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value file supplying default flags")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--approx", action="store_true", help="add decimal approximations")
    common.add_argument("--genus", type=int, default=None)
    common.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("chern", parents=[common], help="character transforms and invariants")
    p.add_argument("--char", type=_char, default=None)
    p.add_argument("--line-bundle", type=_type(_int_pair, "pair"), default=None, metavar="a,b")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--tensor-line", type=_type(_int_pair, "pair"), default=None, metavar="a,b")
    p.add_argument("--twist", type=_rat, default=None, metavar="BETA")
    p.add_argument("--pushforward", type=int, default=None, metavar="K")
    p.set_defaults(handler=_cmd_chern)

    p = sub.add_parser("slope", parents=[common], help="evaluate a slope function")
    p.add_argument("--kind", required=True, choices=("muHF", "muC", "nu", "nuMixed", "nuSigma"))
    p.add_argument("--char", type=_char, default=None)
    p.add_argument("--alpha2", type=_rat, default=None)
    p.add_argument("--beta", type=_rat, default=None)
    p.add_argument("--s", type=_rat, default=None)
    p.add_argument("--t", type=_rat, default=None)
    p.set_defaults(handler=_cmd_slope)

    p = sub.add_parser("check", parents=[common], help="evaluate an inequality defect")
    p.add_argument(
        "--ineq",
        required=True,
        choices=("conj31", "conj32", "star", "weak", "nabla", "corollary", "fiber-bog", "classical"),
    )
    p.add_argument("--char", type=_char, default=None)
    p.add_argument("--alpha2", type=_rat, default=None)
    p.add_argument("--beta", type=_rat, default=None)
    p.add_argument("--k", type=int, default=1, help="fiber multiplicity for fiber-bog")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("wall", parents=[common], help="numerical wall of two reduced classes")
    p.add_argument("--u", type=_reduced, required=True)
    p.add_argument("--w", type=_reduced, required=True)
    p.set_defaults(handler=_cmd_wall, format_default="json")

    p = sub.add_parser("walls", parents=[common], help="enumerate destabilizer walls")
    p.add_argument("--u", type=_reduced, required=True)
    p.add_argument("--rank-bound", type=int, required=True)
    p.add_argument("--at", type=_type(_point, "point"), default=None, metavar="ALPHA2,BETA")
    p.add_argument("--svg", default=None, metavar="PATH")
    p.add_argument("--csv", default=None, metavar="PATH")
    p.set_defaults(handler=_cmd_walls)

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic")
    p.add_argument("--char", type=_char, default=None)
    p.add_argument("--pair-from", type=_type(_int_pair, "pair"), default=None, metavar="a,b")
    p.set_defaults(handler=_cmd_chi)

    p = sub.add_parser("support", parents=[common], help="search a support-property witness")
    p.add_argument("--alpha2", type=_rat, default=None)
    p.add_argument("--beta", type=_rat, default=None)
    p.add_argument("--s", type=_rat, default=None)
    p.add_argument("--t", type=_rat, default=None)
    p.add_argument(
        "--lambda-grid", type=_type(_grid, "grid"), default=_grid("0,2,1/4"), metavar="LO,HI,STEP"
    )
    p.add_argument(
        "--mu-grid", type=_type(_grid, "grid"), default=_grid("1/4,2,1/4"), metavar="LO,HI,STEP"
    )
    p.set_defaults(handler=_cmd_support)

    p = sub.add_parser("selftest", parents=[common], help="run the built-in invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_selftest)

    return top


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        argv = apply_config(list(argv))
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    except (CLIInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "format_default", None) and "--format" not in " ".join(argv):
        args.format = args.format_default
    try:
        return args.handler(args)
    except CLIInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
