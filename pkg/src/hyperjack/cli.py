"""Command-line front end.

Every subcommand builds a JSON-serializable report; ``--format`` chooses how
it is written.  Exit codes: 0 success, 1 identity violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import ParameterError, canon, is_scalar, normalization_constant, parse_rational, rational_to_json
from .hyper import HDET_METHODS, AlternatingArray, HyperArray, element_from_json, hdet, hpf, random_alternating, random_array
from .identities import OPTIONAL, SUITES, run_suite
from .jack import JackParams, jack_P, jack_Q
from .partitions import Partition
from .symfunc import MONOMIAL, POWERSUM, convert, schur
from . import toeplitz as tp

COMMANDS = ("hdet", "hpf", "jack", "schur", "toeplitz", "verify", "szego")


class UsageError(Exception):
    pass


# parsing helpers ---------------------------------------------------------------


def _partition(text: str) -> Partition:
    try:
        return Partition(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: use p/q") from exc


def _key_values(text: str) -> dict:
    out = {}
    for item in filter(None, (s.strip() for s in (text or "").split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _shape(text: str) -> tuple[int, int]:
    try:
        order, side = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected ORDER,SIDE, got {text!r}") from exc
    return order, side


def _value_json(x):
    if is_scalar(x):
        return rational_to_json(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, complex):
        return x.real if x.imag == 0 else {"re": x.real, "im": x.imag}
    return float(x)


def _value_text(x) -> str:
    if is_scalar(x):
        return str(canon(x))
    return repr(x)


def _load_array(path: str, cls):
    """Read a ``.npy`` file, a nested JSON list, or the ``{order, side, entries}`` JSON form."""
    if path.endswith(".npy"):
        data = np.load(path, allow_pickle=False)
        entries = [_from_numpy(x) for x in data.ravel()]
    else:
        with open(path) as fh:
            obj = json.load(fh)
        if isinstance(obj, dict):
            return cls.from_json(obj)
        data = np.array(obj, dtype=object)
        if any(isinstance(x, list) for x in data.ravel()):
            raise UsageError("array entries must form a hypercube")
        entries = [element_from_json(x) for x in data.ravel()]
    shape = data.shape
    if not shape or len(set(shape)) != 1:
        raise UsageError(f"array must be a hypercube, got shape {shape}")
    return cls(len(shape), shape[0], entries)


def _from_numpy(x):
    if np.issubdtype(type(x), np.integer):
        return int(x)
    if np.issubdtype(type(x), np.floating):
        return Fraction(float(x))
    raise UsageError(f"unsupported array dtype {type(x).__name__}")


# subcommands ---------------------------------------------------------------------


def cmd_hdet(args) -> tuple[dict, int]:
    if args.array:
        A = _load_array(args.array, HyperArray)
    else:
        order, side = _shape(args.random)
        A = random_array(order, side, args.seed)
    if A.order % 2:
        raise UsageError("hyperdeterminants need even order")
    value = hdet(A, method=args.method)
    return {"command": "hdet", "order": A.order, "side": A.side, "method": args.method,
            "seed": None if args.array else args.seed, "value": _value_json(value),
            "value_text": _value_text(value)}, 0


def cmd_hpf(args) -> tuple[dict, int]:
    if args.array:
        B = _load_array(args.array, AlternatingArray)
    else:
        order, side = _shape(args.random)
        B = random_alternating(order, side, args.seed)
    value = hpf(B, method=args.method)
    return {"command": "hpf", "order": B.order, "side": B.side, "method": args.method,
            "seed": None if args.array else args.seed, "value": _value_json(value),
            "value_text": _value_text(value)}, 0


def cmd_jack(args) -> tuple[dict, int]:
    alpha = _rational(args.alpha)
    if alpha <= 0:
        raise UsageError("alpha must be positive")
    lam = _partition(args.lam)
    params = JackParams(alpha, args.vars)
    f = (jack_Q if args.kind == "Q" else jack_P)(lam, params)
    if args.basis == POWERSUM:
        f = convert(f, POWERSUM)
    return {"command": "jack", "kind": args.kind, "alpha": str(alpha), "partition": list(lam),
            "polynomial": f.to_json()}, 0


def cmd_schur(args) -> tuple[dict, int]:
    lam = _partition(args.lam)
    f = schur(lam, args.vars, method=args.method)
    return {"command": "schur", "partition": list(lam), "method": args.method, "polynomial": f.to_json()}, 0


def cmd_toeplitz(args) -> tuple[dict, int]:
    try:
        symbol = tp.parse_symbol(args.symbol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    spec = tp.ToeplitzSpec(symbol, args.n, args.m, args.shift)
    report = {"command": "toeplitz", "symbol": symbol.to_json(), "n": args.n, "m": args.m,
              "shift": args.shift, "normalization": normalization_constant(args.n, args.m)}
    code = 0
    if isinstance(symbol, tp.ExactSymbol):
        value = tp.toeplitz_hdet(spec)
        report["value"] = _value_json(value)
        report["value_text"] = _value_text(value)
        report["normalized"] = _value_json(tp.normalized_toeplitz_hdet(spec))
        if args.oracle:
            oracle = tp.heine_szego_oracle(spec)
            cross = {"constant_term": _value_json(oracle), "constant_term_agrees": oracle == value}
            if args.m % 2 == 0:
                pf = tp.toeplitz_hpf_form(spec)
                cross["hpf_form"] = _value_json(pf)
                cross["hpf_form_agrees"] = pf == value
            if args.shift == 0:
                R = max(0, -symbol.support[0])
                dhat = tp.normalized_from_gamma(symbol, args.n, args.m, R)
                cross["gamma_R"] = R
                cross["normalized_from_gamma"] = _value_json(dhat)
                cross["gamma_agrees"] = dhat == tp.normalized_toeplitz_hdet(spec)
            report["oracle"] = cross
            if not all(v for k, v in cross.items() if k.endswith("agrees")):
                code = 1
    else:
        fourier = tp.fourier_coeffs(symbol, spec.window, atol=args.atol)
        arr = tp.toeplitz_array(spec, fourier.coeffs).to_numpy(float if symbol.is_real else complex)
        value = tp.hdet_numeric(arr)
        report["fourier"] = {"grid": fourier.grid, "error": fourier.error, "atol": fourier.atol,
                             "d": {str(k): _value_json(complex(v)) for k, v in sorted(fourier.coeffs.items())}}
        report["value"] = _value_json(complex(value))
        report["normalized"] = _value_json(complex(value) / report["normalization"])
        if args.shift == 0:
            report["prediction"] = _value_json(complex(tp.szego_prediction(symbol.c, args.n, args.m)))
    if args.szego_trend:
        if not isinstance(symbol, tp.ExpSymbol):
            raise UsageError("--szego-trend needs an exp: symbol")
        trend = tp.szego_trend(symbol.c, args.m, args.szego_trend, atol=args.atol)
        report["szego_trend"] = trend.to_json()
        _write_figure_outputs(args, [trend])
    return report, code


def cmd_verify(args) -> tuple[dict, int]:
    suite = args.suite
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    grid = None
    if args.params:
        if suite == "all":
            raise UsageError("--params needs a single suite")
        raw = _key_values(args.params)
        try:
            grid = [{k: int(v) for k, v in raw.items()}]
        except ValueError as exc:
            raise UsageError(f"parameters must be integers: {args.params!r}") from exc
        allowed = set(SUITES[suite][1])
        unknown = set(raw) - allowed
        if unknown:
            raise UsageError(f"unknown parameters for {suite}: {sorted(unknown)}; allowed {sorted(allowed)}")
        missing = allowed - set(raw) - OPTIONAL.get(suite, set())
        if missing:
            raise UsageError(f"missing parameters for {suite}: {sorted(missing)}")
    reports = run_suite(suite, grid, threads=args.threads)
    ok = all(r.equal for r in reports)
    return {"command": "verify", "suite": suite, "all_equal": ok,
            "reports": [r.to_json() for r in reports]}, 0 if ok else 1


def _parse_exponents(args) -> dict:
    if args.c:
        symbol = tp.parse_symbol("exp:" + args.c)
        return dict(symbol.c)
    name, _, rest = args.example.partition(":")
    kv = {k: float(v) for k, v in _key_values(rest).items()}
    terms = int(kv.pop("terms", 30))
    try:
        if name == "bessel":
            return tp.bessel_exponents(kv.get("x", 0.5))
        if name == "binomial":
            return tp.binomial_exponents(kv.get("t", 0.3), kv.get("s", 0.3), kv.get("w1", 1.0), kv.get("w2", 1.0), terms)
        if name == "zeta":
            return tp.zeta_exponents(kv.get("x", 1.0), terms)
    except TypeError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown example {name!r}; choose bessel, binomial or zeta")


def cmd_szego(args) -> tuple[dict, int]:
    if bool(args.c) == bool(args.example):
        raise UsageError("give exactly one of --c and --example")
    c = _parse_exponents(args)
    ns = [int(x) for x in args.ns.split(",")] if args.ns else list(range(1, args.n_max + 1))
    trends = [tp.szego_trend(c, m, ns, atol=args.atol) for m in args.m]
    report = {"command": "szego", "trends": [t.to_json() for t in trends],
              "limits": {str(t.m): _value_json(complex(tp.szego_prediction(c, 0, t.m))) for t in trends}}
    _write_figure_outputs(args, trends)
    return report, 0


def _write_figure_outputs(args, trends):
    from .plotting import szego_gap_figure, trend_rows, write_csv

    if getattr(args, "csv", None):
        rows = [row for t in trends for row in trend_rows(t)]
        write_csv(rows, args.csv)
    if getattr(args, "figure", None):
        szego_gap_figure(trends, args.figure)


# output -----------------------------------------------------------------------------


def _flatten(report: dict, prefix: str = "") -> list[tuple[str, object]]:
    out = []
    for k, v in report.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict) and not ({"num", "den"} == set(v)):
            out.extend(_flatten(v, key + "."))
        elif isinstance(v, dict):
            out.append((key, str(Fraction(int(v["num"]), int(v["den"])))))
        elif isinstance(v, list):
            out.append((key, json.dumps(v, sort_keys=True)))
        else:
            out.append((key, v))
    return out


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if report.get("command") == "verify":
            writer.writerow(["suite", "params", "equal"])
            for r in report["reports"]:
                params = ";".join(f"{k}={v}" for k, v in r["params"].items())
                writer.writerow([r["suite"], params, r["equal"]])
        elif report.get("command") == "szego" or "szego_trend" in report:
            trends = report.get("trends") or [report["szego_trend"]]
            writer.writerow(["m", "n", "normalized", "prediction", "log_gap"])
            for t in trends:
                for row in t["rows"]:
                    writer.writerow([t["m"], row["n"], row["normalized"], row["prediction"], repr(row["log_gap"])])
        else:
            writer.writerow(["key", "value"])
            writer.writerows(_flatten(report))
        return buf.getvalue()
    lines = []
    for key, value in _flatten(report):
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


# entry point -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $HYPERJACK_THREADS or 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for random test arrays")

    parser = argparse.ArgumentParser(prog="hyperjack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hdet", parents=[common], help="hyperdeterminant of an array")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--array", help="JSON file {order, side, entries}")
    src.add_argument("--random", metavar="ORDER,SIDE", help="seeded random rational array")
    p.add_argument("--method", choices=HDET_METHODS, default="fixed")

    p = sub.add_parser("hpf", parents=[common], help="hyperpfaffian of an alternating array")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--array")
    src.add_argument("--random", metavar="ORDER,SIDE")
    p.add_argument("--method", choices=("naive", "fixed"), default="fixed")

    p = sub.add_parser("jack", parents=[common], help="Jack polynomial P or Q")
    p.add_argument("--alpha", required=True, help="rational p/q")
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--kind", choices=("P", "Q"), default="P")
    p.add_argument("--basis", choices=(MONOMIAL, POWERSUM), default=MONOMIAL)

    p = sub.add_parser("schur", parents=[common], help="Schur polynomial")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--method", choices=("bialternant", "jacobi_trudi"), default="bialternant")

    p = sub.add_parser("toeplitz", parents=[common], help="Toeplitz hyperdeterminant")
    p.add_argument("--symbol", required=True, help="laurent:k=p/q,... or exp:c(k)=float,...")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--oracle", action="store_true", help="cross-check by independent exact paths")
    p.add_argument("--szego-trend", type=int, metavar="N_MAX")
    p.add_argument("--atol", type=float, default=1e-12)
    p.add_argument("--csv", help="write the trend table here")
    p.add_argument("--figure", help="write the trend figure (PNG) here")

    p = sub.add_parser("verify", parents=[common], help="run identity verification suites")
    p.add_argument("--suite", required=True, choices=tuple(SUITES) + ("all",))
    p.add_argument("--params", help="key=value list, e.g. m=1,n=2,D=4")

    p = sub.add_parser("szego", parents=[common], help="numeric strong Szegő trend")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--c", help="exponent coefficients, e.g. c(1)=0.5,c(-1)=0.5")
    g.add_argument("--example", help="bessel:x=..  binomial:t=..,s=..,w1=..,w2=..,terms=..  zeta:x=..,terms=..")
    p.add_argument("--m", type=int, nargs="+", default=[1])
    p.add_argument("--ns", help="comma-separated sizes")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--atol", type=float, default=1e-12)
    p.add_argument("--csv")
    p.add_argument("--figure")
    return parser


HANDLERS = {
    "hdet": cmd_hdet,
    "hpf": cmd_hpf,
    "jack": cmd_jack,
    "schur": cmd_schur,
    "toeplitz": cmd_toeplitz,
    "verify": cmd_verify,
    "szego": cmd_szego,
}


def _default_threads() -> int:
    raw = os.environ.get("HYPERJACK_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError as exc:
        raise UsageError(f"HYPERJACK_THREADS must be an integer, got {raw!r}") from exc


@dataclass
class Config:
    """One CLI invocation: a command, its parameters and the global output options."""

    command: str
    params: dict = field(default_factory=dict)
    output: str | None = None
    format: str = "json"
    threads: int | None = None
    seed: int = 0

    @classmethod
    def from_argv(cls, argv=None) -> "Config":
        ns = vars(build_parser().parse_args(argv))
        glob = {k: ns.pop(k) for k in GLOBAL_KEYS}
        command = ns.pop("command")
        return cls(command, ns, glob["out"], glob["format"], glob["threads"], glob["seed"])


GLOBAL_KEYS = ("format", "out", "threads", "seed")


def _namespace(config: Config) -> argparse.Namespace:
    """Fill defaults for ``config.command`` and reject unknown or missing parameters."""
    if config.command not in HANDLERS:
        raise UsageError(f"unknown command {config.command!r}")
    if config.format not in ("json", "csv", "pretty"):
        raise UsageError(f"unknown format {config.format!r}")
    sub = _subparser(config.command)
    actions = {a.dest: a for a in sub._actions if a.dest != "help" and a.dest not in GLOBAL_KEYS}
    unknown = set(config.params) - set(actions)
    if unknown:
        raise UsageError(f"unknown parameters for {config.command}: {sorted(unknown)}")
    values = {}
    for dest, action in actions.items():
        if dest in config.params:
            v = config.params[dest]
            if isinstance(v, str) and action.type is not None:
                v = action.type(v)
            values[dest] = v
        elif action.required:
            raise UsageError(f"missing parameter {dest!r} for {config.command}")
        else:
            values[dest] = action.default
    # mutually exclusive required sources
    for group in sub._mutually_exclusive_groups:
        given = [a.dest for a in group._group_actions if values.get(a.dest) is not None]
        if len(given) > 1 or (group.required and not given):
            names = [a.dest for a in group._group_actions]
            raise UsageError(f"give exactly one of {names}")
    threads = config.threads if config.threads is not None else _default_threads()
    if threads < 1:
        raise UsageError("--threads must be positive")
    return argparse.Namespace(command=config.command, format=config.format, out=config.output,
                              threads=threads, seed=config.seed, **values)


def _subparser(command: str) -> argparse.ArgumentParser:
    parser = build_parser()
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[command]
    raise AssertionError("parser has no subcommands")


def execute(config: Config) -> tuple[dict, int]:
    """Report and exit code for ``config``; raises on usage errors."""
    args = _namespace(config)
    return HANDLERS[args.command](args)


def run(config: Config, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        report, code = execute(config)
    except (UsageError, ParameterError, ValueError) as exc:
        print(f"hyperjack {config.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(report, config.format)
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if code == 1 and config.command == "verify":
        failed = [r for r in report["reports"] if not r["equal"]]
        for r in failed:
            print(f"violation: {r['suite']} {r['params']}", file=sys.stderr)
    return code


def main(argv=None) -> None:
    try:
        config = Config.from_argv(argv)
    except SystemExit as exc:
        sys.exit(exc.code)
    sys.exit(run(config))


if __name__ == "__main__":
    main()
