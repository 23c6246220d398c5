"""Command-line front end.

Exit status: 0 success, 1 selftest mismatch, 2 malformed input,
3 I/O failure, 4 tensor budget exceeded. Exact rationals are written as
strings ("1/2"); JSON output uses sorted keys so runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import bounds, checks, kempf, repcalc, sandbox, truncsym
from .states import State

DEFAULT_SEED = 20240917


class InputError(ValueError):
    pass


def _load_json(arg: str):
    text = arg.strip()
    if not text.startswith(("{", "[")):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {arg!r}: {exc}") from None


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def _coords(text: str) -> list:
    try:
        return [Fraction(x.strip()) for x in text.split(",")]
    except ValueError:
        raise InputError(f"field 'coords' must be comma-separated rationals, got {text!r}") from None


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            print(f"{key}: {value if isinstance(value, (str, int)) and not isinstance(value, bool) else json.dumps(value, sort_keys=True)}")
    else:
        print(json.dumps(payload, sort_keys=True))


def _emit_csv(rows: List[dict]) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    sys.stdout.write(buf.getvalue())


# --- subcommands ---------------------------------------------------------------


def cmd_kempf(args) -> int:
    if args.rep:
        rep = repcalc.RepSpec.from_json(_load_json(args.rep))
        if args.coords is None:
            raise InputError("--rep requires --coords")
        extra = [_load_json(args.witness)] if args.witness else []
        res = kempf.conjugate_instability_search(
            rep, _coords(args.coords), args.samples, seed=args.seed, extension_degree=args.extension, extra=extra
        )
        _emit(res.to_json(), args.format)
        return 0
    if args.input is None:
        raise InputError("kempf needs a State JSON input (or --rep/--coords)")
    state = State.from_json(_load_json(args.input))
    _emit(kempf.instability(state, args.method).to_json(), args.format)
    return 0


def cmd_tl_dim(args) -> int:
    if args.table:
        rows = []
        for p, n in itertools.product(_int_list(args.p), _int_list(args.n)):
            ls = _int_list(args.l) if args.l else range(0, n * (p - 1) + 1)
            for l in ls:
                rows.append(checks.dimension_row(p, n, l, truncsym.tensor_budget(), args.invariants))
        _emit_csv(rows)
        return 0
    p, n, l = int(args.p), int(args.n), int(args.l)
    d = truncsym.tl_dim(p, n, l)
    inv = truncsym.invariants_dim(n, l, p) if args.invariants else "n/a"
    _emit(
        {
            "p": p,
            "n": n,
            "l": l,
            "enum": d.enum,
            "closed_printed": d.closed_printed,
            "closed_corrected": d.closed_corrected,
            "invariants_dim": inv,
        },
        args.format,
    )
    return 0


def cmd_tl_basis(args) -> int:
    basis = truncsym.tl_basis(args.n, args.l, args.p)
    _emit(
        {
            "p": args.p,
            "n": args.n,
            "l": args.l,
            "index": [list(k) for k in basis.index],
            "elements": [[[list(t), c] for t, c in sorted(vec.items())] for vec in basis.elements],
        },
        args.format,
    )
    return 0


def cmd_invariants_dim(args) -> int:
    _emit({"n": args.n, "l": args.l, "p": args.p, "invariants_dim": truncsym.invariants_dim(args.n, args.l, args.p)}, args.format)
    return 0


def cmd_rep_degree(args) -> int:
    spec = repcalc.RepSpec.from_json(_load_json(args.input))
    prof = repcalc.rep_degree(spec)
    _emit({"d": prof.d, "a": prof.a, "is_polynomial": prof.is_polynomial, "m": spec.m, "n": spec.n, "p": spec.p}, args.format)
    return 0


def cmd_rep_tensor(args) -> int:
    s1 = repcalc.RepSpec.from_json(_load_json(args.first))
    s2 = repcalc.RepSpec.from_json(_load_json(args.second))
    _emit(repcalc.tensor(s1, s2).to_json(), "json")
    return 0


def cmd_rep_wedge(args) -> int:
    spec = repcalc.RepSpec.from_json(_load_json(args.input))
    _emit(repcalc.wedge_lift(spec, args.r).to_json(), "json")
    return 0


def cmd_tl_rep(args) -> int:
    _emit(repcalc.tl_rep(args.n, args.p, args.l).to_json(), "json")
    return 0


_BOUND_PARAMS = {
    "thm31": ("p", "m", "d"),
    "thm32": ("p", "m", "d"),
    "thm44": ("p", "n", "l"),
    "thm54": ("p", "n", "m", "d"),
}


def _bound_call(theorem: str, values: dict):
    fn = getattr(bounds, f"bound_{theorem}")
    return fn(*(values[k] for k in _BOUND_PARAMS[theorem]))


def cmd_bound(args) -> int:
    if args.theorem == "cor55":
        if args.kind is None or args.n is None or args.d is None:
            raise InputError("cor55 needs --kind, --n and --d")
        _emit({"kind": args.kind, "n": int(args.n), "d": int(args.d), "rank": bounds.cor55_rank(args.kind, int(args.n), int(args.d))}, args.format)
        return 0
    needed = _BOUND_PARAMS[args.theorem]
    for key in needed:
        if getattr(args, key) is None:
            raise InputError(f"{args.theorem} needs --{key}")
    if args.table:
        grids = [_int_list(getattr(args, k)) for k in needed]
        rows = []
        for combo in itertools.product(*grids):
            values = dict(zip(needed, combo))
            res = _bound_call(args.theorem, values)
            rows.append({**values, "n_min": res.n_min, "witness": json.dumps(res.witness, sort_keys=True), "exact": res.exact})
        _emit_csv(rows)
        return 0
    values = {k: int(getattr(args, k)) for k in needed}
    _emit(_bound_call(args.theorem, values).to_json(), args.format)
    return 0


def cmd_sandbox(args) -> int:
    E = sandbox.SplitBundle.from_json(_load_json(args.input))
    if args.action == "slope":
        out = {"slope": str(sandbox.slope(E)), "rank": E.rank, "degree": E.degree, "semistable": sandbox.is_semistable(E)}
    elif args.action == "hn":
        out = {"hn_profile": [[str(s), r] for s, r in sandbox.hn_profile(E)], "semistable": sandbox.is_semistable(E)}
    elif args.action == "frobenius":
        out = sandbox.frobenius_pullback(E, args.times).to_json()
    else:
        if args.kind is None:
            raise InputError("functor needs --kind")
        if args.kind == "tensor_with":
            if args.other is None:
                raise InputError("tensor_with needs --with")
            param = sandbox.SplitBundle.from_json(_load_json(args.other))
        else:
            if args.param is None:
                raise InputError(f"{args.kind} needs --param")
            param = args.param
        out = sandbox.apply_functor(E, args.kind, param).to_json()
    _emit(out, args.format)
    return 0


def cmd_selftest(args) -> int:
    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}")

    states = checks.random_states(args.states, args.seed)
    bad = [i for i, s in enumerate(states) if not checks.oracle_agrees(s)]
    report("kempf oracle equivalence", not bad, f"{len(states) - len(bad)}/{len(states)} states agree")

    rows = [checks.dimension_row(p, n, l) for p, n, l in checks.grid_cells()]
    ok = all(r["enum"] == r["closed_corrected"] for r in rows)
    report("tl_dim enumeration = corrected closed form", ok, f"{len(rows)} cells")
    ok = all(r["basis_rank"] in (None, r["enum"]) for r in rows)
    report("tl_basis rank = tl_dim", ok)
    ok = all((r["enum"] == r["sym_dim"]) == (r["l"] < r["p"]) for r in rows)
    report("tl_dim = C(n+l-1, l) exactly when l < p", ok)
    ok = all(r["invariants_dim"] in (None, r["sym_dim"]) for r in rows)
    report("invariants_dim = C(n+l-1, l)", ok)
    printed = truncsym.tl_dim(3, 2, 4)
    report("printed closed form disagrees at (3,2,4)", (printed.closed_printed, printed.enum) == (-3, 1), f"{printed.closed_printed} vs {printed.enum}")

    expected = [
        (bounds.bound_thm31(2, 3, 2), 3),
        (bounds.bound_thm32(2, 3, 2), 6),
        (bounds.bound_thm44(2, 2, 2), 1),
        (bounds.bound_thm44(2, 2, 1), 1),
        (bounds.bound_thm54(2, 1, 2, 1), 2),
    ]
    ok = all(res.n_min == n and res.certificate_valid(2) for res, n in expected)
    report("bound calculator reference values", ok)
    return 1 if failures else 0


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobstab", description="Kempf instability, truncated symmetric powers and Frobenius bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=func)
        return sp

    sp = add("kempf", cmd_kempf, "instability report for a State, or conjugate search for a point of a RepSpec")
    sp.add_argument("input", nargs="?", help="State JSON (path or inline)")
    sp.add_argument("--method", choices=("wolfe", "oracle"), default="wolfe")
    sp.add_argument("--rep", help="RepSpec JSON for a conjugate search")
    sp.add_argument("--coords", help="comma-separated coordinates of the point")
    sp.add_argument("--samples", type=int, default=32)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--extension", type=int, default=1, help="sample g over F_{p^e}")
    sp.add_argument("--witness", help="extra group element (JSON matrix) to include")

    sp = add("tl-dim", cmd_tl_dim, "dimension of T^l by enumeration and both closed forms")
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--l")
    sp.add_argument("--invariants", action="store_true", help="also compute the S_l-invariants dimension")
    sp.add_argument("--table", action="store_true", help="CSV over comma-separated grids")

    sp = add("tl-basis", cmd_tl_basis, "the v(k) basis vectors as sparse tensors")
    for k in ("n", "l", "p"):
        sp.add_argument(f"--{k}", type=int, required=True)

    sp = add("invariants-dim", cmd_invariants_dim, "dimension of the S_l-fixed space of the tensor power")
    for k in ("n", "l", "p"):
        sp.add_argument(f"--{k}", type=int, required=True)

    sp = add("rep-degree", cmd_rep_degree, "degree profile of a RepSpec")
    sp.add_argument("input")

    sp = add("rep-tensor", cmd_rep_tensor, "tensor product of two RepSpecs")
    sp.add_argument("first")
    sp.add_argument("second")

    sp = add("rep-wedge", cmd_rep_wedge, "exterior-power lift of a RepSpec")
    sp.add_argument("input")
    sp.add_argument("--r", type=int, required=True)

    sp = add("tl-rep", cmd_tl_rep, "RepSpec of GL_n acting on T^l")
    for k in ("n", "p", "l"):
        sp.add_argument(f"--{k}", type=int, required=True)

    sp = add("bound", cmd_bound, "minimal Frobenius iteration counts")
    sp.add_argument("theorem", choices=("thm31", "thm32", "thm44", "thm54", "cor55"))
    for k in ("p", "n", "m", "d", "l"):
        sp.add_argument(f"--{k}")
    sp.add_argument("--kind", choices=("tensor", "sym", "wedge"))
    sp.add_argument("--table", action="store_true", help="CSV over comma-separated grids")

    sp = add("sandbox", cmd_sandbox, "split bundles on the projective line")
    sp.add_argument("action", choices=("slope", "hn", "frobenius", "functor"))
    sp.add_argument("input", help="SplitBundle JSON (path or inline)")
    sp.add_argument("--times", type=int, default=1)
    sp.add_argument("--kind", choices=("tensor_with", "sym", "wedge", "truncated"))
    sp.add_argument("--param", type=int)
    sp.add_argument("--with", dest="other", help="second SplitBundle for tensor_with")

    sp = add("selftest", cmd_selftest, "oracle-equivalence and dimension-grid checks")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--states", type=int, default=100)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("bound", "tl-dim") and not getattr(args, "table", False):
            for key in ("p", "n", "m", "d", "l"):
                value = getattr(args, key, None)
                if value is not None:
                    try:
                        int(value)
                    except ValueError:
                        raise InputError(f"--{key} must be an integer, got {value!r}") from None
        return args.func(args)
    except truncsym.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
