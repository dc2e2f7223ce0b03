"""Command line interface: ``vvmacd <command> ...``.

Exit codes: 0 success, 1 a requested verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import daha, identities, pieri, symmetric, tableaux
from .parallel import set_threads
from .qt_arith import QTZeroDivisionError
from .tableaux import AsymLabelling, Labelling, Partition, Psyt


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input parsing


def _parse_shape(text: str) -> Partition:
    text = text.strip()
    if text in ("", "[]", "0"):
        return Partition()
    try:
        parts = [int(x) for x in text.strip("[]").split(",") if x.strip()]
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _load_json(text: str) -> Any:
    if os.path.isfile(text):
        with open(text) as fh:
            src = fh.read()
        where = text
    else:
        src = text
        where = "argument"
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{where}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _int_matrix(data, what: str) -> list[list[int]]:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise UsageError(f"{what}: expected a list of rows")
    for r, row in enumerate(data, start=1):
        for c, x in enumerate(row, start=1):
            if not isinstance(x, int) or isinstance(x, bool):
                raise UsageError(f"{what}: row {r}, column {c}: expected an integer, got {x!r}")
    return data


def _parse_labelling(text: str, shape: Partition, strict: bool = False) -> Labelling:
    if text == "zeros":
        return Labelling(shape, [[0] * p for p in shape])
    rows = _int_matrix(_load_json(text), "labelling")
    if [len(r) for r in rows] != list(shape):
        raise UsageError(f"labelling: row lengths {[len(r) for r in rows]} do not match shape {list(shape)}")
    T = Labelling(shape, rows)
    for (r, c), v in T.items():
        if v < 0:
            raise UsageError(f"labelling: row {r}, column {c}: negative value {v}")
        if c > 1 and T[(r, c - 1)] < v:
            raise UsageError(f"labelling: row {r}, column {c}: value {v} exceeds its left neighbour {T[(r, c - 1)]}")
        if r > 1 and T[(r - 1, c)] < v:
            raise UsageError(f"labelling: row {r}, column {c}: value {v} exceeds the value above, {T[(r - 1, c)]}")
        if strict and r > 1 and T[(r - 1, c)] == v:
            raise UsageError(f"labelling: row {r}, column {c}: columns must strictly decrease")
    return T


def _parse_asym(text: str, base: Partition) -> AsymLabelling:
    data = _load_json(text)
    if isinstance(data, dict):
        if "base" in data:
            base = Partition(data["base"])
        data = data.get("rows", [])
    if isinstance(data, int):
        data = [[data]]
    elif isinstance(data, list) and all(isinstance(x, int) for x in data):
        data = [data]
    rows = _int_matrix(data, "labelling")
    first = rows[0] if rows else []
    lower = rows[1:]
    if not lower and base:
        lower = [[0] * p for p in base]
    if [len(r) for r in lower] != list(base):
        raise UsageError(f"labelling: rows below the first have lengths {[len(r) for r in lower]}, expected {list(base)}")
    try:
        return AsymLabelling(base, first, lower)
    except ValueError as exc:
        raise UsageError(f"labelling: {exc}") from None


def _parse_psyt(text: str, shape: Partition) -> Psyt:
    data = _load_json(text)
    if not isinstance(data, list):
        raise UsageError("tableau: expected a list of rows of [label, power] pairs")
    for r, row in enumerate(data, start=1):
        if not isinstance(row, list):
            raise UsageError(f"tableau: row {r} is not a list")
        for c, e in enumerate(row, start=1):
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise UsageError(f"tableau: row {r}, column {c}: expected [label, power], got {e!r}")
    if [len(r) for r in data] != list(shape):
        raise UsageError(f"tableau: row lengths {[len(r) for r in data]} do not match shape {list(shape)}")
    tau = Psyt(shape, [[tuple(e) for e in row] for row in data], check=False)
    problem = tau.validation_error()
    if problem:
        raise UsageError(f"tableau: {problem}")
    return tau


def _shape_from_args(args) -> Partition:
    if getattr(args, "shape", None) is not None:
        return _parse_shape(args.shape)
    if getattr(args, "base", None) is not None and getattr(args, "rank", None) is not None:
        base = _parse_shape(args.base)
        try:
            return tableaux.padded(base, args.rank)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("give --shape, or --base together with --rank")


# ---------------------------------------------------------------------------
# output


def _emit(obj: Any, fmt: str, plain: str | None = None, latex: str | None = None):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    elif fmt == "latex":
        print(latex if latex is not None else json.dumps(obj, sort_keys=True))
    else:
        print(plain if plain is not None else json.dumps(obj, sort_keys=True, indent=1))


def _psyt_plain(tau: Psyt) -> str:
    return "\n".join(" ".join(f"{a}q{b}" if b else str(a) for a, b in row) for row in tau.rows)


# ---------------------------------------------------------------------------
# commands


def cmd_tableaux(args) -> int:
    if args.omega:
        if args.base is None:
            raise UsageError("--omega needs --base")
        base = _parse_shape(args.base)
        items = tableaux.enumerate_omega(base, args.max_degree)
        obj = [dict(T.to_json(), degree=T.degree()) for T in items]
        plain = "\n".join(f"degree {T.degree()}: {T.restrict(T.rank).to_json()}" for T in items)
        _emit(obj, args.format, plain)
        return 0
    shape = _shape_from_args(args)
    if args.stats is not None:
        T = _parse_labelling(args.stats, shape)
        obj = {
            "labelling": T.to_json(),
            "rssyt": T.is_rssyt(),
            "b_T": tableaux.b_stat(T),
            "nu": list(tableaux.nu_of(T)),
            "mu": list(tableaux.mu_of(T)),
            "S": tableaux.s_of(T).to_json(),
            "min": tableaux.min_of(T).to_json(),
            "top": tableaux.top_of(T).to_json(),
            "inversions_of_min": len(tableaux.inversions(tableaux.min_of(T))),
        }
        plain = (f"b_T={obj['b_T']}\nnu={obj['nu']}\nmu={obj['mu']}\nrssyt={obj['rssyt']}\n"
                 f"Min:\n{_psyt_plain(tableaux.min_of(T))}\nTop:\n{_psyt_plain(tableaux.top_of(T))}")
        _emit(obj, args.format, plain)
        return 0
    if args.psyt_fiber is not None:
        T = _parse_labelling(args.psyt_fiber, shape)
        fiber = tableaux.enumerate_psyt(T)
        obj = [tau.to_json() for tau in fiber]
        _emit(obj, args.format, "\n\n".join(_psyt_plain(tau) for tau in fiber) + f"\n({len(fiber)} tableaux)")
        return 0
    if args.rssyt:
        items = tableaux.enumerate_rssyt(shape, args.max_value)
        _emit([T.to_json() for T in items], args.format, "\n".join(str(T.to_json()) for T in items))
        return 0
    raise UsageError("choose one of --stats, --psyt-fiber, --rssyt, --omega")


def cmd_fbasis(args) -> int:
    shape = _shape_from_args(args)
    tau = _parse_psyt(args.tableau, shape)
    F = daha.build_F(tau)
    _emit(F.to_json(), args.format, F.to_plain(), F.to_latex())
    if args.verify and not daha.check_weight(tau, F):
        print("weight check failed", file=sys.stderr)
        return 1
    return 0


def cmd_macdonald(args) -> int:
    shape = _shape_from_args(args)
    T = _parse_labelling(args.labelling, shape, strict=True)
    P = symmetric.build_P(T)
    obj = P.to_json()
    if args.eigenvalue:
        obj["eigenvalue"] = {"ell": args.eigenvalue, "value": symmetric.eigenvalue_P0l(T, args.eigenvalue).to_json()}
    latex = " + ".join(f"\\left({c.latex()}\\right) F_{{{_psyt_plain(tau).replace(chr(10), '/')}}}"
                       for tau, c in sorted(P.f_expansion.items(), key=lambda kv: kv[0].rows))
    plain = "\n".join(f"({c}) * F[{_psyt_plain(tau).replace(chr(10), ' / ')}]"
                      for tau, c in sorted(P.f_expansion.items(), key=lambda kv: kv[0].rows))
    _emit(obj, args.format, plain, latex)
    if args.verify:
        ok = P.is_hecke_invariant()
        ok = ok and daha.theta_power_sum(1, P.element) == P.element.scale(symmetric.eigenvalue_P0l(T, 1))
        if not ok:
            print("verification failed", file=sys.stderr)
            return 1
    return 0


def cmd_pieri(args) -> int:
    base = _parse_shape(args.base or "")
    if args.rank is not None:
        shape = tableaux.padded(base, args.rank)
        T = _parse_labelling(args.labelling, shape, strict=True)
        row = pieri.pieri_finite(T, args.r)
    else:
        A = _parse_asym(args.labelling, base)
        row = pieri.pieri_stable(A, args.r)
    obj = row.to_json()
    plain = "\n".join(f"{e['target']}: {c}" for e, c in zip(obj["entries"], [row.entries[k] for k in
                      sorted(row.entries, key=row._key)]))
    _emit(obj, args.format, plain or "(no targets)")
    if args.verify:
        from .daha import VElement, mul_e_r

        if args.rank is None:
            n = A.rank + args.r
            src = symmetric.build_P(A.restrict(n)).element
            targets = {S.restrict(n): c for S, c in row.entries.items()}
        else:
            src = symmetric.build_P(T).element
            targets = row.entries
        lhs = mul_e_r(args.r, src)
        rhs = VElement(lhs.module)
        for S, c in targets.items():
            rhs = rhs + symmetric.build_P(S).element.scale(c)
        if lhs != rhs:
            print("Pieri expansion does not match the direct product", file=sys.stderr)
            return 1
    return 0


def cmd_identity(args) -> int:
    base = _parse_shape(args.base or "")
    if args.mode == "finite":
        shape = tableaux.padded(base, args.rank) if args.rank is not None else _shape_from_args(args)
        T = _parse_labelling(args.labelling, shape, strict=True)
        rep = identities.finite_identity(T)
    else:
        A = _parse_asym(args.labelling, base)
        fn = identities.asymptotic_identity if args.mode == "asymptotic" else identities.q_infinity_identity
        rep = fn(A, args.order)
    obj = rep.to_json(timings=args.timings)
    plain = f"verdict: {rep.verdict}\nterms: {rep.term_count}\nlhs: {rep.lhs}\nrhs: {rep.rhs}"
    _emit(obj, args.format, plain)
    if args.timings and rep.elapsed_ms is not None:
        print(f"elapsed {rep.elapsed_ms:.1f} ms", file=sys.stderr)
    return 0 if rep.verdict else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vvmacd", description="Vector-valued Macdonald polynomials: exact computations.")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: VVMACD_THREADS or CPU count)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "latex", "plain"), default="json")
        sp.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    sp = sub.add_parser("tableaux", help="enumerate and inspect labellings and tableaux")
    common(sp)
    sp.add_argument("--shape")
    sp.add_argument("--base")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--stats", metavar="LABELLING", help="JSON matrix or file; prints b_T, nu, mu, Min, Top")
    sp.add_argument("--psyt-fiber", metavar="LABELLING", help="JSON matrix, file, or 'zeros'")
    sp.add_argument("--rssyt", action="store_true")
    sp.add_argument("--max-value", type=int, default=1)
    sp.add_argument("--omega", action="store_true")
    sp.add_argument("--max-degree", type=int, default=2)
    sp.set_defaults(func=cmd_tableaux)

    sp = sub.add_parser("fbasis", help="the weight vector F_tau")
    common(sp)
    sp.add_argument("--shape")
    sp.add_argument("--base")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--tableau", required=True, help="rows of [label, power] pairs")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_fbasis)

    sp = sub.add_parser("macdonald", help="the symmetric polynomial P_T")
    common(sp)
    sp.add_argument("--shape")
    sp.add_argument("--base")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--labelling", required=True)
    sp.add_argument("--eigenvalue", type=int, metavar="ELL")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_macdonald)

    sp = sub.add_parser("pieri", help="Pieri coefficients for e_r")
    common(sp)
    sp.add_argument("--base", default="")
    sp.add_argument("--rank", type=int, help="finite rank; omit for the stable coefficients")
    sp.add_argument("--labelling", required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_pieri)

    sp = sub.add_parser("identity", help="product-sum identities")
    common(sp)
    sp.add_argument("--base", default="")
    sp.add_argument("--shape")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--labelling", required=True)
    sp.add_argument("--mode", choices=("asymptotic", "finite", "q-infinity"), default="asymptotic")
    sp.add_argument("--order", type=int, default=8)
    sp.add_argument("--timings", action="store_true", help="include elapsed_ms in the JSON report")
    sp.set_defaults(func=cmd_identity)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        set_threads(args.threads)
        return args.func(args)
    except UsageError as exc:
        print(f"vvmacd: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, QTZeroDivisionError, daha.SpanError) as exc:
        print(f"vvmacd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
