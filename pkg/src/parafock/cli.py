"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 on a mathematical
violation (the violating object is printed), 2 on usage errors.  Output is
byte-deterministic for a fixed configuration; all tables are emitted in the
documented canonical orders.  The order parameter p is parsed as an exact
rational string ("3" or "7/2"); there is no floating-point entry point.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import characters, defining, gz, monomial


def _parse_p(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc
    if p <= 0:
        raise argparse.ArgumentTypeError(f"order must be positive, got {text}")
    return p


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def cmd_verify_defining(args) -> int:
    gens = defining.build_generators(args.m, args.n)
    if args.mutate:
        gens = defining.with_sign_flip(gens)
    lines = []
    failed = False
    violations = defining.verify_triple_relations(gens)
    lines.append(f"triple relations: {len(violations)} violations")
    for j, k, l, xi, eta, eps, nnz in violations:
        failed = True
        sx = {1: "+", -1: "-"}
        lines.append(
            f"({j},{k},{l},{sx[xi]},{sx[eta]},{sx[eps]}): LHS-RHS has {nnz} nonzero entries"
        )
    umn = defining.check_umn_relations(gens)
    lines.append(f"gl(m|n) relations: {len(umn)} violations")
    failed = failed or bool(umn)
    wt = defining.weight_consistency_violations(gens)
    lines.append(f"weight consistency: {len(wt)} violations")
    failed = failed or bool(wt)
    even = defining.even_subalgebra_report(gens)
    ok = even["closed"] and even["span_dim"] == even["expected_dim"]
    lines.append(
        f"even subalgebra: span dim {even['span_dim']} (expected {even['expected_dim']}), "
        f"{'closed' if even['closed'] else 'NOT closed'}"
    )
    failed = failed or not ok
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_verify_induced(args) -> int:
    p, L = args.p, args.max_level
    lines = []
    failed = False

    mism = []
    for s in monomial.states_up_to_level(L):
        closed = monomial.norm_squared_closed(s, p)
        oracle = monomial.inner_product_oracle(s, {s: Fraction(1)}, p)
        if closed != oracle:
            mism.append((s, closed, oracle))
    lines.append(f"closed-form norms vs oracle: {len(mism)} mismatches")
    failed = failed or bool(mism)
    for s, closed, oracle in mism:
        lines.append(f"  state {tuple(s)}: closed {closed} oracle {oracle}")

    adj = 0
    states = monomial.states_up_to_level(L)
    for a in states:
        for b in states:
            for j, plus, minus in ((1, "c1+", "c1-"), (2, "c2+", "c2-")):
                lhs = monomial.inner_product(
                    monomial.apply_generator(plus, {a: Fraction(1)}, p), {b: Fraction(1)}, p
                )
                rhs = monomial.inner_product(
                    {a: Fraction(1)}, monomial.apply_generator(minus, {b: Fraction(1)}, p), p
                )
                if lhs != rhs:
                    adj += 1
    lines.append(f"adjointness: {adj} mismatches")
    failed = failed or bool(adj)

    viol = monomial.triple_relation_violations(p, min(L, 6))
    lines.append(f"triple relations: {len(viol)} violations")
    failed = failed or bool(viol)

    cart = 0
    for s in states:
        base = {s: Fraction(1)}
        got1 = monomial.apply_pair_bracket(1, -1, 1, 1, base, p)
        got2 = monomial.apply_pair_bracket(2, -1, 2, 1, base, p)
        a, b = monomial.weight_offset(s)
        if got1 != {s: p - 2 * a} or got2 != {s: p + 2 * b}:
            cart += 1
    lines.append(f"Cartan action: {cart} violations")
    failed = failed or bool(cart)

    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_verify_gz(args) -> int:
    if args.m != 1 or args.n != 1:
        print(
            "error: Gelfand-Zetlin matrix elements are implemented for one "
            "parafermion and one paraboson pair only (m = n = 1)",
            file=sys.stderr,
        )
        return 2
    p, L = args.p, args.max_level
    lines = []
    failed = False
    viol = gz.triple_relation_violations(p, L)
    lines.append(f"triple relations: {len(viol)} violations")
    failed = failed or bool(viol)
    cart = gz.cartan_violations(p, L)
    lines.append(f"Cartan identities: {len(cart)} violations")
    failed = failed or bool(cart)
    adj = gz.adjoint_symmetry_violations(p, L)
    lines.append(f"adjoint symmetry: {len(adj)} violations")
    failed = failed or bool(adj)
    orth = gz.cgc_orthogonality_violations(L)
    lines.append(f"coupling-block orthogonality: {len(orth)} violations")
    failed = failed or bool(orth)
    rec = gz.check_recurrences([p] if p.denominator > 1 else range(1, 8), min(L, 6))
    lines.append(f"recurrence relations: {len(rec)} violations")
    failed = failed or bool(rec)
    if p.denominator == 1:
        trunc = gz.truncation_violations(int(p), L)
        lines.append(f"truncation closure: {len(trunc)} violations")
        failed = failed or bool(trunc)
    if p == 1:
        oracle = gz.p1_oracle_violations(L)
        lines.append(f"order-1 oracle: {len(oracle)} violations")
        failed = failed or bool(oracle)
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_gram(args) -> int:
    p, L = args.p, args.level
    records = []
    for offset in sorted(monomial.weight_offsets_up_to_level(L), key=lambda o: (sum(o), o)):
        states, mat = monomial.gram_matrix(offset, p)
        if not states:
            continue
        rk, null = monomial.gram_rank_and_null(offset, p)
        w1, w2 = -p / 2 + offset[0], p / 2 + offset[1]
        records.append(
            {
                "weight": [str(w1), str(w2)],
                "states": [list(s) for s in states],
                "gram": [[str(x) for x in row] for row in mat],
                "rank": rk,
                "null": [[vec.get(s, 0) for s in states] for vec in null],
            }
        )
    if args.format == "json":
        _emit(json.dumps(records, indent=2) + "\n", args.out)
    elif args.format == "csv":
        rows = [["w1", "w2", "rank", "states", "gram", "null"]]
        for r in records:
            rows.append(
                [
                    r["weight"][0],
                    r["weight"][1],
                    r["rank"],
                    ";".join(",".join(map(str, s)) for s in r["states"]),
                    ";".join(",".join(row) for row in r["gram"]),
                    ";".join(",".join(map(str, v)) for v in r["null"]),
                ]
            )
        _emit(_csv_text(rows), args.out)
    else:
        lines = []
        for r in records:
            lines.append(f"weight ({r['weight'][0]} | {r['weight'][1]}): rank {r['rank']}")
            lines.append(f"  states: {', '.join('|%d,%d,%d>' % tuple(s) for s in r['states'])}")
            for row in r["gram"]:
                lines.append("  [" + ", ".join(row) + "]")
            for vec, _ in zip(r["null"], range(len(r["null"]))):
                combo = {
                    monomial.MonomialState(*s): c
                    for s, c in zip((tuple(x) for x in r["states"]), vec)
                    if c
                }
                lines.append("  null vector: " + monomial.format_vector(combo))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_act(args) -> int:
    p, L = args.p, args.max_level
    if args.space == "v":
        if p.denominator != 1:
            print(
                "error: the truncated space requires a positive integer order; "
                "use --space vbar for rational p",
                file=sys.stderr,
            )
            return 2
        cap = int(p)
    else:
        cap = None
    pats = gz.enumerate_patterns(L, cap=cap)
    rows = []
    try:
        for pat in pats:
            for gen in gz.GENS:
                for target, value in gz.matrix_elements(gen, pat, p):
                    if cap is not None and target.m12 > cap:
                        continue
                    rows.append((pat, gen, target, value))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = [
            {
                "source": list(pat),
                "generator": gen,
                "target": list(target),
                "value": str(value),
            }
            for pat, gen, target, value in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        table = [["source", "generator", "target", "value"]]
        for pat, gen, target, value in rows:
            table.append(
                [",".join(map(str, pat)), gen, ",".join(map(str, target)), str(value)]
            )
        _emit(_csv_text(table), args.out)
    else:
        lines = [
            f"{gz.format_pattern(pat)} --{gen}--> {gz.format_pattern(target)} : {value}"
            for pat, gen, target, value in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_character(args) -> int:
    series = characters.character_series(args.m, args.n, args.p, args.degree)
    if args.check:
        king = characters.king_identity_check(args.m, args.n, min(args.degree, 6))
        pbw = characters.pbw_multiplicities(args.m, args.n, args.degree)
        series_ok = pbw == series.mult
        reports = [
            king,
            {
                "identity": "series-vs-monomial-enumeration",
                "m": args.m,
                "n": args.n,
                "degree": args.degree,
                "status": "equal" if series_ok else "DIFFER",
                "equal": series_ok,
            },
        ]
        _emit(json.dumps(reports, indent=2) + "\n", args.out)
        return 0 if all(r["equal"] for r in reports) else 1
    items = series.sorted_items()
    if args.format == "json":
        payload = {
            "m": args.m,
            "n": args.n,
            "degree": args.degree,
            "prefactor": series.prefactor(),
            "multiplicities": [
                {"offset": list(off), "multiplicity": mult} for off, mult in items
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        rows = [["offset", "multiplicity"]]
        rows += [[";".join(map(str, off)), mult] for off, mult in items]
        _emit(_csv_text(rows), args.out)
    else:
        lines = [f"prefactor: {series.prefactor()}"]
        lines += [f"({','.join(map(str, off))}) : {mult}" for off, mult in items]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_branch(args) -> int:
    rows = []
    for lam in characters.hook_partitions(args.degree, args.m, args.n):
        hw = characters.hw_from_partition(lam, args.m, args.n)
        rows.append((lam, hw))
    if args.format == "json":
        payload = [
            {"partition": list(lam), "highest_weight": list(hw)} for lam, hw in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        table = [["partition", "highest_weight"]]
        table += [
            [" ".join(map(str, lam)) or "-", " ".join(map(str, hw))] for lam, hw in rows
        ]
        _emit(_csv_text(table), args.out)
    else:
        lines = [
            f"{str(list(lam)):<18} -> [{', '.join(map(str, hw[:args.m]))} | "
            f"{', '.join(map(str, hw[args.m:]))}]"
            for lam, hw in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_dims(args) -> int:
    rows = []
    failed = False
    for lam in characters.hook_partitions(args.degree, args.m, args.n):
        hw = characters.hw_from_partition(lam, args.m, args.n)
        count = len(characters.enumerate_gz_general(hw, args.m, args.n))
        dim = characters.principal_specialization(
            characters.super_schur(lam, args.m, args.n)
        )
        rows.append((lam, hw, count, dim))
        failed = failed or count != dim
    if args.format == "json":
        payload = [
            {
                "partition": list(lam),
                "highest_weight": list(hw),
                "pattern_count": count,
                "dimension": dim,
            }
            for lam, hw, count, dim in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        table = [["partition", "highest_weight", "pattern_count", "dimension"]]
        table += [
            [" ".join(map(str, lam)) or "-", " ".join(map(str, hw)), count, dim]
            for lam, hw, count, dim in rows
        ]
        _emit(_csv_text(table), args.out)
    else:
        lines = [
            f"{str(list(lam)):<18} hw {str(list(hw)):<16} patterns {count:>5}  dim {dim:>5}"
            f"{'' if count == dim else '  MISMATCH'}"
            for lam, hw, count, dim in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parafock",
        description="Exact parastatistics Fock space toolkit: verification "
        "suites and matrix-element, Gram, and character tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m_n=True, order=True, fmt=True):
        if m_n:
            p.add_argument("--m", type=int, default=1, help="parafermion pairs")
            p.add_argument("--n", type=int, default=1, help="paraboson pairs")
        if order:
            p.add_argument("--p", type=_parse_p, default=Fraction(1), help="order, rational a/b")
        if fmt:
            p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("verify-defining", help="matrix-realization relation oracle")
    common(p, order=False, fmt=False)
    p.add_argument("--mutate", action="store_true", help="negative control: corrupt one generator entry")
    p.set_defaults(func=cmd_verify_defining)

    p = sub.add_parser("verify-induced", help="monomial-basis module checks")
    common(p, m_n=False, fmt=False)
    p.add_argument("--max-level", type=int, default=6)
    p.set_defaults(func=cmd_verify_induced)

    p = sub.add_parser("verify-gz", help="Gelfand-Zetlin matrix-element checks")
    common(p, fmt=False)
    p.add_argument("--max-level", type=int, default=6)
    p.set_defaults(func=cmd_verify_gz)

    p = sub.add_parser("gram", help="per-weight Gram matrices, ranks and null vectors")
    common(p, m_n=False)
    p.add_argument("--level", type=int, default=4)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("act", help="Gelfand-Zetlin matrix-element table")
    common(p, m_n=False)
    p.add_argument("--max-level", type=int, default=4)
    p.add_argument(
        "--space",
        choices=("v", "vbar"),
        default="v",
        help="v: truncated irreducible space; vbar: no truncation",
    )
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("character", help="weight multiplicity table")
    common(p)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--check", action="store_true", help="run identity checks, emit JSON report")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("branch", help="branching highest weights for hook partitions")
    common(p, order=False)
    p.add_argument("--degree", type=int, default=4)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("dims", help="pattern counts against dimensions")
    common(p, order=False)
    p.add_argument("--degree", type=int, default=4)
    p.set_defaults(func=cmd_dims)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "m", 1) < 1 or getattr(args, "n", 1) < 1:
        print("error: need m >= 1 and n >= 1", file=sys.stderr)
        return 2
    return args.func(args)


def console_main():  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
