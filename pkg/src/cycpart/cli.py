"""Command-line interface: ``cycpart <command> [args]``.

Exit codes: 0 success, 1 usage or domain error, 2 verification failure,
3 I/O error. JSON output keeps every count as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import genfunc, necklaces, oracle, partitions, verify
from .numtheory import binomial, divisors, gcd

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _tsv(rows) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def envelope(command: str, parameters: dict, payload) -> str:
    doc = {"command": command, "format": "json", "parameters": parameters, "payload": payload}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def cmd_qtable(args) -> str:
    _need(args.m >= 1, "m must be >= 1")
    table = partitions.q_table(args.m, args.t)
    total = binomial(args.m, args.t) if 0 <= args.t <= args.m else 0
    if args.format == "json":
        payload = {"rows": [{"n": n, "count": str(v)} for n, v in enumerate(table)], "total": str(total)}
        return envelope("qtable", {"m": args.m, "t": args.t}, payload)
    return _tsv([("n", "Q"), *enumerate(table), ("total", total)])


def cmd_prob(args) -> str:
    _need(args.m >= 1 and 0 <= args.t <= args.m, "need m >= 1 and 0 <= t <= m")
    dist = partitions.urn_distribution(args.m, args.t)
    table = partitions.q_table(args.m, args.t)
    total = binomial(args.m, args.t)
    best = partitions.maximizers(args.m, args.t).maximizing_residues
    rows = [(n, f"{q}/{total}", f"{p.numerator}/{p.denominator}") for n, (q, p) in enumerate(zip(table, dist.probabilities))]
    if args.format == "json":
        payload = {
            "rows": [{"n": n, "probability": raw, "reduced": red} for n, raw, red in rows],
            "best_guess": list(best),
        }
        return envelope("prob", {"m": args.m, "t": args.t}, payload)
    return _tsv([("n", "probability", "reduced"), *rows, ("best_guess", _csv(best))])


def cmd_max(args) -> str:
    _need(args.m >= 1 and 0 <= args.t <= args.m, "need m >= 1 and 0 <= t <= m")
    rep = partitions.maximizers(args.m, args.t)
    if args.format == "json":
        payload = {
            "case": rep.case_id,
            "witness_gcd": rep.witness_gcd,
            "residues": list(rep.maximizing_residues),
            "max_value": str(rep.max_value),
        }
        return envelope("max", {"m": args.m, "t": args.t}, payload)
    return _tsv(
        [
            ("case", rep.case_id),
            ("witness_gcd", rep.witness_gcd),
            ("residues", _csv(rep.maximizing_residues)),
            ("max_value", rep.max_value),
        ]
    )


def cmd_necklaces(args) -> str:
    m, t = args.m, args.t
    _need(m >= 1 and 0 <= t <= m, "need m >= 1 and 0 <= t <= m")
    params = {"m": m, "t": t}
    if args.list:
        _need(m <= oracle.MAX_NECKLACE_M, f"--list needs m <= {oracle.MAX_NECKLACE_M}")
        words = oracle.enumerate_necklaces(m, t)
        if args.format == "json":
            payload = [{"beads": w.beads, "frequency": w.frequency} for w in words]
            return envelope("necklaces", {**params, "list": True}, payload)
        return _tsv((w.beads, w.frequency) for w in words)
    if args.divides is not None:
        _need(args.divides >= 1, "--divides needs n >= 1")
        count = necklaces.count_freq_dividing(m, t, args.divides)
        if args.format == "json":
            return envelope("necklaces", {**params, "divides": args.divides}, {"count": str(count)})
        return f"{count}\n"
    by_freq = [(u, necklaces.count_exact_frequency(m, t, u)) for u in divisors(gcd(m, t))]
    total = sum(c for _, c in by_freq)
    if args.format == "json":
        payload = {"by_frequency": [{"frequency": u, "count": str(c)} for u, c in by_freq], "total": str(total)}
        return envelope("necklaces", params, payload)
    return _tsv([("frequency", "count"), *by_freq, ("total", total)])


def cmd_audit(args) -> str:
    _need(args.m >= 1, "m must be >= 1")
    audit = necklaces.identity_audit(args.m)
    if args.format == "json":
        payload = {
            "partition_total": str(audit.partition_total),
            "necklace_total": str(audit.necklace_total),
            "excluded": [{"t": t, "frequency": u, "count": str(c)} for t, u, c in audit.excluded],
            "balanced": audit.balanced,
        }
        return envelope("audit", {"m": args.m}, payload)
    return _tsv(
        [
            ("partition_total", audit.partition_total),
            ("necklace_total", audit.necklace_total),
            ("excluded_total", audit.excluded_total),
            ("t", "frequency", "count"),
            *audit.excluded,
        ]
    )


def cmd_verify(args) -> tuple[str, int]:
    m = args.max_m
    _need(m >= 1, "--max-m must be >= 1")
    if args.suite in ("oracle", "all"):
        _need(m <= verify.MAX_M_ORACLE, f"--max-m must be <= {verify.MAX_M_ORACLE} for the oracle suite")
    if args.suite == "dft":
        _need(m <= verify.MAX_M_DFT, f"--max-m must be <= {verify.MAX_M_DFT} for the dft suite")
    if args.suite == "identities":
        _need(m <= 64, "--max-m must be <= 64 for the identities suite")
    results = []
    for name, cx in verify.run_suite(args.suite, m):
        results.append((name, cx))
        if cx is not None:
            break
    ok = all(cx is None for _, cx in results)
    code = EXIT_OK if ok else EXIT_VERIFY
    if args.format == "json":
        payload = {
            "passed": ok,
            "checks": [
                {"name": name, "status": "pass" if cx is None else "fail", "counterexample": None if cx is None else str(cx)}
                for name, cx in results
            ],
        }
        return envelope("verify", {"max_m": m, "suite": args.suite}, payload), code
    lines = [f"{'PASS' if cx is None else 'FAIL'}\t{name}" + ("" if cx is None else f"\t{cx}") for name, cx in results]
    lines.append("all checks passed" if ok else "verification FAILED")
    return "\n".join(lines) + "\n", code


def cmd_diagram(args) -> str:
    _need(args.m >= 1, "m must be >= 1")
    wall = partitions.diagram(args.m, args.t)
    return wall.svg() if args.format == "svg" else wall.ascii()


def cmd_fpoly(args) -> str:
    _need(args.m >= 1 and args.u >= 1, "need m >= 1 and u >= 1")
    coeffs = genfunc.f_closed_coeffs(args.m, args.u)
    if args.format == "json":
        return envelope("fpoly", {"m": args.m, "u": args.u}, {"coefficients": [str(c) for c in coeffs]})
    return " ".join(map(str, coeffs)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cycpart", description="Partitions of Z/mZ into distinct parts, and necklaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, fmt=("tsv", "json")):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        return p

    p = add("qtable", cmd_qtable, "table of Q_{m,t}(n) over all residues n")
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)

    p = add("prob", cmd_prob, "distribution of the urn statistic")
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)

    p = add("max", cmd_max, "residues maximizing Q_{m,t}")
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)

    p = add("necklaces", cmd_necklaces, "count or list bi-color necklaces")
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--divides", type=int, metavar="N", help="count necklaces whose frequency divides N")
    mode.add_argument("--list", action="store_true", help="list canonical necklaces with their frequency")

    p = add("audit", cmd_audit, "compare sum_t Q_{m,t}(0) with the number of necklaces")
    p.add_argument("m", type=int)

    p = add("verify", cmd_verify, "run verification sweeps")
    p.add_argument("--max-m", type=int, default=verify.MAX_M_DFT)
    p.add_argument("--suite", choices=verify.SUITES, default="all")

    p = add("diagram", cmd_diagram, "wall diagram of n -> Q_{m,t}(n)", fmt=("ascii", "svg"))
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)

    p = add("fpoly", cmd_fpoly, "coefficients of F_m(1, lambda_m^u, z)")
    p.add_argument("m", type=int)
    p.add_argument("u", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
