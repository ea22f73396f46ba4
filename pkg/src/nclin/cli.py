"""Command-line front end.

Exit codes: 0 when every expected-zero residual vanishes and every
counterexample witness is nonzero, 1 when an identity check fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from typing import List, Optional, Sequence, Tuple

from .coeffring import CoeffPoly
from .ncalgebra import SPECIES_CODE, RelationSystem, SymmetryRule, algebra
from .ncmatrix import NCMatrix, commutativity_class
from .rings import INTEGERS, M2GF2, GF2Mat, NCRing

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
VERIFY_FRAMEWORKS = ("abstract-h1h2", "abstract-matrix-h", "weyl", "commutative", "m2gf2")
SYM_CHOICES = ("none", "sym", "antisym", "antisym-offdiag")


class InputError(ValueError):
    """Malformed input file; the message carries the position."""


# matrix files ---------------------------------------------------------------------

_GEN = re.compile(r"([abxd])\[\s*(\d+)\s*,\s*(\d+)\s*\]")
_INT = re.compile(r"\d+")


def _line_col(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_nc_entry(s: str, alg):
    """Parse ``term (("+"|"-") term)*`` with ``term := [int "*"] gen+``.

    Generators are joined by ``*``; raises ValueError(message, offset).
    """
    pos = 0
    n = len(s)
    total = alg.zero()

    def skip(p):
        while p < n and s[p] == " ":
            p += 1
        return p

    pos = skip(pos)
    if pos == n:
        raise ValueError("empty entry", pos)
    sign = 1
    first = True
    while True:
        pos = skip(pos)
        if not first or (pos < n and s[pos] in "+-"):
            if pos >= n or s[pos] not in "+-":
                raise ValueError("expected '+' or '-'", pos)
            sign = 1 if s[pos] == "+" else -1
            pos = skip(pos + 1)
        first = False
        coef = 1
        m = _INT.match(s, pos)
        term = None
        if m:
            coef = int(m.group())
            pos = skip(m.end())
            if pos < n and s[pos] == "*":
                pos = skip(pos + 1)
            elif pos < n and s[pos] not in "+-":
                raise ValueError("expected '*' after coefficient", pos)
            else:
                term = alg.one()
        if term is None:
            term = alg.one()
            ngen = 0
            while True:
                g = _GEN.match(s, pos)
                if not g:
                    if pos < n and s[pos] in "abxd":
                        raise ValueError("malformed generator, expected like a[1,2]", pos)
                    raise ValueError("expected a generator", pos)
                sp, i, j = g.group(1), int(g.group(2)), int(g.group(3))
                if SPECIES_CODE[sp] not in alg.rel.species:
                    raise ValueError(f"generator {sp} not allowed under {alg.rel.kind} relations", pos)
                if not (1 <= i <= 99 and 1 <= j <= 99):
                    raise ValueError("generator indices must be between 1 and 99", pos)
                term = term * alg.gen(sp, i, j)
                ngen += 1
                pos = skip(g.end())
                if pos < n and s[pos] == "*":
                    pos = skip(pos + 1)
                    continue
                if pos < n and s[pos] in "abxd":
                    continue
                break
        total = total + term * (sign * coef)
        pos = skip(pos)
        if pos == n:
            return total


def _gf2_entry(v, where: str) -> GF2Mat:
    if (not isinstance(v, list) or len(v) != 2
            or any(not isinstance(r, list) or len(r) != 2 for r in v)):
        raise InputError(f"{where}: m2gf2 entry must be a 2x2 list like [[1,0],[0,0]]")
    try:
        return GF2Mat.from_rows(v)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def parse_matrix_text(text: str, source: str = "<input>") -> NCMatrix:
    """Matrix from a JSON document
    {"backend": "nc"|"m2gf2"|"int", "rows": m, "cols": n, "entries": [[...]]}.

    nc documents may add {"relations": {"kind", "h", "h2", "orientation"},
    "symmetry": {"a": flag, ...}}.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{source}:1:1: top level must be an object")
    for key in ("backend", "rows", "cols", "entries"):
        if key not in doc:
            raise InputError(f"{source}: missing field {key!r}")
    backend, m, n, entries = doc["backend"], doc["rows"], doc["cols"], doc["entries"]
    if backend not in ("nc", "m2gf2", "int"):
        raise InputError(f"{source}: backend must be nc, m2gf2 or int, got {backend!r}")
    if not (isinstance(m, int) and isinstance(n, int) and 1 <= m <= 8 and 1 <= n <= 8):
        raise InputError(f"{source}: rows and cols must be integers between 1 and 8")
    if not isinstance(entries, list) or len(entries) != m or any(
            not isinstance(r, list) or len(r) != n for r in entries):
        raise InputError(f"{source}: entries must be a {m} x {n} list of lists")
    if backend == "int":
        for i, row in enumerate(entries):
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise InputError(f"{source}: entry ({i + 1},{j + 1}) must be an integer")
        return NCMatrix.from_rows(INTEGERS, entries)
    if backend == "m2gf2":
        rows = [[_gf2_entry(v, f"{source}: entry ({i + 1},{j + 1})") for j, v in enumerate(row)]
                for i, row in enumerate(entries)]
        return NCMatrix.from_rows(M2GF2, rows)
    rel_doc = doc.get("relations", {"kind": "abstract-h1h2"})
    try:
        rel = RelationSystem(**rel_doc)
        sym = SymmetryRule.of(**doc.get("symmetry", {}))
        alg = algebra(rel, sym)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{source}: bad relations/symmetry: {exc}") from None
    out_rows = []
    search = 0
    for i, row in enumerate(entries):
        out = []
        for j, v in enumerate(row):
            if not isinstance(v, str):
                raise InputError(f"{source}: entry ({i + 1},{j + 1}) must be a string")
            lit = json.dumps(v)
            off = text.find(lit, search)
            if off >= 0:
                search = off + len(lit)
            try:
                out.append(parse_nc_entry(v, alg))
            except ValueError as exc:
                msg, where = exc.args if len(exc.args) == 2 else (str(exc), 0)
                if off >= 0:
                    line, col = _line_col(text, off + 1 + where)
                    loc = f"{source}:{line}:{col}"
                else:
                    loc = f"{source}: entry ({i + 1},{j + 1}) char {where + 1}"
                raise InputError(f"{loc}: {msg} in {v!r}") from None
        out_rows.append(out)
    return NCMatrix.from_rows(NCRing(alg), out_rows)


def parse_matrix_file(path: str) -> NCMatrix:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_matrix_text(text, path)


# argument helpers -------------------------------------------------------------------

def _index_set(s: str) -> Tuple[int, ...]:
    s = s.strip().strip("{}[]()")
    if not s:
        return ()
    try:
        return tuple(int(t) for t in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"index set must look like 1,3 (got {s!r})") from None


def _int_range(s: str) -> Tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:,|:|\.\.)\s*(-?\d+)\s*", s)
    if not m:
        raise argparse.ArgumentTypeError(f"range must look like -3,3 (got {s!r})")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError("range is empty")
    return lo, hi


def _int_tuple(k: int):
    def conv(s: str):
        try:
            vals = tuple(int(t) for t in s.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {k} comma-separated integers") from None
        if len(vals) != k:
            raise argparse.ArgumentTypeError(f"expected {k} comma-separated integers")
        return vals
    return conv


def _default_jobs() -> int:
    raw = os.environ.get("NCLIN_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(args, records: List[dict], lines: List[str]) -> None:
    if args.output == "json":
        for rec in records:
            print(json.dumps(rec, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _fmt(I) -> str:
    return "{" + ",".join(map(str, I)) + "}"


# commands -------------------------------------------------------------------------

def cmd_verify(args) -> int:
    from . import report
    from .identities import IDENTITIES, IdentitySpec, grid, index_dim, verify

    info = IDENTITIES[args.name]
    fw = args.framework or info.frameworks[0]
    if fw not in info.frameworks:
        raise InputError(f"identity {args.name} supports frameworks {', '.join(info.frameworks)}")
    if info.square and args.m != args.n:
        raise InputError(f"identity {args.name} needs m = n")
    dim = index_dim(args.name, args.m, args.n)
    if args.r is not None and not 1 <= args.r <= dim:
        raise InputError(f"--r must be between 1 and {dim}")
    if (args.I is None) != (args.J is None) and info.indices == "IJ":
        raise InputError("--I and --J must be given together")
    for flag in (args.symA, args.symB):
        if flag not in (None, "none") and args.name not in ("prop_1_3a", "prop_1_3b",
                                                             "prop_1_4a", "prop_1_4b"):
            raise InputError("--symA/--symB only apply to the symmetric and antisymmetric identities")
    s_values = (args.s,) if args.s is not None else ((0, 1, 2) if info.uses_s else (0,))
    if any(s < 0 for s in s_values):
        raise InputError("--s must be nonnegative")
    if args.I is not None:
        r = len(args.I)
        if args.r is not None and args.r != r:
            raise InputError("--r disagrees with |I|")
        J = args.J if args.J is not None else ()
        specs = [IdentitySpec(args.name, args.m, args.n, r, args.I, J, fw, s) for s in s_values]
    else:
        specs = list(grid(args.name, fw, m_values=[args.m], n_values=[args.n], s_values=s_values,
                          r_values=[args.r] if args.r is not None else None))
    sym_a = None if args.symA in (None, "none") else args.symA
    sym_b = None if args.symB in (None, "none") else args.symB
    for sp in specs:
        sp.symA, sp.symB = sym_a, sym_b
    for sp in specs:
        # validate every case before computing anything
        if info.indices in ("IJ", "I") and len(sp.I) != sp.r:
            raise InputError("index set sizes must equal r")
    t0 = time.perf_counter()
    results = []
    try:
        if args.jobs > 1:
            from .identities import verify_many

            results = verify_many(specs, args.jobs)
        else:
            results = [verify(sp) for sp in specs]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    elapsed = (time.perf_counter() - t0) * 1000.0
    records, lines = [], []
    for res in results:
        rec = res.as_dict()
        rec["wall_time_ms"] = round(elapsed / len(results), 3) if args.timing else None
        records.append(rec)
        p = res.params
        where = f"m={p['m']} n={p['n']} r={p['r']}"
        if p.get("I"):
            where += f" I={_fmt(p['I'])}"
        if p.get("J"):
            where += f" J={_fmt(p['J'])}"
        if "s" in p:
            where += f" s={p['s']}"
        status = "zero" if res.is_zero else f"NONZERO ({res.term_count} words)"
        hyp = "" if res.hypotheses_hold else " [hypotheses not met]"
        lines.append(f"{res.name} [{fw}] {where}: residual {status}{hyp}"
                     f"{'' if res.ok else '  <-- FAIL'}")
    ok = all(r.ok for r in results)
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} cases as expected")
    _emit(args, records, lines)
    if args.report_dir:
        report.verify_report(results, args.report_dir, f"verify_{args.name}_{fw}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_explore(args) -> int:
    from . import report
    from .explorer import LONG_N, SCENARIO_ORDER, Scenario, explore, scenario_table

    n = args.n
    if not 1 <= n <= 6:
        raise InputError("--n must be between 1 and 6")
    if n >= LONG_N and not args.allow_long:
        raise InputError(f"n = {n} is long-running; pass --allow-long")
    c_range = args.c_range or (-n, n)
    if args.framework == "weyl":
        if args.weyl is None:
            raise InputError("--framework weyl needs --weyl alpha,beta,gamma,delta")
        reports = [explore(Scenario.weyl_instance(n, *args.weyl), c_range, allow_long=True)]
    else:
        if args.all_scenarios:
            names = SCENARIO_ORDER
        elif args.scenario:
            names = tuple(args.scenario)
        else:
            raise InputError("give --scenario NAME or --all-scenarios")
        if args.product == "AtB":
            reports = scenario_table(n, c_range, allow_long=True, jobs=args.jobs, names=names)
        else:
            reports = [explore(Scenario.named(nm, n, args.product), c_range, allow_long=True)
                       for nm in names]
    records, lines = [], []
    for rep in reports:
        records.append(rep.as_dict(timing=args.timing))
        sols = ", ".join("(" + ",".join(map(str, s)) + ")" for s in rep.solutions) or "none"
        tag = ""
        if rep.matches_expected is not None:
            exp = ", ".join("(" + ",".join(map(str, s)) + ")" for s in sorted(rep.expected)) or "none"
            tag = "  matches published" if rep.matches_expected else f"  <-- published: {exp}"
        lines.append(f"n={n} {rep.scenario.label():10s} q/h1 in {c_range}: {sols}{tag}")
    ok = all(rep.matches_expected is not False for rep in reports)
    _emit(args, records, lines)
    if args.report_dir:
        report.explore_report(reports, args.report_dir, f"explore_n{n}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cayley(args) -> int:
    from . import report
    from .ncmatrix import subsets
    from .weyl_action import cayley_grid, verify_cayley, verify_cor_A_2

    n = args.n
    if not 1 <= n <= 4:
        raise InputError("--n must be between 1 and 4")
    s_values = [args.s] if args.s is not None else list(range(1, 4))
    if any(s < 0 for s in s_values):
        raise InputError("--s must be nonnegative")
    if (args.I is None) != (args.J is None):
        raise InputError("--I and --J must be given together")
    if args.I is not None and len(args.I) != len(args.J):
        raise InputError("|I| and |J| differ")
    for S in (args.I or (), args.J or ()):
        if any(not 1 <= i <= n for i in S) or len(set(S)) != len(S):
            raise InputError(f"index set {S} must be distinct entries of 1..{n}")
    records, lines = [], []
    results = []
    ok = True
    if args.operator:
        if n > 2:
            raise InputError("the operator identity is limited to n <= 2")
        cases = []
        for s in s_values:
            if args.I is not None:
                cases.append((s, tuple(sorted(args.I)), tuple(sorted(args.J))))
            else:
                for r in range(1, n + 1):
                    for I in subsets(n, r):
                        for J in subsets(n, r):
                            cases.append((s, I, J))
        for s, I, J in cases:
            t0 = time.perf_counter()
            res, lhs, rhs = verify_cor_A_2(n, s, I, J)
            ms = (time.perf_counter() - t0) * 1000.0
            z = res.is_zero()
            ok &= z
            records.append({"name": "cayley_operator", "params": {"n": n, "s": s, "I": list(I),
                                                                   "J": list(J)},
                            "hypothesis_audit": {"relation": "[x_ij,d_kl] = -delta_ik delta_jl"},
                            "residual_is_zero": z, "residual_term_count": res.term_count(),
                            "lhs_term_count": lhs.term_count(),
                            "wall_time_ms": round(ms, 3) if args.timing else None})
            lines.append(f"operator n={n} s={s} I={_fmt(I)} J={_fmt(J)}: residual "
                         f"{'zero' if z else 'NONZERO'} ({lhs.term_count()} words per side)")
    else:
        if args.I is not None:
            cases = [(n, s, tuple(sorted(args.I)), tuple(sorted(args.J))) for s in s_values]
        else:
            cases = [c for c in cayley_grid(n, max(s_values), args.k_max)
                     if c[0] == n and c[1] in s_values]
        for n_, s, I, J in cases:
            t0 = time.perf_counter()
            res = verify_cayley(n_, s, I, J)
            ms = (time.perf_counter() - t0) * 1000.0
            results.append(res)
            ok &= res.is_zero
            rec = {"name": "cayley", "params": {"n": n_, "s": s, "I": list(I), "J": list(J)},
                   "hypothesis_audit": {"s nonnegative": True},
                   "residual_is_zero": res.is_zero, "residual_term_count": len(res.residual),
                   "lhs_term_count": len(res.lhs), "rhs_term_count": len(res.rhs),
                   "wall_time_ms": round(ms, 3) if args.timing else None}
            records.append(rec)
            lines.append(f"cayley n={n_} s={s} I={_fmt(I)} J={_fmt(J)}: residual "
                         f"{'zero' if res.is_zero else 'NONZERO'} ({len(res.lhs)} terms)")
    lines.append(f"{'all' if ok else 'NOT all'} residuals zero over {len(records)} cases")
    _emit(args, records, lines)
    if args.report_dir and results:
        report.cayley_report(results, args.report_dir, f"cayley_n{n}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_counterexample(args) -> int:
    from .identities import COUNTEREXAMPLES, counterexample

    ids = COUNTEREXAMPLES if args.all else [args.id]
    if not args.all and args.id is None:
        raise InputError("give --id NAME or --all")
    records, lines = [], []
    ok = True
    for cid in ids:
        t0 = time.perf_counter()
        res = counterexample(cid)
        ms = (time.perf_counter() - t0) * 1000.0
        rec = res.as_dict()
        rec["wall_time_ms"] = round(ms, 3) if args.timing else None
        rec["residual"] = str(res.element)
        records.append(rec)
        ok &= res.ok
        verdict = "residual nonzero as expected" if res.ok else "UNEXPECTED residual"
        lines.append(f"{cid}: {verdict}; {res.note}")
        lines.append(f"  residual = {res.element}")
        for k, v in res.parts.items():
            lines.append(f"  {k}: {v}")
    _emit(args, records, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_predicates(args) -> int:
    from .extensions import grassmann_ext_check, poly_ext_commute_check

    M = parse_matrix_file(args.matrix)
    rep = commutativity_class(M)
    anti, squares = grassmann_ext_check(M)
    poly = poly_ext_commute_check(M)
    checks = {
        "polynomial forms commute <=> row-pseudo-commutative": poly == rep.row_pseudo_commutative,
        "Grassmann forms anticommute <=> row-symmetric commutators":
            anti == rep.row_symmetric_commutators,
        "Grassmann relations hold <=> row-pseudo-commutative":
            (anti and squares) == rep.row_pseudo_commutative,
    }
    violations = rep.implication_violations()
    ok = all(checks.values()) and not violations
    rec = {"name": "predicates", "params": {"matrix": os.path.basename(args.matrix),
                                             "rows": M.rows, "cols": M.cols},
           "predicates": rep.as_dict(), "extension_checks": checks,
           "extensions": {"polynomial_forms_commute": poly, "grassmann_anticommute": anti,
                          "grassmann_squares_zero": squares},
           "implication_violations": violations, "wall_time_ms": None}
    lines = [f"{k}: {v}" for k, v in rep.as_dict().items()]
    lines += [f"check {k}: {'ok' if v else 'FAILED'}" for k, v in checks.items()]
    if violations:
        lines.append("implication violations: " + "; ".join(violations))
    if args.det and M.rows == M.cols:
        from .ncmatrix import DET_VARIANTS, nc_det

        for v in DET_VARIANTS:
            val = nc_det(M, v)
            rec.setdefault("determinants", {})[v] = str(val)
            lines.append(f"{v} = {val}")
    _emit(args, [rec], lines)
    return EXIT_OK if ok else EXIT_FAIL


# parser ------------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    from .explorer import SCENARIO_ORDER
    from .identities import COUNTEREXAMPLES, IDENTITIES

    p = _Parser(prog="nclin", description="Exact checks of noncommutative Cauchy-Binet, "
                                          "Capelli and Turnbull identities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker processes (default: $NCLIN_JOBS or 1)")
    common.add_argument("--timing", action="store_true",
                        help="fill wall_time_ms (otherwise null, for byte-stable output)")
    common.add_argument("--report-dir", help="write TSV tables and PNG figures here")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", parents=[common], help="residuals of a named identity")
    v.add_argument("--name", required=True, choices=sorted(IDENTITIES))
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--r", type=int)
    v.add_argument("--I", type=_index_set)
    v.add_argument("--J", type=_index_set)
    v.add_argument("--framework", choices=VERIFY_FRAMEWORKS)
    v.add_argument("--symA", choices=SYM_CHOICES)
    v.add_argument("--symB", choices=SYM_CHOICES)
    v.add_argument("--s", type=int)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("explore", parents=[common], help="search diagonal corrections Q")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--scenario", action="append", choices=SCENARIO_ORDER)
    e.add_argument("--all-scenarios", action="store_true")
    e.add_argument("--c-range", type=_int_range, help="candidate range for q_i/h1, e.g. -3,3")
    e.add_argument("--framework", choices=("abstract", "weyl"), default="abstract")
    e.add_argument("--weyl", type=_int_tuple(4), help="alpha,beta,gamma,delta")
    e.add_argument("--product", choices=("AtB", "AB"), default="AtB",
                   help="search col-det(A^T B + Q) (default) or col-det(A B + Q)")
    e.add_argument("--allow-long", action="store_true",
                   default=os.environ.get("NCLIN_ALLOW_LONG") == "1")
    e.set_defaults(func=cmd_explore)

    c = sub.add_parser("cayley", parents=[common], help="Cayley identities for (det X)^s")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--s", type=int)
    c.add_argument("--I", type=_index_set)
    c.add_argument("--J", type=_index_set)
    c.add_argument("--k-max", type=int)
    c.add_argument("--operator", action="store_true",
                   help="check the operator form in the Weyl algebra (n <= 2)")
    c.set_defaults(func=cmd_cayley)

    x = sub.add_parser("counterexample", parents=[common], help="fixed counterexamples")
    x.add_argument("--id", choices=COUNTEREXAMPLES)
    x.add_argument("--all", action="store_true")
    x.set_defaults(func=cmd_counterexample)

    q = sub.add_parser("predicates", parents=[common], help="commutativity class of a matrix")
    q.add_argument("--matrix", required=True, help="JSON matrix file")
    q.add_argument("--det", action="store_true", help="also print the four determinants")
    q.set_defaults(func=cmd_predicates)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("nclin: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "m", 1) is not None and not 1 <= getattr(args, "m", 1) <= 4:
        print("nclin: error: --m must be between 1 and 4", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "verify" and not 1 <= args.n <= 4:
        print("nclin: error: --n must be between 1 and 4", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InputError as exc:
        print(f"nclin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
