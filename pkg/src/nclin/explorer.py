"""Search for diagonal corrections Q with (det A)(det B) = col-det(A^T B + Q).

The residual f is expanded once with symbolic central q_1..q_n.  Every word
of f contributes polynomial conditions on c after q_i = c_i * h1; a
candidate c solves the problem iff all of them vanish.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .coeffring import CoeffPoly, h1_key, q_key
from .ncalgebra import NCElement, RelationSystem, SymmetryRule, algebra
from .ncmatrix import NCMatrix, nc_det, transpose
from .rings import NCRing

MAX_N = 6
LONG_N = 5

# name -> (h2 relation, symmetry of A, symmetry of B)
SCENARIOS: Dict[str, Tuple[str, str, str]] = {
    "capelli": ("zero", "none", "none"),
    "Asym": ("plus", "sym", "none"),
    "Bsym": ("plus", "none", "sym"),
    "ABsym": ("plus", "sym", "sym"),
    "Aanti": ("minus", "antisym", "none"),
    "Banti": ("minus", "none", "antisym"),
    "ABanti": ("minus", "antisym", "antisym"),
}
SCENARIO_ORDER = tuple(SCENARIOS)


@dataclass(frozen=True)
class Scenario:
    n: int
    h2_relation: str = "zero"
    symA: str = "none"
    symB: str = "none"
    framework: str = "abstract"
    # A = alpha X + beta X^T, B = gamma Y + delta Y^T in the Weyl framework
    weyl: Tuple[int, int, int, int] = (1, 0, 1, 0)
    name: str = ""
    # "AtB" searches col-det(A^T B + Q); "AB" the variant col-det(A B + Q)
    product: str = "AtB"

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be between 1 and {MAX_N}")
        if self.product not in ("AtB", "AB"):
            raise ValueError(f"unknown product {self.product!r}")
        if self.framework not in ("abstract", "weyl"):
            raise ValueError(f"unknown explorer framework {self.framework!r}")
        if self.framework == "abstract":
            kinds = {("sym" if f == "sym" else "anti") for f in (self.symA, self.symB) if f != "none"}
            if len(kinds) > 1:
                raise ValueError("opposite symmetries force h1 = h2 = 0")
            if kinds:
                need = "plus" if kinds == {"sym"} else "minus"
                if self.h2_relation != need:
                    raise ValueError(f"symmetry flags force h2 relation {need!r}")
            if self.h2_relation not in ("zero", "plus", "minus", "free"):
                raise ValueError(f"unknown h2 relation {self.h2_relation!r}")

    @classmethod
    def named(cls, name: str, n: int, product: str = "AtB") -> "Scenario":
        if name not in SCENARIOS:
            raise ValueError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIOS)}")
        h2, sa, sb = SCENARIOS[name]
        return cls(n, h2, sa, sb, name=name, product=product)

    @classmethod
    def weyl_instance(cls, n: int, alpha: int, beta: int, gamma: int, delta: int) -> "Scenario":
        return cls(n, framework="weyl", weyl=(alpha, beta, gamma, delta),
                   name=f"weyl({alpha},{beta},{gamma},{delta})")

    @property
    def h1_weyl(self) -> int:
        a, b, g, d = self.weyl
        return a * g + b * d

    @property
    def h2_weyl(self) -> int:
        a, b, g, d = self.weyl
        return a * d + b * g

    def label(self) -> str:
        base = self.name or f"h2={self.h2_relation},A={self.symA},B={self.symB}"
        return base if self.product == "AtB" else f"{base}[AB]"


def build_matrices(sc: Scenario):
    """The algebra of a scenario and its matrices A, B."""
    n = sc.n
    if sc.framework == "abstract":
        sym = SymmetryRule.of(a=sc.symA, b=sc.symB)
        alg = algebra(RelationSystem("abstract-h1h2", h2=sc.h2_relation), sym)
        ring = NCRing(alg)
        A = NCMatrix.build(ring, n, n, lambda i, j: alg.gen("a", i, j))
        B = NCMatrix.build(ring, n, n, lambda i, j: alg.gen("b", i, j))
    else:
        alg = algebra(RelationSystem("weyl", h=1))
        ring = NCRing(alg)
        X = NCMatrix.build(ring, n, n, lambda i, j: alg.gen("x", i, j))
        Y = NCMatrix.build(ring, n, n, lambda i, j: alg.gen("d", i, j))
        a, b, g, d = sc.weyl
        A = X.scale(a) + transpose(X).scale(b)
        B = Y.scale(g) + transpose(Y).scale(d)
    return alg, A, B


def residual_f(sc: Scenario, q: Optional[Sequence] = None) -> NCElement:
    """(det A)(det B) - col-det(A^T B + diag(q)).  With q None the q_i stay
    symbolic; integer q_i mean q_i * h1 (h1 of the framework)."""
    alg, A, B = build_matrices(sc)
    n = sc.n
    if q is None:
        qs = [alg.scalar(CoeffPoly.q(i)) for i in range(1, n + 1)]
    else:
        if len(q) != n:
            raise ValueError(f"need {n} correction entries")
        if sc.framework == "abstract":
            qs = [alg.scalar(CoeffPoly.h1() * int(c)) if isinstance(c, int) else alg.scalar(c)
                  for c in q]
        else:
            qs = [alg.scalar(int(c) * sc.h1_weyl) if isinstance(c, int) else alg.scalar(c)
                  for c in q]
    P = (transpose(A) if sc.product == "AtB" else A) @ B
    P = NCMatrix.build(P.ring, n, n, lambda i, j: P[i, j] + qs[i - 1] if i == j else P[i, j])
    return nc_det(A, method="subset") * nc_det(B, method="subset") - nc_det(P, method="subset")


CPoly = Tuple[Tuple[Tuple[int, ...], int], ...]


def conditions(sc: Scenario, f: NCElement) -> List[CPoly]:
    """Distinct polynomial conditions P(c) = 0 extracted from f."""
    n = sc.n
    qkeys = {q_key(i): i - 1 for i in range(1, n + 1)}
    hk = h1_key()
    H = sc.h1_weyl if sc.framework == "weyl" else None
    groups: Dict[tuple, Dict[Tuple[int, ...], int]] = {}
    for (la, rb, mono), c in f.raw.items():
        exps = [0] * n
        deg = 0
        for key, e in mono:
            if key in qkeys:
                exps[qkeys[key]] += e
                deg += e
            elif key == hk:
                deg += e
            else:
                raise ValueError(f"unexpected central variable {key!r} in f")
        if H is not None:
            c = c * H ** deg
            gkey = (la, rb)
        else:
            gkey = (la, rb, deg)
        poly = groups.setdefault(gkey, {})
        t = tuple(exps)
        poly[t] = poly.get(t, 0) + c
    out = set()
    for poly in groups.values():
        cleaned = tuple(sorted((k, v) for k, v in poly.items() if v))
        if cleaned:
            out.add(cleaned)
    # fewest terms first: cheap tests that tend to fail early
    return sorted(out, key=lambda p: (len(p), p))


def _eval(poly: CPoly, c: Sequence[int]) -> int:
    total = 0
    for exps, coef in poly:
        t = coef
        for ci, e in zip(c, exps):
            if e:
                t *= ci ** e
        total += t
    return total


@dataclass
class SolutionReport:
    scenario: Scenario
    solutions: List[Tuple[int, ...]]
    c_range: Tuple[int, int]
    candidates: int
    f_terms: int
    n_conditions: int
    audit: Dict[str, object] = field(default_factory=dict)
    expected: Optional[List[Tuple[int, ...]]] = None
    wall_time_ms: Optional[float] = None

    @property
    def matches_expected(self) -> Optional[bool]:
        if self.expected is None:
            return None
        return sorted(self.expected) == self.solutions

    def as_dict(self, timing: bool = False) -> dict:
        sc = self.scenario
        out = {
            "scenario": sc.label(),
            "n": sc.n,
            "framework": sc.framework,
            "h2_relation": sc.h2_relation if sc.framework == "abstract" else None,
            "symA": sc.symA if sc.framework == "abstract" else None,
            "symB": sc.symB if sc.framework == "abstract" else None,
            "weyl": list(sc.weyl) if sc.framework == "weyl" else None,
            "product": sc.product,
            "solutions": [list(s) for s in self.solutions],
            "c_range": list(self.c_range),
            "candidates": self.candidates,
            "f_term_count": self.f_terms,
            "distinct_conditions": self.n_conditions,
            "hypothesis_audit": self.audit,
            "expected": None if self.expected is None else [list(s) for s in sorted(self.expected)],
            "matches_expected": self.matches_expected,
        }
        out["wall_time_ms"] = self.wall_time_ms if timing else None
        return out


def _audit(sc: Scenario, A: NCMatrix, B: NCMatrix) -> Dict[str, object]:
    n = sc.n

    def sym_kind(M):
        sym = all(M[i, j] == M[j, i] for i in range(1, n + 1) for j in range(1, n + 1))
        anti = all(M[i, j] == -M[j, i] for i in range(1, n + 1) for j in range(1, n + 1))
        return "sym" if sym else ("antisym" if anti else "none")

    out = {"A symmetry": sym_kind(A), "B symmetry": sym_kind(B)}
    if sc.framework == "weyl":
        out["h1"] = sc.h1_weyl
        out["h2"] = sc.h2_weyl
    else:
        out["h2"] = {"zero": "0", "plus": "h1", "minus": "-h1", "free": "free"}[sc.h2_relation]
    return out


def explore(sc: Scenario, c_range: Tuple[int, int] | None = None, allow_long: bool = False,
            expected: Optional[List[Tuple[int, ...]]] = None) -> SolutionReport:
    n = sc.n
    if n >= LONG_N and not allow_long:
        raise ValueError(f"n = {n} is long-running; pass allow_long")
    lo, hi = c_range if c_range is not None else (-n, n)
    if lo > hi:
        raise ValueError("empty c range")
    t0 = time.perf_counter()
    alg, A, B = build_matrices(sc)
    f = residual_f(sc)
    conds = conditions(sc, f)
    sols = []
    order = list(conds)
    count = 0
    for c in itertools.product(range(lo, hi + 1), repeat=n):
        count += 1
        for idx, poly in enumerate(order):
            if _eval(poly, c):
                if idx:
                    # move the failing condition to the front
                    order.insert(0, order.pop(idx))
                break
        else:
            sols.append(c)
    wall = (time.perf_counter() - t0) * 1000.0
    if (expected is None and sc.framework == "abstract" and sc.name in SCENARIOS
            and sc.product == "AtB"):
        expected = [s for s in published_solutions(sc.name, n) if all(lo <= v <= hi for v in s)]
    return SolutionReport(sc, sorted(sols), (lo, hi), count, f.term_count(), len(conds),
                          _audit(sc, A, B), expected, round(wall, 3))


def capelli_pattern(n: int) -> Tuple[int, ...]:
    """q_i = (n - i) h1."""
    return tuple(n - i for i in range(1, n + 1))


def shifted_pattern(n: int) -> Tuple[int, ...]:
    """q_i = (n - i - 1) h1."""
    return tuple(n - i - 1 for i in range(1, n + 1))


def published_solutions(name: str, n: int) -> List[Tuple[int, ...]]:
    """Solutions known in the abstract framework for a scenario: every
    general family whose hypotheses the scenario implies, plus the extra
    A-antisymmetric solution at n = 2."""
    h2, sa, sb = SCENARIOS[name]
    out = set()
    if n == 1:
        return [(0,)]
    if h2 == "zero":
        out.add(capelli_pattern(n))
    if h2 == "plus" and sa == "sym":
        out.add(capelli_pattern(n))
    if h2 == "minus":
        if n % 2 == 0 and sb == "antisym":
            out.add(shifted_pattern(n))
        if n % 2 == 1 and (sa == "antisym" or sb == "antisym"):
            out.add(capelli_pattern(n))
        if n == 2 and sa == "antisym":
            out.add((1, 0))
    return sorted(out)


def _explore_named(args):
    name, n, c_range, allow_long = args
    return explore(Scenario.named(name, n), c_range, allow_long)


def scenario_table(n: int, c_range: Tuple[int, int] | None = None, allow_long: bool = False,
                   jobs: int = 1, names: Sequence[str] = SCENARIO_ORDER) -> List[SolutionReport]:
    """explore() for every named scenario at size n, in a fixed order."""
    if n >= LONG_N and not allow_long:
        raise ValueError(f"n = {n} is long-running; pass allow_long")
    work = [(name, n, c_range, allow_long) for name in names]
    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(jobs, len(work))) as pool:
            return list(pool.map(_explore_named, work))
    return [_explore_named(w) for w in work]


def weyl_cross_check(n: int, name: str, c_range: Tuple[int, int] | None = None):
    """Weyl instance matching an abstract scenario: A = X (+/-) X^T when A
    carries a symmetry, otherwise A = X, and likewise for B."""
    h2, sa, sb = SCENARIOS[name]
    coeff = {"none": 0, "sym": 1, "antisym": -1}
    if h2 == "zero":
        params = (1, 0, 1, 0)
    elif sa != "none" or sb != "none":
        params = (1, coeff[sa], 1, coeff[sb])
    else:
        raise ValueError(f"no Weyl instance for scenario {name}")
    sc = Scenario.weyl_instance(n, *params)
    return explore(sc, c_range, allow_long=True)
