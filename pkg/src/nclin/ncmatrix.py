"""Matrices over a ring backend, noncommutative determinants and permanents,
and the commutativity predicates for matrix entries.

Indices in the public API are 1-based, matching the mathematical notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, fields
from typing import Callable, Dict, List, Optional, Sequence, Tuple

DET_VARIANTS = ("col-det", "row-det", "col-per", "row-per")


@dataclass(frozen=True)
class NCMatrix:
    ring: object
    entries: Tuple[tuple, ...]

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence]) -> "NCMatrix":
        return cls(ring, tuple(tuple(r) for r in rows))

    @classmethod
    def build(cls, ring, m: int, n: int, fn: Callable[[int, int], object]) -> "NCMatrix":
        """Entry (i, j) is ``fn(i, j)`` with 1-based indices."""
        return cls(ring, tuple(tuple(fn(i, j) for j in range(1, n + 1)) for i in range(1, m + 1)))

    @classmethod
    def identity(cls, ring, n: int) -> "NCMatrix":
        return cls.build(ring, n, n, lambda i, j: ring.one() if i == j else ring.zero())

    @classmethod
    def zeros(cls, ring, m: int, n: int) -> "NCMatrix":
        return cls.build(ring, m, n, lambda i, j: ring.zero())

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i - 1][j - 1]

    def T(self) -> "NCMatrix":
        return transpose(self)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_add(self, other.scale(-1))

    def __matmul__(self, other):
        return matmul(self, other)

    def scale(self, c) -> "NCMatrix":
        return NCMatrix(self.ring, tuple(tuple(x * c for x in r) for r in self.entries))

    def map(self, fn) -> "NCMatrix":
        return NCMatrix(self.ring, tuple(tuple(fn(x) for x in r) for r in self.entries))

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries) + "]"


# index sets ---------------------------------------------------------------

def check_index_set(I: Sequence[int], dim: int, what: str = "index set") -> Tuple[int, ...]:
    I = tuple(I)
    for a, b in zip(I, I[1:]):
        if a >= b:
            raise ValueError(f"{what} {I} must be strictly increasing")
    for i in I:
        if not 1 <= i <= dim:
            raise ValueError(f"{what} {I} has index {i} outside 1..{dim}")
    return I


def subsets(n: int, r: int):
    """All r-subsets of [n] as increasing tuples, in lexicographic order."""
    return itertools.combinations(range(1, n + 1), r)


def complement(I: Sequence[int], n: int) -> Tuple[int, ...]:
    s = set(I)
    return tuple(i for i in range(1, n + 1) if i not in s)


# determinants -------------------------------------------------------------

def perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def _check_variant(variant: str) -> None:
    if variant not in DET_VARIANTS:
        raise ValueError(f"unknown determinant variant {variant!r}")


def nc_det(M: NCMatrix, variant: str = "col-det", method: str = "perm"):
    """Column/row determinant or permanent following the defining sum.

    ``method='perm'`` enumerates permutations in lexicographic order and
    folds each product left to right.  ``method='subset'`` evaluates the
    same sum grouped by the set of rows (or columns) already used, which
    shares common prefixes; factor order is unchanged.
    """
    _check_variant(variant)
    if M.rows != M.cols:
        raise ValueError(f"{variant} needs a square matrix, got {M.rows}x{M.cols}")
    if method == "subset":
        return _det_subset(M, variant)
    if method != "perm":
        raise ValueError(f"unknown method {method!r}")
    n = M.rows
    ring = M.ring
    signed = variant.endswith("det")
    by_col = variant.startswith("col")
    total = ring.zero()
    e = M.entries
    for sigma in itertools.permutations(range(n)):
        term = ring.one()
        for k in range(n):
            term = term * (e[sigma[k]][k] if by_col else e[k][sigma[k]])
        if signed and perm_sign(sigma) < 0:
            total = total - term
        else:
            total = total + term
    return total


def _det_subset(M: NCMatrix, variant: str):
    n = M.rows
    ring = M.ring
    signed = variant.endswith("det")
    by_col = variant.startswith("col")
    e = M.entries
    layer: Dict[int, object] = {0: ring.one()}
    for k in range(n):
        nxt: Dict[int, object] = {}
        for S, val in layer.items():
            for s in range(n):
                if S >> s & 1:
                    continue
                x = e[s][k] if by_col else e[k][s]
                if _is_zero(x):
                    continue
                prod = val * x
                if signed and bin(S >> (s + 1)).count("1") & 1:
                    prod = -prod
                T = S | (1 << s)
                nxt[T] = nxt[T] + prod if T in nxt else prod
        layer = nxt
    return layer.get((1 << n) - 1, ring.zero())


def _is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    return x.is_zero()


# matrix operations ----------------------------------------------------------

def submatrix(M: NCMatrix, I: Sequence[int], J: Sequence[int]) -> NCMatrix:
    I = check_index_set(I, M.rows, "row set")
    J = check_index_set(J, M.cols, "column set")
    return NCMatrix(M.ring, tuple(tuple(M.entries[i - 1][j - 1] for j in J) for i in I))


def transpose(M: NCMatrix) -> NCMatrix:
    return NCMatrix(M.ring, tuple(tuple(M.entries[i][j] for i in range(M.rows))
                                  for j in range(M.cols)))


def matmul(M: NCMatrix, N: NCMatrix) -> NCMatrix:
    if M.cols != N.rows:
        raise ValueError(f"cannot multiply {M.rows}x{M.cols} by {N.rows}x{N.cols}")
    ring = M.ring

    def entry(i, j):
        acc = ring.zero()
        for k in range(M.cols):
            acc = acc + M.entries[i][k] * N.entries[k][j]
        return acc

    return NCMatrix(ring, tuple(tuple(entry(i, j) for j in range(N.cols)) for i in range(M.rows)))


def mat_add(M: NCMatrix, N: NCMatrix) -> NCMatrix:
    if M.shape != N.shape:
        raise ValueError(f"cannot add {M.rows}x{M.cols} and {N.rows}x{N.cols}")
    return NCMatrix(M.ring, tuple(tuple(x + y for x, y in zip(r, s))
                                  for r, s in zip(M.entries, N.entries)))


def mat_ops(kind: str, M: NCMatrix, N: Optional[NCMatrix] = None) -> NCMatrix:
    if kind == "transpose":
        if N is not None:
            raise ValueError("transpose takes one matrix")
        return transpose(M)
    if N is None:
        raise ValueError(f"{kind} needs two matrices")
    if kind == "matmul":
        return matmul(M, N)
    if kind == "add":
        return mat_add(M, N)
    raise ValueError(f"unknown matrix operation {kind!r}")


def permute(M: NCMatrix, tau: Sequence[int], axis: str = "rows") -> NCMatrix:
    """Row permutation gives entry (i, j) = M[tau(i), j]; columns analogously."""
    tau = tuple(tau)
    size = M.rows if axis == "rows" else M.cols
    if axis not in ("rows", "cols"):
        raise ValueError(f"axis must be rows or cols, got {axis!r}")
    if sorted(tau) != list(range(1, size + 1)):
        raise ValueError(f"{tau} is not a permutation of 1..{size}")
    if axis == "rows":
        return NCMatrix(M.ring, tuple(M.entries[t - 1] for t in tau))
    return NCMatrix(M.ring, tuple(tuple(r[t - 1] for t in tau) for r in M.entries))


# quantum corrections ---------------------------------------------------------

@dataclass(frozen=True)
class HSpec:
    """The commutator data entering a diagonal-type correction.

    ``scalar`` means h_{jl} = h * delta_{jl}; ``matrix`` supplies h_{jl}
    through ``entry(j, l)``.  Values are ring elements.
    """

    kind: str
    value: object = None
    entry: Optional[Callable[[int, int], object]] = None

    @classmethod
    def scalar(cls, h) -> "HSpec":
        return cls("scalar", value=h)

    @classmethod
    def matrix(cls, fn: Callable[[int, int], object]) -> "HSpec":
        return cls("matrix", entry=fn)

    def h(self, j: int, l: int, ring):
        if self.kind == "matrix":
            return self.entry(j, l)
        if self.kind == "scalar":
            return self.value if j == l else ring.zero()
        raise ValueError(f"unknown HSpec kind {self.kind!r}")


def q_matrix(variant: str, I: Sequence[int], J: Sequence[int], h: HSpec, ring,
             offset: int = 0) -> NCMatrix:
    """Correction matrix: col gives (r - beta + offset) h_{i_alpha j_beta},
    row gives (alpha - 1 + offset) h_{i_alpha j_beta}."""
    if len(I) != len(J):
        raise ValueError(f"|I| = {len(I)} and |J| = {len(J)} differ")
    if variant not in ("col", "row"):
        raise ValueError(f"unknown correction variant {variant!r}")
    r = len(I)

    def entry(a, b):
        f = (r - b + offset) if variant == "col" else (a - 1 + offset)
        if f == 0:
            return ring.zero()
        return h.h(I[a - 1], J[b - 1], ring) * f

    return NCMatrix.build(ring, r, r, entry)


# commutativity predicates -----------------------------------------------------

@dataclass(frozen=True)
class PredicateReport:
    commutative: bool
    row_commutative: bool
    column_commutative: bool
    weakly_commutative: bool
    row_symmetric_commutators: bool
    column_symmetric_commutators: bool
    weakly_row_symmetric: bool
    weakly_column_symmetric: bool
    row_pseudo_commutative: bool
    column_pseudo_commutative: bool

    def as_dict(self) -> Dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def implication_violations(self) -> List[str]:
        chain = [
            ("commutative", "row_commutative"),
            ("commutative", "column_commutative"),
            ("row_commutative", "weakly_commutative"),
            ("column_commutative", "weakly_commutative"),
            ("row_commutative", "row_pseudo_commutative"),
            ("column_commutative", "column_pseudo_commutative"),
            ("row_pseudo_commutative", "row_symmetric_commutators"),
            ("column_pseudo_commutative", "column_symmetric_commutators"),
            ("row_symmetric_commutators", "weakly_row_symmetric"),
            ("column_symmetric_commutators", "weakly_column_symmetric"),
            ("weakly_commutative", "weakly_row_symmetric"),
            ("weakly_commutative", "weakly_column_symmetric"),
        ]
        bad = [f"{p} => {q}" for p, q in chain if getattr(self, p) and not getattr(self, q)]
        if self.commutative != (self.row_commutative and self.column_commutative):
            bad.append("commutative <=> row_commutative and column_commutative")
        return bad

    def implications_hold(self) -> bool:
        return not self.implication_violations()


class _Commutators:
    """Lazily computed table of [M_ij, M_kl] zero-tests and equalities."""

    def __init__(self, M: NCMatrix):
        self.M = M
        self._c: Dict[Tuple[int, int, int, int], object] = {}

    def get(self, i, j, k, l):
        key = (i, j, k, l)
        c = self._c.get(key)
        if c is None:
            x, y = self.M.entries[i][j], self.M.entries[k][l]
            c = x * y - y * x
            self._c[key] = c
        return c

    def zero(self, i, j, k, l) -> bool:
        return _is_zero(self.get(i, j, k, l))

    def eq(self, a, b) -> bool:
        return self.get(*a) == self.get(*b)


def _quads(M: NCMatrix):
    m, n = M.shape
    for i in range(m):
        for j in range(n):
            for k in range(m):
                for l in range(n):
                    yield i, j, k, l


def _all_zero(C: _Commutators, cond) -> bool:
    return all(C.zero(i, j, k, l) for i, j, k, l in _quads(C.M) if cond(i, j, k, l))


def _row_sym(C: _Commutators, weak: bool) -> bool:
    for i, j, k, l in _quads(C.M):
        if i == k or (weak and j == l):
            continue
        if not C.eq((i, j, k, l), (k, j, i, l)):
            return False
    return True


def _col_sym(C: _Commutators, weak: bool) -> bool:
    for i, j, k, l in _quads(C.M):
        if j == l or (weak and i == k):
            continue
        if not C.eq((i, j, k, l), (i, l, k, j)):
            return False
    return True


def is_commutative(M, _C=None) -> bool:
    return _all_zero(_C or _Commutators(M), lambda i, j, k, l: True)


def is_row_commutative(M, _C=None) -> bool:
    return _all_zero(_C or _Commutators(M), lambda i, j, k, l: i != k)


def is_column_commutative(M, _C=None) -> bool:
    return _all_zero(_C or _Commutators(M), lambda i, j, k, l: j != l)


def is_weakly_commutative(M, _C=None) -> bool:
    return _all_zero(_C or _Commutators(M), lambda i, j, k, l: i != k and j != l)


def has_row_symmetric_commutators(M, weak: bool = False, _C=None) -> bool:
    return _row_sym(_C or _Commutators(M), weak)


def has_column_symmetric_commutators(M, weak: bool = False, _C=None) -> bool:
    return _col_sym(_C or _Commutators(M), weak)


def is_row_pseudo_commutative(M, _C=None) -> bool:
    C = _C or _Commutators(M)
    return _all_zero(C, lambda i, j, k, l: j == l) and _row_sym(C, False)


def is_column_pseudo_commutative(M, _C=None) -> bool:
    C = _C or _Commutators(M)
    return _all_zero(C, lambda i, j, k, l: i == k) and _col_sym(C, False)


def commutativity_class(M: NCMatrix) -> PredicateReport:
    C = _Commutators(M)
    return PredicateReport(
        commutative=is_commutative(M, C),
        row_commutative=is_row_commutative(M, C),
        column_commutative=is_column_commutative(M, C),
        weakly_commutative=is_weakly_commutative(M, C),
        row_symmetric_commutators=_row_sym(C, False),
        column_symmetric_commutators=_col_sym(C, False),
        weakly_row_symmetric=_row_sym(C, True),
        weakly_column_symmetric=_col_sym(C, True),
        row_pseudo_commutative=is_row_pseudo_commutative(M, C),
        column_pseudo_commutative=is_column_pseudo_commutative(M, C),
    )
