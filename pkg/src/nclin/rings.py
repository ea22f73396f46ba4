"""Ring backends for the matrix layer.

Matrix code only uses ``+``, ``-``, ``*`` and ``==`` on entries, plus the
``zero``/``one``/``from_int`` constructors of a backend.  Three backends are
provided: plain integers, k x k matrices over GF(2) (k = 2 by default), and
normal-ordered elements of an :class:`~nclin.ncalgebra.NCAlgebra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence

from .ncalgebra import NCAlgebra, NCElement


@lru_cache(maxsize=1 << 16)
def _gf2_mul(k: int, a: int, b: int) -> int:
    mask = (1 << k) - 1
    brows = [(b >> (r * k)) & mask for r in range(k)]
    out = 0
    for i in range(k):
        row = (a >> (i * k)) & mask
        acc = 0
        j = 0
        while row:
            if row & 1:
                acc ^= brows[j]
            row >>= 1
            j += 1
        out |= acc << (i * k)
    return out


class GF2Mat:
    """A k x k matrix over GF(2), packed row-major into an int.

    Bit ``i*k + j`` holds entry (i+1, j+1).
    """

    __slots__ = ("k", "bits")

    def __init__(self, k: int, bits: int):
        if not 0 <= bits < (1 << (k * k)):
            raise ValueError(f"bit pattern {bits} out of range for {k}x{k}")
        self.k = k
        self.bits = bits

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GF2Mat":
        k = len(rows)
        if any(len(r) != k for r in rows):
            raise ValueError("GF(2) matrix must be square")
        bits = 0
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise ValueError(f"GF(2) entry must be 0 or 1, got {v!r}")
                if v:
                    bits |= 1 << (i * k + j)
        return cls(k, bits)

    def rows(self) -> List[List[int]]:
        k = self.k
        return [[(self.bits >> (i * k + j)) & 1 for j in range(k)] for i in range(k)]

    def _check(self, other):
        if not isinstance(other, GF2Mat) or other.k != self.k:
            raise ValueError("GF(2) backend mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = gf2_scalar(self.k, other)
        self._check(other)
        return GF2Mat(self.k, self.bits ^ other.bits)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return self if other & 1 else GF2Mat(self.k, 0)
        self._check(other)
        return GF2Mat(self.k, _gf2_mul(self.k, self.bits, other.bits))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self if other & 1 else GF2Mat(self.k, 0)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = gf2_scalar(self.k, other)
        if not isinstance(other, GF2Mat):
            return NotImplemented
        return self.k == other.k and self.bits == other.bits

    def __hash__(self):
        return hash((self.k, self.bits))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __repr__(self):
        return f"GF2Mat({self.rows()})"

    __str__ = __repr__


def gf2_scalar(k: int, n: int) -> GF2Mat:
    if n & 1:
        return GF2Mat(k, sum(1 << (i * k + i) for i in range(k)))
    return GF2Mat(k, 0)


def kron(x: GF2Mat, y: GF2Mat) -> GF2Mat:
    """Kronecker product; entries of ``kron(x, I)`` commute with ``kron(I, y)``."""
    xr, yr = x.rows(), y.rows()
    k1, k2 = x.k, y.k
    rows = [[xr[i // k2][j // k2] & yr[i % k2][j % k2] for j in range(k1 * k2)]
            for i in range(k1 * k2)]
    return GF2Mat.from_rows(rows)


# backends ---------------------------------------------------------------

class IntegerRing:
    kind = "int"
    two_torsion_free = True

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n

    def contains(self, x) -> bool:
        return isinstance(x, int)

    def is_zero(self, x) -> bool:
        return x == 0

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("int")

    def __repr__(self):
        return "IntegerRing()"


@dataclass(frozen=True)
class GF2MatrixRing:
    """Matrices over GF(2); characteristic 2, so 2x = 0 for every x."""

    k: int = 2
    kind = "m2gf2"
    two_torsion_free = False

    def zero(self) -> GF2Mat:
        return GF2Mat(self.k, 0)

    def one(self) -> GF2Mat:
        return gf2_scalar(self.k, 1)

    def from_int(self, n: int) -> GF2Mat:
        return gf2_scalar(self.k, n)

    def contains(self, x) -> bool:
        return isinstance(x, GF2Mat) and x.k == self.k

    def is_zero(self, x) -> bool:
        return x.bits == 0

    def elements(self) -> Iterator[GF2Mat]:
        for bits in range(1 << (self.k * self.k)):
            yield GF2Mat(self.k, bits)


M2GF2 = GF2MatrixRing(2)

# the two noncommuting elements used in the GF(2) counterexamples
ALPHA = GF2Mat.from_rows([[1, 0], [0, 0]])
BETA = GF2Mat.from_rows([[0, 1], [1, 0]])


def enumerate_m2gf2() -> List[GF2Mat]:
    return list(M2GF2.elements())


class NCRing:
    """Backend wrapping an :class:`NCAlgebra`."""

    kind = "nc"
    # integer coefficients in a free module over words: 2x = 0 forces x = 0
    two_torsion_free = True

    def __init__(self, alg: NCAlgebra):
        self.alg = alg

    def zero(self) -> NCElement:
        return self.alg.zero()

    def one(self) -> NCElement:
        return self.alg.one()

    def from_int(self, n: int) -> NCElement:
        return self.alg.scalar(n)

    def contains(self, x) -> bool:
        return isinstance(x, NCElement) and x.alg is self.alg

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def __eq__(self, other):
        return isinstance(other, NCRing) and other.alg is self.alg

    def __hash__(self):
        return hash(id(self.alg))

    def __repr__(self):
        return f"NCRing({self.alg.rel.kind})"


INTEGERS = IntegerRing()


def ring_arith(kind: str, x, y=None):
    if kind == "neg":
        return -x
    if y is None:
        raise ValueError(f"{kind} needs two operands")
    if type(x) is not type(y):
        raise ValueError("backend mismatch")
    if kind == "add":
        return x + y
    if kind == "mul":
        return x * y
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    return x.is_zero()
