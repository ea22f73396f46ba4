"""Weyl-algebra elements acting on polynomials in the x_ij, and the Cayley
identities for (det X)^s checked by direct differentiation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterable, Sequence, Tuple

from .ncalgebra import NCElement, decode_gen
from .ncmatrix import (
    HSpec,
    NCMatrix,
    check_index_set,
    complement,
    nc_det,
    perm_sign,
    q_matrix,
    submatrix,
    subsets,
    transpose,
)
from .rings import NCRing

Var = Tuple[int, int]
XMono = Tuple[Tuple[Var, int], ...]


def _mono_mul(a: XMono, b: XMono) -> XMono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class XPolynomial:
    """Sparse integer polynomial in commuting variables x_ij."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[XMono, int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c: int) -> "XPolynomial":
        return cls({(): c})

    @classmethod
    def var(cls, i: int, j: int, e: int = 1) -> "XPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        return cls({(((i, j), e),) if e else (): 1})

    def __add__(self, other):
        if isinstance(other, int):
            other = XPolynomial.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return XPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, XPolynomial) else -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return XPolynomial({k: v * other for k, v in self.terms.items()})
        out: Dict[XMono, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _mono_mul(k1, k2)
                out[k] = out.get(k, 0) + v1 * v2
        return XPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = XPolynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = XPolynomial.const(other)
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def diff(self, i: int, j: int) -> "XPolynomial":
        out: Dict[XMono, int] = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.get((i, j), 0)
            if not e:
                continue
            if e == 1:
                del d[(i, j)]
            else:
                d[(i, j)] = e - 1
            k = tuple(sorted(d.items()))
            out[k] = out.get(k, 0) + c * e
        return XPolynomial(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            c = self.terms[mono]
            body = "*".join(f"x[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in mono)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            parts.append(("- " if c < 0 else "+ ") + s)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[1:]

    __repr__ = __str__


def x_det(n: int, I: Sequence[int] | None = None, J: Sequence[int] | None = None) -> XPolynomial:
    """det X_IJ as a polynomial; the empty minor is 1."""
    I = tuple(range(1, n + 1)) if I is None else tuple(I)
    J = tuple(range(1, n + 1)) if J is None else tuple(J)
    out = XPolynomial()
    for sigma in itertools.permutations(range(len(I))):
        term = XPolynomial.const(perm_sign(sigma))
        for a in range(len(I)):
            term = term * XPolynomial.var(I[sigma[a]], J[a])
        out = out + term
    return out if I else XPolynomial.const(1)


def apply(op: NCElement, p: XPolynomial) -> XPolynomial:
    """Act with a normal-ordered Weyl element: each word differentiates by
    its d's (d = h * partial) and then multiplies by its x's."""
    rel = op.alg.rel
    if rel.kind != "weyl":
        raise ValueError("apply needs an element of a Weyl algebra")
    h = rel.h
    out = XPolynomial()
    for (left, right, mono), c in op.raw.items():
        if mono:
            raise ValueError("symbolic scalar coefficients cannot act on polynomials")
        q = p
        for g in reversed(right):
            _, i, j = decode_gen(g)
            q = q.diff(i, j) * h if h != 1 else q.diff(i, j)
            if q.is_zero():
                break
        if q.is_zero():
            continue
        for g in left:
            _, i, j = decode_gen(g)
            q = XPolynomial.var(i, j) * q
        out = out + q * c
    return out


def rising(s: int, k: int) -> int:
    return prod(range(s, s + k)) if k else 1


def index_sign(I: Iterable[int], J: Iterable[int]) -> int:
    return -1 if (sum(I) + sum(J)) % 2 else 1


@dataclass
class CayleyResult:
    n: int
    s: int
    I: Tuple[int, ...]
    J: Tuple[int, ...]
    lhs: XPolynomial
    rhs: XPolynomial
    residual: XPolynomial

    @property
    def is_zero(self) -> bool:
        return self.residual.is_zero()

    def as_dict(self) -> dict:
        return {"n": self.n, "s": self.s, "I": list(self.I), "J": list(self.J),
                "residual_is_zero": self.is_zero,
                "residual_term_count": len(self.residual),
                "lhs_term_count": len(self.lhs), "rhs_term_count": len(self.rhs)}


def _weyl(n: int):
    from .ncalgebra import RelationSystem, algebra

    alg = algebra(RelationSystem("weyl", h=1))
    ring = NCRing(alg)
    X = NCMatrix.build(ring, n, n, lambda i, j: alg.gen("x", i, j))
    D = NCMatrix.build(ring, n, n, lambda i, j: alg.gen("d", i, j))
    return alg, X, D


def verify_cayley(n: int, s: int, I: Sequence[int] | None = None,
                  J: Sequence[int] | None = None) -> CayleyResult:
    """det(partial_IJ) (det X)^s against
    s(s+1)...(s+k-1) (det X)^(s-1) eps(I,J) det X_{I^c J^c}."""
    if n < 1:
        raise ValueError("n must be positive")
    if s < 0:
        raise ValueError("s must be nonnegative")
    I = tuple(range(1, n + 1)) if I is None else check_index_set(I, n, "I")
    J = tuple(range(1, n + 1)) if J is None else check_index_set(J, n, "J")
    if len(I) != len(J):
        raise ValueError("I and J must have the same size")
    k = len(I)
    alg, X, D = _weyl(n)
    op = nc_det(submatrix(D, I, J)) if k else alg.one()
    lhs = apply(op, x_det(n) ** s)
    if k == 0:
        # empty minor: (det X)^(s-1) det X = (det X)^s
        rhs = x_det(n) ** s
    elif s == 0:
        # (det X)^(s-1) is not a polynomial; the rising factor is 0 anyway
        rhs = XPolynomial()
    else:
        rhs = (x_det(n) ** (s - 1) * x_det(n, complement(I, n), complement(J, n))
               * (rising(s, k) * index_sign(I, J)))
    return CayleyResult(n, s, I, J, lhs, rhs, lhs - rhs)


def cayley_grid(n_max: int = 3, s_max: int = 3, k_max: int | None = None):
    """Every (n, s, I, J) with |I| = |J| <= k_max (all sizes when None)."""
    for n in range(1, n_max + 1):
        for s in range(1, s_max + 1):
            kmax = n if k_max is None else min(n, k_max)
            for k in range(1, kmax + 1):
                for I in subsets(n, k):
                    for J in subsets(n, k):
                        yield n, s, I, J


def verify_cor_A_2(n: int, s: int, I: Sequence[int] | None = None,
                   J: Sequence[int] | None = None):
    """Operator form in the Weyl algebra:
    sum_L det(X^T)_IL col-det(partial_LJ) (det X)^s
      = (det X)^s col-det[(X^T partial)_IJ + Q_col(s)],
    Q_col(s) having entries (s + r - beta) delta.  Returns the residual element."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    I = tuple(range(1, n + 1)) if I is None else check_index_set(I, n, "I")
    J = tuple(range(1, n + 1)) if J is None else check_index_set(J, n, "J")
    if len(I) != len(J) or not I:
        raise ValueError("I and J must be nonempty and of equal size")
    alg, X, D = _weyl(n)
    ring = X.ring
    Xt = transpose(X)
    Ds = nc_det(X) ** s
    lhs = ring.zero()
    for L in subsets(n, len(I)):
        lhs = lhs + nc_det(submatrix(Xt, I, L)) * nc_det(submatrix(D, L, J))
    lhs = lhs * Ds
    P = submatrix(Xt @ D, I, J)
    Q = q_matrix("col", I, J, HSpec.scalar(alg.one()), ring, offset=s)
    rhs = Ds * nc_det(P + Q)
    return lhs - rhs, lhs, rhs
