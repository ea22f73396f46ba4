"""Polynomial and Grassmann extensions of a ring backend.

Both give intrinsic tests of the row-type commutator conditions on a
matrix: commuting linear forms in ordinary variables detect
row-pseudo-commutativity, anticommuting linear forms in Grassmann variables
detect row-symmetric commutators.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Tuple

from .ncmatrix import NCMatrix, _is_zero

MAX_POLY_DEGREE = 2


class PolyExt:
    """Polynomials in commuting variables x_1..x_n with ring coefficients.

    Coefficients sit to the left of monomials.  Terms above total degree 2
    are dropped: only degree-2 products are ever compared.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms: Dict[Tuple[int, ...], object]):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if not _is_zero(v)}

    @classmethod
    def linear_form(cls, ring, coeffs) -> "PolyExt":
        n = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            exp = tuple(1 if t == j else 0 for t in range(n))
            terms[exp] = c
        return cls(ring, terms)

    def __add__(self, other: "PolyExt") -> "PolyExt":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return PolyExt(self.ring, out)

    def __mul__(self, other: "PolyExt") -> "PolyExt":
        out: Dict[Tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(e) > MAX_POLY_DEGREE:
                    continue
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return PolyExt(self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, PolyExt):
            return NotImplemented
        return self.terms == other.terms


def _merge_sign(S: Tuple[int, ...], T: Tuple[int, ...]) -> int:
    # sign of reordering eta_S eta_T into increasing order
    inv = 0
    for s in S:
        for t in T:
            if s > t:
                inv += 1
    return -1 if inv & 1 else 1


class GrassExt:
    """Sums of eta_S * r with eta_S the increasing product over S.

    Ring elements commute with every eta_i; eta_i^2 = 0 and the eta_i
    anticommute.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms: Dict[Tuple[int, ...], object]):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if not _is_zero(v)}

    @classmethod
    def linear_form(cls, ring, coeffs) -> "GrassExt":
        # sum_i eta_i * coeffs[i]
        return cls(ring, {(i,): c for i, c in enumerate(coeffs)})

    def __add__(self, other: "GrassExt") -> "GrassExt":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return GrassExt(self.ring, out)

    def __neg__(self) -> "GrassExt":
        return GrassExt(self.ring, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other: "GrassExt") -> "GrassExt":
        out: Dict[Tuple[int, ...], object] = {}
        for S, r in self.terms.items():
            for T, s in other.terms.items():
                if set(S) & set(T):
                    continue
                v = r * s
                if _merge_sign(S, T) < 0:
                    v = -v
                U = tuple(sorted(S + T))
                out[U] = out[U] + v if U in out else v
        return GrassExt(self.ring, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GrassExt):
            return NotImplemented
        return self.terms == other.terms


def poly_ext_commute_check(M: NCMatrix) -> bool:
    """Do the forms sum_j M_ij x_j commute pairwise?"""
    forms = [PolyExt.linear_form(M.ring, M.entries[i]) for i in range(M.rows)]
    for i in range(M.rows):
        for k in range(i + 1, M.rows):
            if forms[i] * forms[k] != forms[k] * forms[i]:
                return False
    return True


def grassmann_ext_check(M: NCMatrix) -> Tuple[bool, bool]:
    """(anticommute, squares_zero) for the forms sum_i eta_i M_ij."""
    forms = [GrassExt.linear_form(M.ring, [M.entries[i][j] for i in range(M.rows)])
             for j in range(M.cols)]
    anti = True
    for j in range(M.cols):
        for l in range(j, M.cols):
            if not (forms[j] * forms[l] + forms[l] * forms[j]).is_zero():
                anti = False
                break
        if not anti:
            break
    squares = all((f * f).is_zero() for f in forms)
    return anti, squares
