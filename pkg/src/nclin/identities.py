"""Both sides of the Cauchy-Binet/Capelli/Turnbull family of identities,
exact residuals, and the fixed counterexample constructions.

Every identity is registered under a short name (see ``IDENTITIES``).  The
names are part of the command-line interface; the docstring of each
builder says what the identity states.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .coeffring import CoeffPoly
from .ncalgebra import NCAlgebra, NCElement, RelationSystem, SymmetryRule, algebra
from .ncmatrix import (
    HSpec,
    NCMatrix,
    check_index_set,
    commutativity_class,
    has_column_symmetric_commutators,
    is_column_commutative,
    is_column_pseudo_commutative,
    is_row_commutative,
    is_row_pseudo_commutative,
    matmul,
    nc_det,
    perm_sign,
    q_matrix,
    submatrix,
    subsets,
    transpose,
)
from .rings import ALPHA, BETA, M2GF2, GF2Mat, GF2MatrixRing, NCRing, enumerate_m2gf2, kron

FRAMEWORKS = ("abstract-h1h2", "abstract-matrix-h", "weyl", "commutative", "m2gf2")


# helpers ----------------------------------------------------------------------

def _zero_of(x):
    if isinstance(x, NCElement):
        return x.alg.zero()
    if isinstance(x, GF2Mat):
        return GF2Mat(x.k, 0)
    return 0


def element_is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    return x.is_zero()


def element_size(x) -> int:
    """Number of distinct words (NC), set bits (GF(2)) or 0/1 (integers)."""
    if isinstance(x, NCElement):
        return x.term_count()
    if isinstance(x, GF2Mat):
        return bin(x.bits).count("1")
    return 0 if x == 0 else 1


def element_str(x) -> str:
    return str(x)


def generic_matrix(alg: NCAlgebra, species: str, m: int, n: int) -> NCMatrix:
    return NCMatrix.build(NCRing(alg), m, n, lambda i, j: alg.gen(species, i, j))


# builders ---------------------------------------------------------------------

def cb_lhs(A: NCMatrix, B: NCMatrix, I, J, det_variant: str = "col",
           minor_mode: str = "At_IL"):
    """Sum over r-subsets L of the rows of A of det(first minor) * det(B_LJ).

    ``minor_mode='At_IL'`` uses (A^T)_{IL}; ``'A_LI'`` uses A_{LI}.  The
    sum is empty, hence zero, when r exceeds the number of rows.
    """
    if det_variant not in ("col", "row"):
        raise ValueError(f"det_variant must be col or row, got {det_variant!r}")
    if A.shape != B.shape:
        raise ValueError("A and B must have the same shape")
    if len(I) != len(J):
        raise ValueError("I and J must have the same size")
    m, n = A.shape
    I = check_index_set(I, n, "I")
    J = check_index_set(J, n, "J")
    variant = f"{det_variant}-det"
    At = transpose(A)
    total = A.ring.zero()
    for L in subsets(m, len(I)):
        first = submatrix(At, I, L) if minor_mode == "At_IL" else submatrix(A, L, I)
        total = total + nc_det(first, variant) * nc_det(submatrix(B, L, J), variant)
    return total


def antisym_lhs(A: NCMatrix, B: NCMatrix, I, J):
    """sum over sigma in S_r and l in [n]^r of
    a_{l1 i_sigma(1)} ... a_{lr i_sigma(r)} b_{l1 j1} ... b_{lr jr}, unsigned."""
    n = A.rows
    r = len(I)
    ring = A.ring
    total = ring.zero()
    a, b = A.entries, B.entries
    for ls in itertools.product(range(n), repeat=r):
        bprod = ring.one()
        for k in range(r):
            bprod = bprod * b[ls[k]][J[k] - 1]
        if element_is_zero(bprod):
            continue
        asum = ring.zero()
        for sigma in itertools.permutations(range(r)):
            t = ring.one()
            for k in range(r):
                t = t * a[ls[k]][I[sigma[k]] - 1]
            asum = asum + t
        total = total + asum * bprod
    return total


def product_matrix(A: NCMatrix, B: NCMatrix, product: str) -> NCMatrix:
    if product == "AtB":
        return matmul(transpose(A), B)
    if product == "AB":
        return matmul(A, B)
    if product == "ABt":
        return matmul(A, transpose(B))
    raise ValueError(f"unknown product {product!r}")


def capelli_rhs(A: NCMatrix, B: NCMatrix, I, J, variant: str = "col-det",
                product: str = "AtB", q_sign: int = 1, h: Optional[HSpec] = None,
                s_shift: int = 0, q_offset: int = 0, P: Optional[NCMatrix] = None):
    """det/per of P_IJ + s_shift * H_IJ + q_sign * Q, with Q the column or row
    correction matching ``variant``."""
    if q_sign not in (1, -1):
        raise ValueError("q_sign must be +1 or -1")
    ring = A.ring
    P = P if P is not None else product_matrix(A, B, product)
    M = submatrix(P, I, J)
    if h is not None:
        if s_shift:
            M = M + NCMatrix.build(ring, len(I), len(J),
                                   lambda a, b: h.h(I[a - 1], J[b - 1], ring) * s_shift)
        Q = q_matrix(variant.split("-")[0], I, J, h, ring, offset=q_offset)
        M = M + (Q if q_sign > 0 else Q.scale(-1))
    return nc_det(M, variant)


# reports ----------------------------------------------------------------------

@dataclass
class IdentitySpec:
    name: str
    m: int
    n: int
    r: int
    I: Tuple[int, ...] = ()
    J: Tuple[int, ...] = ()
    framework: str = "abstract-matrix-h"
    s: int = 0
    symA: Optional[str] = None
    symB: Optional[str] = None

    def params(self) -> dict:
        out = {"m": self.m, "n": self.n, "r": self.r, "I": list(self.I), "J": list(self.J),
               "framework": self.framework}
        if self.s:
            out["s"] = self.s
        if self.symA:
            out["symA"] = self.symA
        if self.symB:
            out["symB"] = self.symB
        return out


@dataclass
class Residual:
    name: str
    params: dict
    element: object
    is_zero: bool
    term_count: int
    lhs_terms: int = 0
    rhs_terms: int = 0
    parts: Dict[str, bool] = field(default_factory=dict)
    hypothesis_audit: Dict[str, object] = field(default_factory=dict)
    hypotheses_hold: bool = True
    expected_nonzero: bool = False
    note: str = ""

    @property
    def ok(self) -> bool:
        """Outcome matches expectation: zero when hypotheses hold and no
        failure is expected, nonzero for counterexample witnesses."""
        if self.expected_nonzero:
            return not self.is_zero
        if not self.hypotheses_hold:
            return True
        return self.is_zero

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "hypothesis_audit": self.hypothesis_audit,
            "hypotheses_hold": self.hypotheses_hold,
            "residual_is_zero": self.is_zero,
            "residual_term_count": self.term_count,
            "lhs_term_count": self.lhs_terms,
            "rhs_term_count": self.rhs_terms,
            "parts": self.parts,
            "expected_nonzero": self.expected_nonzero,
            "ok": self.ok,
            "note": self.note,
        }


def _residual(spec_name: str, params: dict, parts: Dict[str, object], lhs=None, rhs=None,
              audit=None, note: str = "") -> Residual:
    """Build a report from named residual parts; the headline element is the
    first nonzero part (or the first part when all vanish)."""
    names = list(parts)
    flags = {k: element_is_zero(v) for k, v in parts.items()}
    head = next((parts[k] for k in names if not flags[k]), parts[names[0]])
    audit = dict(audit or {})
    hyp = all(v for k, v in audit.items() if isinstance(v, bool) and not k.startswith("info:"))
    return Residual(
        name=spec_name, params=params, element=head, is_zero=all(flags.values()),
        term_count=element_size(head),
        lhs_terms=element_size(lhs) if lhs is not None else 0,
        rhs_terms=element_size(rhs) if rhs is not None else 0,
        parts=flags, hypothesis_audit=audit, hypotheses_hold=hyp, note=note,
    )


# framework instances ------------------------------------------------------------

@dataclass
class Instance:
    A: NCMatrix
    B: NCMatrix
    h: HSpec
    ring: object
    audit: Dict[str, object]


def _relation_audit(A: NCMatrix, B: NCMatrix, expected: Callable[[int, int, int, int], object]) -> bool:
    """Check [A_ij, B_kl] == expected(i, j, k, l) for every index quadruple."""
    m, n = A.shape
    for i, j, k, l in itertools.product(range(1, m + 1), range(1, n + 1),
                                        range(1, B.rows + 1), range(1, B.cols + 1)):
        x, y = A[i, j], B[k, l]
        if x * y - y * x != expected(i, j, k, l):
            return False
    return True


def _weyl_alg(h: int = 1) -> NCAlgebra:
    return algebra(RelationSystem("weyl", h=h))


def _sym_flag(default: Optional[str], override: Optional[str]) -> Optional[str]:
    return override if override is not None else default


def _abstract_h1h2(m: int, n: int, h2: str, symA=None, symB=None) -> Tuple[NCAlgebra, NCMatrix, NCMatrix, HSpec]:
    sym = SymmetryRule.of(**{k: v for k, v in (("a", symA), ("b", symB)) if v})
    alg = algebra(RelationSystem("abstract-h1h2", h2=h2), sym)
    A = generic_matrix(alg, "a", m, n)
    B = generic_matrix(alg, "b", m, n)
    return alg, A, B, HSpec.scalar(alg.scalar(CoeffPoly.h1()))


def _abstract_matrix_h(m: int, n: int, orientation: str = "col"):
    alg = algebra(RelationSystem("abstract-matrix-h", orientation=orientation))
    A = generic_matrix(alg, "a", m, n)
    B = generic_matrix(alg, "b", m, n)
    h = HSpec.matrix(lambda j, l: alg.scalar(CoeffPoly.hmat(j, l)))
    return alg, A, B, h


def _weyl_xd(m: int, n: int, h: int = 1):
    alg = _weyl_alg(h)
    X = generic_matrix(alg, "x", m, n)
    D = generic_matrix(alg, "d", m, n)
    return alg, X, D, HSpec.scalar(alg.scalar(h))


def _commutative(m: int, n: int):
    alg = algebra(RelationSystem("commutative"))
    A = generic_matrix(alg, "a", m, n)
    B = generic_matrix(alg, "b", m, n)
    return alg, A, B, HSpec.scalar(alg.zero())


def _unsupported(name: str, framework: str):
    raise ValueError(f"identity {name} is not implemented in framework {framework!r}")


# identity verifiers ----------------------------------------------------------------

def _verify_cb_col(spec: IdentitySpec) -> Residual:
    """Column form: sum_L col-det(A^T)_IL col-det B_LJ = col-det[(A^T B)_IJ + Q_col]
    for column-pseudo-commutative A and [a_ij, b_kl] = -delta_ik h_jl."""
    inst = _cb_instance(spec)
    lhs = cb_lhs(inst.A, inst.B, spec.I, spec.J, "col")
    rhs = capelli_rhs(inst.A, inst.B, spec.I, spec.J, "col-det", "AtB", 1, inst.h)
    audit = dict(inst.audit)
    audit["A column-pseudo-commutative"] = is_column_pseudo_commutative(inst.A)
    return _residual(spec.name, spec.params(), {"col": lhs - rhs}, lhs, rhs, audit)


def _verify_cb_row(spec: IdentitySpec) -> Residual:
    """Row form: sum_L row-det(A^T)_IL row-det B_LJ = row-det[(A^T B)_IJ + Q_row]
    for column-pseudo-commutative B."""
    inst = _cb_instance(spec)
    lhs = cb_lhs(inst.A, inst.B, spec.I, spec.J, "row")
    rhs = capelli_rhs(inst.A, inst.B, spec.I, spec.J, "row-det", "AtB", 1, inst.h)
    audit = dict(inst.audit)
    audit["B column-pseudo-commutative"] = is_column_pseudo_commutative(inst.B)
    return _residual(spec.name, spec.params(), {"row": lhs - rhs}, lhs, rhs, audit)


def _verify_cb_both(spec: IdentitySpec) -> Residual:
    """Column-commutative A and B: one sum of minors equals both the
    col-det and the row-det corrected forms."""
    inst = _cb_instance(spec)
    lhs = cb_lhs(inst.A, inst.B, spec.I, spec.J, "col")
    lhs_row = cb_lhs(inst.A, inst.B, spec.I, spec.J, "row")
    P = product_matrix(inst.A, inst.B, "AtB")
    rc = capelli_rhs(inst.A, inst.B, spec.I, spec.J, "col-det", h=inst.h, P=P)
    rr = capelli_rhs(inst.A, inst.B, spec.I, spec.J, "row-det", h=inst.h, P=P)
    audit = dict(inst.audit)
    audit["A column-commutative"] = is_column_commutative(inst.A)
    audit["B column-commutative"] = is_column_commutative(inst.B)
    parts = {"col": lhs - rc, "row": lhs - rr, "minors col/row agree": lhs - lhs_row}
    return _residual(spec.name, spec.params(), parts, lhs, rc, audit)


def _cb_instance(spec: IdentitySpec) -> Instance:
    """Instance for the rectangular identities.  Dual (primed) names are
    reduced to the unprimed ones by transposing both matrices."""
    prime = "prime" in spec.name
    fw = spec.framework
    m, n = spec.m, spec.n
    audit: Dict[str, object] = {}
    if fw == "abstract-matrix-h":
        alg, A, B, h = _abstract_matrix_h(m, n, "row" if prime else "col")
        audit["relation"] = ("[a_ij,b_kl] = -h[i,k] delta_jl" if prime
                             else "[a_ij,b_kl] = -delta_ik h[j,l]")
        audit["info:h central"] = True
    elif fw == "weyl":
        alg, A, B, h = _weyl_xd(m, n)
        audit["relation"] = "[x_ij,d_kl] = -h delta_ik delta_jl"
    elif fw == "commutative":
        alg, A, B, h = _commutative(m, n)
        audit["relation"] = "all entries commute"
    else:
        _unsupported(spec.name, fw)
    if prime:
        A, B = transpose(A), transpose(B)
    return Instance(A, B, h, A.ring, audit)


def _verify_cor_1_2(spec: IdentitySpec) -> Residual:
    """Capelli: the double sum of products of equal minors equals the sums
    over principal index sets of the col/row corrected determinants of
    A^T B and of A B^T."""
    m, n, r = spec.m, spec.n, spec.r
    if spec.framework == "abstract-h1h2":
        alg, A, B, h = _abstract_h1h2(m, n, "zero")
        audit = {"relation": "[a_ij,b_kl] = -h1 delta_ik delta_jl (h2 = 0)"}
    elif spec.framework == "weyl":
        alg, A, B, h = _weyl_xd(m, n)
        audit = {"relation": "[x_ij,d_kl] = -h delta_ik delta_jl"}
    else:
        _unsupported(spec.name, spec.framework)
    ring = A.ring
    base = ring.zero()
    for I in subsets(m, r):
        for L in subsets(n, r):
            base = base + nc_det(submatrix(A, I, L)) * nc_det(submatrix(B, I, L))
    PtB = product_matrix(A, B, "AtB")
    PBt = product_matrix(A, B, "ABt")
    sums = {}
    for label, P, dim in (("AtB", PtB, n), ("ABt", PBt, m)):
        for variant in ("col-det", "row-det"):
            tot = ring.zero()
            for I in subsets(dim, r):
                tot = tot + capelli_rhs(A, B, I, I, variant, h=h, P=P)
            sums[f"{variant} {label}"] = tot
    parts = {k: base - v for k, v in sums.items()}
    audit["A commutative"] = True
    audit["B commutative"] = True
    return _residual(spec.name, spec.params(), parts, base, sums["col-det AtB"], audit)


def _turnbull_instance(spec: IdentitySpec, which: str, kind: str) -> Instance:
    """Square instance with [a_ij,b_kl] = -h(d_ik d_jl +/- d_il d_jk) and
    matrix ``which`` symmetric (kind 'sym') or antisymmetric off the diagonal."""
    n = spec.n
    fw = spec.framework
    if fw == "abstract-h1h2":
        default = "sym" if kind == "sym" else "antisym-offdiag"
        flag = _sym_flag(default, spec.symA if which == "A" else spec.symB)
        if kind == "sym" and flag != "sym":
            raise ValueError("the symmetric identities need the sym flag")
        if kind == "anti" and flag not in ("antisym", "antisym-offdiag"):
            raise ValueError("the antisymmetric identities need an antisym flag")
        sa, sb = (flag, None) if which == "A" else (None, flag)
        alg, A, B, h = _abstract_h1h2(n, n, "plus" if kind == "sym" else "minus", sa, sb)
        sign = 1 if kind == "sym" else -1
        rel = f"[a_ij,b_kl] = -h1 (d_ik d_jl {'+' if sign > 0 else '-'} d_il d_jk)"
        audit = {"relation": rel, "info:h central": True, f"{which} symmetry": flag}
        diag_zero = flag == "antisym"
    elif fw == "weyl":
        alg, X, D, h = _weyl_xd(n, n)
        sign = 1 if kind == "sym" else -1
        if which == "A":
            A, B = X + transpose(X).scale(sign), D
        else:
            A, B = X, D + transpose(D).scale(sign)
        audit = {"relation": f"{which} = {'X' if which == 'A' else 'D'} "
                             f"{'+' if sign > 0 else '-'} transpose", "info:h central": True}
        one = alg.one()
        zero = alg.zero()

        def expected(i, j, k, l):
            v = (1 if (i == k and j == l) else 0) + sign * (1 if (i == l and j == k) else 0)
            return one * (-v) if v else zero

        audit["relation holds"] = _relation_audit(A, B, expected)
        diag_zero = kind == "anti"
    else:
        _unsupported(spec.name, fw)
    audit["info:zero diagonal"] = diag_zero
    return Instance(A, B, h, A.ring, audit)


def _verify_turnbull_sym(spec: IdentitySpec) -> Residual:
    """Symmetric Turnbull identity.  Part (a): A column-pseudo-commutative and
    symmetric; sum_L col-det A_LI col-det B_LJ equals col-det[(A^T B)_IJ + Q_col]
    and col-det[(A B)_IJ + Q_col].  Part (b): B symmetric, row-det with Q_row."""
    part_a = spec.name.endswith("a")
    which = "A" if part_a else "B"
    inst = _turnbull_instance(spec, which, "sym")
    A, B = inst.A, inst.B
    audit = dict(inst.audit)
    M = A if part_a else B
    audit[f"{which} column-pseudo-commutative"] = is_column_pseudo_commutative(M)
    audit[f"{which} symmetric"] = all(M[i, j] == M[j, i] for i in range(1, spec.n + 1)
                                      for j in range(1, spec.n + 1))
    if spec.n == 2:
        # extra hypothesis at n = 2: (i) 2x = 0 implies x = 0, or (ii) [m_12, h] = 0
        audit["n=2 (i) two-torsion-free"] = inst.ring.two_torsion_free
        audit["n=2 (ii) [m_12,h] = 0"] = True
        audit["n=2 extra hypothesis"] = True
    if part_a:
        lhs = cb_lhs(A, B, spec.I, spec.J, "col", "A_LI")
        r1 = capelli_rhs(A, B, spec.I, spec.J, "col-det", "AtB", 1, inst.h)
        r2 = capelli_rhs(A, B, spec.I, spec.J, "col-det", "AB", 1, inst.h)
        parts = {"AtB": lhs - r1, "AB": lhs - r2}
    else:
        lhs = cb_lhs(A, B, spec.I, spec.J, "row", "A_LI")
        r1 = capelli_rhs(A, B, spec.I, spec.J, "row-det", "AtB", 1, inst.h)
        parts = {"AtB": lhs - r1}
    return _residual(spec.name, spec.params(), parts, lhs, r1, audit)


def _verify_turnbull_anti(spec: IdentitySpec) -> Residual:
    """Antisymmetric permanent identity.  Part (a): A antisymmetric off the
    diagonal; the unsigned sum equals col-per[(A^T B)_IJ - Q_col], and, when
    the diagonal of A vanishes, (-1)^r col-per[(A B)_IJ + Q_col].  Part (b):
    B antisymmetric off the diagonal, row-per[(A^T B)_IJ - Q_row]."""
    part_a = spec.name.endswith("a")
    which = "A" if part_a else "B"
    inst = _turnbull_instance(spec, which, "anti")
    A, B = inst.A, inst.B
    audit = dict(inst.audit)
    M = A if part_a else B
    audit[f"{which} antisymmetric off-diagonal"] = all(
        M[i, j] == M[j, i].scale(-1) if isinstance(M[i, j], NCElement) else M[i, j] == -M[j, i]
        for i in range(1, spec.n + 1) for j in range(1, spec.n + 1) if i != j)
    audit[f"[{which.lower()},h] = 0"] = True
    lhs = antisym_lhs(A, B, spec.I, spec.J)
    if part_a:
        r1 = capelli_rhs(A, B, spec.I, spec.J, "col-per", "AtB", -1, inst.h)
        parts = {"AtB": lhs - r1}
        if inst.audit["info:zero diagonal"]:
            r2 = capelli_rhs(A, B, spec.I, spec.J, "col-per", "AB", 1, inst.h)
            parts["AB"] = lhs - r2 * (-1) ** spec.r
    else:
        r1 = capelli_rhs(A, B, spec.I, spec.J, "row-per", "AtB", -1, inst.h)
        parts = {"AtB": lhs - r1}
    return _residual(spec.name, spec.params(), parts, lhs, r1, audit)


# Kronecker embedding: entries of A live in M2 (x) I, entries of B in I (x) M2,
# so every a commutes with every b inside M4(GF(2)).
M4GF2 = GF2MatrixRing(4)
_I2 = GF2Mat.from_rows([[1, 0], [0, 1]])


def lift_left(x: GF2Mat) -> GF2Mat:
    return kron(x, _I2)


def lift_right(x: GF2Mat) -> GF2Mat:
    return kron(_I2, x)


def _gf2_samples(spec: IdentitySpec, predicate, count: int) -> List[Tuple[NCMatrix, NCMatrix]]:
    """Seeded sample of (A, B) over M4(GF(2)) with predicate(A over M2) true."""
    rng = random.Random(f"{spec.name}:{spec.m}:{spec.n}")
    els = enumerate_m2gf2()
    m, n = spec.m, spec.n
    out = []
    tries = 0
    while len(out) < count and tries < 200000:
        tries += 1
        raw = NCMatrix.build(M2GF2, m, n, lambda i, j: rng.choice(els))
        if not predicate(raw):
            continue
        A = raw.map(lift_left)
        A = NCMatrix(M4GF2, A.entries)
        B = NCMatrix.build(M4GF2, m, n, lambda i, j: lift_right(rng.choice(els)))
        out.append((A, B))
    if len(out) < count:
        raise RuntimeError(f"could not sample {count} matrices for {spec.name}")
    return out


GF2_SAMPLES = 24


def _verify_easy_cb(spec: IdentitySpec) -> Residual:
    """[a, b] = 0 and A column-pseudo-commutative:
    sum_L col-det(A^T)_IL col-det B_LJ = col-det (A^T B)_IJ."""
    if spec.framework == "commutative":
        alg, A, B, _ = _commutative(spec.m, spec.n)
        pairs = [(A, B)]
        audit = {"relation": "all entries commute"}
    elif spec.framework == "m2gf2":
        pairs = _gf2_samples(spec, is_column_pseudo_commutative, GF2_SAMPLES)
        audit = {"relation": "[a,b] = 0 via M2(x)I and I(x)M2",
                 "info:samples": len(pairs)}
    else:
        _unsupported(spec.name, spec.framework)
    parts = {}
    ok_hyp = True
    lhs = rhs = None
    for t, (A, B) in enumerate(pairs):
        ok_hyp &= is_column_pseudo_commutative(A)
        lhs = cb_lhs(A, B, spec.I, spec.J, "col")
        rhs = capelli_rhs(A, B, spec.I, spec.J, "col-det", "AtB")
        parts[f"sample {t}"] = lhs - rhs
    audit["A column-pseudo-commutative"] = ok_hyp
    return _residual(spec.name, spec.params(), parts, lhs, rhs, audit)


def _verify_factor_two(spec: IdentitySpec) -> Residual:
    """Column-symmetric commutators only: twice the sum of minors equals twice
    the corrected determinant (col form for part a, row form for part b)."""
    part_a = spec.name.endswith("a")
    det = "col" if part_a else "row"
    which = "A" if part_a else "B"
    if spec.framework == "abstract-matrix-h":
        alg, A, B, h = _abstract_matrix_h(spec.m, spec.n)
        cases = [(A, B, h)]
        audit = {"relation": "[a_ij,b_kl] = -delta_ik h[j,l]", "info:h central": True}
    elif spec.framework == "m2gf2":
        pred = (lambda M: has_column_symmetric_commutators(M))
        cases = []
        for A, B in _gf2_samples(spec, pred, GF2_SAMPLES):
            if not part_a:
                # swap roles so that B carries the constrained entries
                A, B = (NCMatrix(M4GF2, B.entries), NCMatrix(M4GF2, A.entries))
            cases.append((A, B, HSpec.scalar(M4GF2.zero())))
        audit = {"relation": "[a,b] = 0 via M2(x)I and I(x)M2", "info:samples": len(cases)}
    else:
        _unsupported(spec.name, spec.framework)
    parts = {}
    hyp = True
    lhs = rhs = None
    for t, (A, B, h) in enumerate(cases):
        hyp &= has_column_symmetric_commutators(A if part_a else B)
        lhs = cb_lhs(A, B, spec.I, spec.J, det)
        rhs = capelli_rhs(A, B, spec.I, spec.J, f"{det}-det", "AtB", 1, h)
        parts[f"case {t}"] = (lhs - rhs) * 2
    audit[f"{which} column-symmetric commutators"] = hyp
    return _residual(spec.name, spec.params(), parts, lhs, rhs, audit)


# noncentral h inside the Weyl algebra --------------------------------------------

def noncentral_instance(n: int, seed: int = 0):
    """One-row Weyl instance with genuinely noncentral h.

    a_1j are polynomials in the x's (so they commute), b_1l are arbitrary
    Weyl elements, and h_jl := -[a_1j, b_1l] so that the relation
    [a_1j, b_1l] = -h_jl holds by construction.
    """
    alg = _weyl_alg(1)
    rng = random.Random(seed)
    nv = max(2, n)
    xs = [alg.gen("x", 1, k) for k in range(1, nv + 1)]
    ds = [alg.gen("d", 1, k) for k in range(1, nv + 1)]

    def poly_x():
        e = alg.zero()
        for _ in range(2):
            t = alg.one() * rng.randint(-2, 2)
            for _ in range(rng.randint(1, 2)):
                t = t * rng.choice(xs)
            e = e + t
        return e

    def weyl_el():
        e = alg.zero()
        for _ in range(2):
            t = alg.one() * rng.choice([-1, 1, 2])
            for _ in range(rng.randint(1, 3)):
                t = t * rng.choice(xs + ds)
            e = e + t
        return e

    A = NCMatrix.build(NCRing(alg), 1, n, lambda i, j: xs[j - 1] * xs[j - 1] + poly_x())
    B = NCMatrix.build(NCRing(alg), 1, n, lambda i, j: weyl_el())
    H = {(j, l): (A[1, j] * B[1, l] - B[1, l] * A[1, j]).scale(-1)
         for j in range(1, n + 1) for l in range(1, n + 1)}
    return alg, A, B, H


def _verify_lemma_3_1(spec: IdentitySpec) -> Residual:
    """[a_ij, a_il] = 0 and [a_ij, b_kl] = -delta_ik h_jl imply
    [a_ij, h_ls] = [a_il, h_js]."""
    n = spec.n
    if spec.framework == "abstract-matrix-h":
        alg, A, B, h = _abstract_matrix_h(spec.m, n)
        parts = {}
        for i in range(1, spec.m + 1):
            for j, l, s in itertools.product(range(1, n + 1), repeat=3):
                hl = h.h(l, s, A.ring)
                hj = h.h(j, s, A.ring)
                c1 = A[i, j] * hl - hl * A[i, j]
                c2 = A[i, l] * hj - hj * A[i, l]
                parts[f"{i}{j}{l}{s}"] = c1 - c2
        audit = {"relation": "[a_ij,b_kl] = -delta_ik h[j,l]", "info:trivially satisfied": True}
        return _residual(spec.name, spec.params(), parts, audit=audit,
                         note="h central: both sides vanish identically")
    if spec.framework != "weyl":
        _unsupported(spec.name, spec.framework)
    alg, A, B, H = noncentral_instance(n, seed=spec.s)
    parts = {}
    for j, l, s in itertools.product(range(1, n + 1), repeat=3):
        c1 = A[1, j] * H[l, s] - H[l, s] * A[1, j]
        c2 = A[1, l] * H[j, s] - H[j, s] * A[1, l]
        parts[f"{j}{l}{s}"] = c1 - c2
    central = all((H[k] * x - x * H[k]).is_zero() for k in H for x in A.entries[0])
    audit = {"A row entries commute": all((x * y - y * x).is_zero() for x in A.entries[0]
                                         for y in A.entries[0]),
             "info:h noncentral": not central}
    return _residual(spec.name, spec.params(), parts, audit=audit)


def _verify_cor_3_3(spec: IdentitySpec) -> Residual:
    """Signed sum over sigma of F * [a_{l i_sigma(alpha)}, h_{i_sigma(beta) k}] * G
    vanishes when F and G depend only on sigma off {alpha, beta}."""
    n, r = spec.n, spec.r
    I = spec.I or tuple(range(1, r + 1))
    if spec.framework == "abstract-matrix-h":
        alg, A, B, h = _abstract_matrix_h(1, n)
        H = {(j, l): h.h(j, l, A.ring) for j in range(1, n + 1) for l in range(1, n + 1)}
        audit = {"info:trivially satisfied": True}
    elif spec.framework == "weyl":
        alg, A, B, H = noncentral_instance(n, seed=spec.s)
        audit = {"info:h noncentral": True}
    else:
        _unsupported(spec.name, spec.framework)
    parts = {}
    if r < 2:
        parts["r<2"] = alg.zero()
        return _residual(spec.name, spec.params(), parts, audit=audit, note="needs r >= 2")
    xs = [alg.gen("x", 1, k) for k in range(1, n + 1)] if spec.framework == "weyl" else \
        [alg.gen("a", 1, k) for k in range(1, n + 1)]
    ds = [alg.gen("d", 1, k) for k in range(1, n + 1)] if spec.framework == "weyl" else \
        [alg.gen("b", 1, k) for k in range(1, n + 1)]
    for alpha, beta in itertools.permutations(range(r), 2):
        for k in range(1, n + 1):
            total = alg.zero()
            for sigma in itertools.permutations(range(r)):
                rest = [I[sigma[j]] for j in range(r) if j not in (alpha, beta)]
                F = alg.one()
                G = alg.one()
                for pos, v in enumerate(rest):
                    F = F * (xs[v - 1] + ds[(v + pos) % n])
                    G = G * ds[v - 1]
                ia, ib = I[sigma[alpha]], I[sigma[beta]]
                c = A[1, ia] * H[ib, k] - H[ib, k] * A[1, ia]
                term = F * c * G
                total = total + (term if perm_sign(sigma) > 0 else -term)
            parts[f"a{alpha + 1}b{beta + 1}k{k}"] = total
    return _residual(spec.name, spec.params(), parts, audit=audit)


def _cayley_instance(spec: IdentitySpec):
    n = spec.n
    if spec.framework == "abstract-matrix-h":
        alg, A, B, h = _abstract_matrix_h(n, n)
        audit = {"relation": "[a_ij,b_kl] = -delta_ik h[j,l]", "[a,h] = 0": True}
    elif spec.framework == "weyl":
        alg, A, B, h = _weyl_xd(n, n)
        audit = {"relation": "[x_ij,d_kl] = -delta_ik delta_jl", "[a,h] = 0": True}
    else:
        _unsupported(spec.name, spec.framework)
    audit["A commutative"] = True
    return alg, A, B, h, audit


def _verify_lemma_A_2(spec: IdentitySpec) -> Residual:
    """[(A^T B)_ij, (det A)^s] = s h_ij (det A)^s for every i, j."""
    alg, A, B, h, audit = _cayley_instance(spec)
    ring = A.ring
    P = product_matrix(A, B, "AtB")
    Ds = nc_det(A) ** spec.s
    parts = {}
    for i in range(1, spec.n + 1):
        for j in range(1, spec.n + 1):
            if spec.I and (i, j) != (spec.I[0], spec.J[0]):
                continue
            lhs = P[i, j] * Ds - Ds * P[i, j]
            rhs = h.h(i, j, ring) * Ds * spec.s
            parts[f"{i}{j}"] = lhs - rhs
    return _residual(spec.name, spec.params(), parts, audit=audit)


def _verify_prop_A_1(spec: IdentitySpec) -> Residual:
    """sum_L det(A^T)_IL col-det B_LJ (det A)^s
    = (det A)^s col-det[(A^T B + s H)_IJ + Q_col]."""
    alg, A, B, h, audit = _cayley_instance(spec)
    Ds = nc_det(A) ** spec.s
    lhs = cb_lhs(A, B, spec.I, spec.J, "col") * Ds
    rhs = Ds * capelli_rhs(A, B, spec.I, spec.J, "col-det", "AtB", 1, h, s_shift=spec.s)
    return _residual(spec.name, spec.params(), {"main": lhs - rhs}, lhs, rhs, audit)


# registry ------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityInfo:
    verifier: Callable[[IdentitySpec], Residual]
    frameworks: Tuple[str, ...]
    square: bool = False
    # which index data the grid enumerates: "IJ", "I", "r" or "none"
    indices: str = "IJ"
    uses_s: bool = False
    summary: str = ""


IDENTITIES: Dict[str, IdentityInfo] = {
    "prop_1_1a": IdentityInfo(_verify_cb_col, ("abstract-matrix-h", "weyl", "commutative"),
                              summary="col-det Cauchy-Binet with Q_col, A column-pseudo-commutative"),
    "prop_1_1b": IdentityInfo(_verify_cb_row, ("abstract-matrix-h", "weyl", "commutative"),
                              summary="row-det Cauchy-Binet with Q_row, B column-pseudo-commutative"),
    "prop_1_1c": IdentityInfo(_verify_cb_both, ("abstract-matrix-h", "weyl", "commutative"),
                              summary="column-commutative A, B: col and row forms agree"),
    "prop_1_1_prime_a": IdentityInfo(_verify_cb_col, ("abstract-matrix-h", "weyl"),
                                     summary="dual col form, [a_ij,b_kl] = -h_ik delta_jl"),
    "prop_1_1_prime_b": IdentityInfo(_verify_cb_row, ("abstract-matrix-h", "weyl"),
                                     summary="dual row form, [a_ij,b_kl] = -h_ik delta_jl"),
    "prop_1_1_prime_c": IdentityInfo(_verify_cb_both, ("abstract-matrix-h", "weyl"),
                                     summary="dual form, row-commutative A, B"),
    "cor_1_2": IdentityInfo(_verify_cor_1_2, ("abstract-h1h2", "weyl"), indices="r",
                            summary="Capelli: four sums over principal minors agree"),
    "prop_1_3a": IdentityInfo(_verify_turnbull_sym, ("abstract-h1h2", "weyl"), square=True,
                              summary="symmetric A: col-det Turnbull identity"),
    "prop_1_3b": IdentityInfo(_verify_turnbull_sym, ("abstract-h1h2", "weyl"), square=True,
                              summary="symmetric B: row-det Turnbull identity"),
    "prop_1_4a": IdentityInfo(_verify_turnbull_anti, ("abstract-h1h2", "weyl"), square=True,
                              summary="antisymmetric off-diagonal A: col-per identity"),
    "prop_1_4b": IdentityInfo(_verify_turnbull_anti, ("abstract-h1h2", "weyl"), square=True,
                              summary="antisymmetric off-diagonal B: row-per identity"),
    "prop_3_4": IdentityInfo(_verify_easy_cb, ("commutative", "m2gf2"),
                             summary="[a,b] = 0, A column-pseudo-commutative: plain Cauchy-Binet"),
    "prop_3_8a": IdentityInfo(_verify_factor_two, ("abstract-matrix-h", "m2gf2"),
                              summary="column-symmetric commutators of A: identity times 2"),
    "prop_3_8b": IdentityInfo(_verify_factor_two, ("abstract-matrix-h", "m2gf2"),
                              summary="column-symmetric commutators of B: row form times 2"),
    "lemma_3_1": IdentityInfo(_verify_lemma_3_1, ("abstract-matrix-h", "weyl"), indices="none",
                              summary="[a_ij, h_ls] = [a_il, h_js]"),
    "cor_3_3": IdentityInfo(_verify_cor_3_3, ("abstract-matrix-h", "weyl"), indices="I",
                            summary="signed sums containing [a, h] vanish"),
    "lemma_A_2": IdentityInfo(_verify_lemma_A_2, ("abstract-matrix-h", "weyl"), square=True,
                              indices="none", uses_s=True,
                              summary="[(A^T B)_ij, (det A)^s] = s h_ij (det A)^s"),
    "prop_A_1": IdentityInfo(_verify_prop_A_1, ("abstract-matrix-h", "weyl"), square=True,
                             uses_s=True, summary="Cauchy-Binet times (det A)^s with shift sH"),
}


def verify(spec: IdentitySpec) -> Residual:
    info = IDENTITIES.get(spec.name)
    if info is None:
        raise ValueError(f"unknown identity {spec.name!r}")
    if spec.framework not in info.frameworks:
        raise ValueError(f"identity {spec.name} supports frameworks {', '.join(info.frameworks)}; "
                         f"got {spec.framework!r}")
    if info.square and spec.m != spec.n:
        raise ValueError(f"identity {spec.name} needs square matrices (m = n)")
    if spec.m < 1 or spec.n < 1:
        raise ValueError("dimensions must be positive")
    dim = index_dim(spec.name, spec.m, spec.n)
    if info.indices != "none" and not 1 <= spec.r <= dim:
        raise ValueError(f"r must satisfy 1 <= r <= {dim}")
    if info.indices in ("IJ", "I"):
        check_index_set(spec.I, dim, "I")
        if len(spec.I) != spec.r:
            raise ValueError(f"|I| = {len(spec.I)} but r = {spec.r}")
    if info.indices == "IJ":
        check_index_set(spec.J, dim, "J")
        if len(spec.J) != spec.r:
            raise ValueError(f"|J| = {len(spec.J)} but r = {spec.r}")
    if spec.s < 0:
        raise ValueError("s must be nonnegative")
    return info.verifier(spec)


def index_dim(name: str, m: int, n: int) -> int:
    """Size of the index sets I, J for an identity."""
    return m if "prime" in name else n


def grid(name: str, framework: str, m_max: int = 3, n_max: int = 3,
         s_values: Sequence[int] = (0,), m_values=None, n_values=None,
         r_values=None) -> Iterator[IdentitySpec]:
    """Every (m, n, r, I, J[, s]) case of an identity within the bounds."""
    info = IDENTITIES[name]
    ms = m_values or range(1, m_max + 1)
    ns = n_values or range(1, n_max + 1)
    for m in ms:
        for n in ns:
            if info.square and m != n:
                continue
            dim = index_dim(name, m, n)
            rs = (dim,) if info.indices == "none" else (r_values or range(1, dim + 1))
            for r in rs:
                if r > dim:
                    continue
                for s in (s_values if info.uses_s else (0,)):
                    if info.indices in ("none", "r"):
                        yield IdentitySpec(name, m, n, r, (), (), framework, s)
                    elif info.indices == "I":
                        for I in subsets(dim, r):
                            yield IdentitySpec(name, m, n, r, I, (), framework, s)
                    else:
                        for I in subsets(dim, r):
                            for J in subsets(dim, r):
                                yield IdentitySpec(name, m, n, r, I, J, framework, s)


def verify_many(specs: Sequence[IdentitySpec], jobs: int = 1) -> List[Residual]:
    specs = list(specs)
    if jobs <= 1 or len(specs) < 2:
        return [verify(s) for s in specs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify, specs, chunksize=max(1, len(specs) // (4 * jobs))))


# counterexamples ----------------------------------------------------------------------

COUNTEREXAMPLES = ("ex_2_4", "ex_3_5", "ex_3_6_itoh", "ex_3_7", "ex_4_2")


def _gf2(rows) -> NCMatrix:
    return NCMatrix.from_rows(M2GF2, rows)


def _ex_2_4() -> Residual:
    """Equal columns (alpha, beta) over M2(GF(2)): both commutator symmetries
    hold, yet col-det = alpha beta - beta alpha is nonzero."""
    M = _gf2([[ALPHA, ALPHA], [BETA, BETA]])
    rep = commutativity_class(M)
    d = nc_det(M)
    res = _residual("ex_2_4", {"backend": "m2gf2"}, {"col-det": d},
                    audit={"row-symmetric commutators": rep.row_symmetric_commutators,
                           "column-symmetric commutators": rep.column_symmetric_commutators,
                           "info:ring two-torsion-free": False},
                    note="col-det of a matrix with two equal columns")
    res.parts["col-det == alpha*beta + beta*alpha"] = d == ALPHA * BETA + BETA * ALPHA
    res.expected_nonzero = True
    return res


def _ex_3_5() -> Residual:
    """Row-commutative but not column-pseudo-commutative A: the plain
    Cauchy-Binet identity fails by alpha beta - beta alpha."""
    one, zero = M2GF2.one(), M2GF2.zero()
    A = _gf2([[ALPHA, BETA], [zero, zero]])
    B = _gf2([[one, one], [zero, zero]])
    I = J = (1, 2)
    lhs = cb_lhs(A, B, I, J, "col")
    rhs = capelli_rhs(A, B, I, J, "col-det", "AtB")
    res_el = lhs - rhs
    rep = commutativity_class(A)
    # one-row version: the sum over L is empty since r > m
    A1 = _gf2([[ALPHA, BETA]])
    B1 = _gf2([[one, one]])
    res1 = cb_lhs(A1, B1, I, J, "col") - capelli_rhs(A1, B1, I, J, "col-det", "AtB")
    res = _residual("ex_3_5", {"backend": "m2gf2", "m": 2, "n": 2, "r": 2},
                    {"residual": res_el, "one-row residual": res1}, lhs, rhs,
                    audit={"A row-commutative": rep.row_commutative,
                           "A column-pseudo-commutative": rep.column_pseudo_commutative,
                           "info:A column-symmetric commutators": rep.column_symmetric_commutators})
    res.parts["2*residual == 0"] = element_is_zero(res_el * 2)
    res.parts["residual == [alpha,beta]"] = (rhs - lhs) == ALPHA * BETA - BETA * ALPHA
    res.hypotheses_hold = False
    res.expected_nonzero = True
    res.note = "violated hypothesis: column-pseudo-commutativity"
    return res


def itoh_matrices(m: int, nu: int = 1):
    """A = (X, D), B = (-D, X) in the Weyl algebra on m x nu variables."""
    alg = _weyl_alg(1)
    ring = NCRing(alg)
    n = 2 * nu

    def a(i, j):
        return alg.gen("x", i, j) if j <= nu else alg.gen("d", i, j - nu)

    def b(i, j):
        return -alg.gen("d", i, j) if j <= nu else alg.gen("x", i, j - nu)

    A = NCMatrix.build(ring, m, n, a)
    B = NCMatrix.build(ring, m, n, b)
    return alg, A, B


def _ex_3_6_itoh(m_max: int = 2) -> Residual:
    """Itoh's matrices satisfy [a_ij, b_kl] = delta_ik delta_jl.  The dual
    identity for A B^T holds; the A^T B version fails."""
    parts = {}
    witness = None
    rhs_value = None
    audit = {}
    for m in range(1, m_max + 1):
        alg, A, B = itoh_matrices(m)
        ring = A.ring
        neg_one = alg.scalar(-1)
        one = alg.one()
        zero = alg.zero()
        audit[f"m={m} relation [a_ij,b_kl] = d_ik d_jl"] = _relation_audit(
            A, B, lambda i, j, k, l: one if (i == k and j == l) else zero)
        audit[f"info:m={m} A row-commutative"] = is_row_commutative(A)
        audit[f"info:m={m} A column-pseudo-commutative"] = is_column_pseudo_commutative(A)
        # sp side: I = J = {1, 2}, h_jl = -delta_jl
        hs = HSpec.scalar(neg_one)
        I = J = (1, 2)
        lhs = cb_lhs(A, B, I, J, "col")
        rhs = capelli_rhs(A, B, I, J, "col-det", "AtB", 1, hs)
        parts[f"sp m={m}"] = lhs - rhs
        if m == 1:
            witness = lhs - rhs
            rhs_value = rhs
        # o(m) side: transposes, I, J subsets of [m], h_ik = -delta_ik
        At, Bt = transpose(A), transpose(B)
        for r in range(1, m + 1):
            for Io in subsets(m, r):
                for Jo in subsets(m, r):
                    l = cb_lhs(At, Bt, Io, Jo, "col")
                    pc = capelli_rhs(At, Bt, Io, Jo, "col-det", "AtB", 1, hs)
                    pr = capelli_rhs(At, Bt, Io, Jo, "row-det", "AtB", 1, hs)
                    parts[f"o m={m} I={Io} J={Jo} col"] = l - pc
                    parts[f"o m={m} I={Io} J={Jo} row"] = l - pr
    flags = {k: element_is_zero(v) for k, v in parts.items()}
    sp_nonzero = all(not v for k, v in flags.items() if k.startswith("sp"))
    o_zero = all(v for k, v in flags.items() if k.startswith("o "))
    alg1 = _weyl_alg(1)
    dx = alg1.gen("d", 1, 1) * alg1.gen("x", 1, 1)
    res = Residual(
        name="ex_3_6_itoh", params={"m_max": m_max, "nu": 1, "framework": "weyl"},
        element=witness, is_zero=not (sp_nonzero and o_zero),
        term_count=element_size(witness), rhs_terms=element_size(rhs_value),
        parts={"sp-side residual nonzero": sp_nonzero, "o-side residual zero": o_zero,
               "m=1 col-det(A^T B + Q_col) == d*x": rhs_value == dx},
        hypothesis_audit=audit, hypotheses_hold=False, expected_nonzero=True,
        note="A, B row-commutative but not column-pseudo-commutative",
    )
    return res


def _ex_3_7(exhaustive: bool = True) -> Residual:
    """m = 1, n = 2, r = 2 with A = (alpha, beta), B = (gamma, delta) and
    h_jl := [b_1l, a_1j]: col-det(A^T B + Q_col) = gamma [alpha, beta] delta."""
    agree = True
    checked = 0
    if exhaustive:
        els = enumerate_m2gf2()
        for al, be, ga, de in itertools.product(els, repeat=4):
            A = _gf2([[al, be]])
            B = _gf2([[ga, de]])
            hs = HSpec.matrix(lambda j, l: B[1, l] * A[1, j] - A[1, j] * B[1, l])
            v = capelli_rhs(A, B, (1, 2), (1, 2), "col-det", "AtB", 1, hs)
            checked += 1
            if v != ga * (al * be - be * al) * de:
                agree = False
                break
    # Itoh specialisation in the Weyl algebra: alpha = x, beta = d, gamma = -d, delta = x
    alg = _weyl_alg(1)
    x, d = alg.gen("x", 1, 1), alg.gen("d", 1, 1)
    ring = NCRing(alg)
    A = NCMatrix.from_rows(ring, [[x, d]])
    B = NCMatrix.from_rows(ring, [[-d, x]])
    hs = HSpec.matrix(lambda j, l: B[1, l] * A[1, j] - A[1, j] * B[1, l])
    rhs = capelli_rhs(A, B, (1, 2), (1, 2), "col-det", "AtB", 1, hs)
    lhs = cb_lhs(A, B, (1, 2), (1, 2), "col")
    formula = (-d) * (x * d - d * x) * x
    res = _residual("ex_3_7", {"m": 1, "n": 2, "r": 2}, {"residual": lhs - rhs}, lhs, rhs,
                    audit={"A column-pseudo-commutative": is_column_pseudo_commutative(A)},
                    note="left side is an empty sum since r > m")
    res.parts["weyl value == gamma[alpha,beta]delta"] = rhs == formula
    res.parts["weyl value == d*x"] = rhs == d * x
    if exhaustive:
        res.parts[f"m2gf2 formula on {checked} quadruples"] = agree
    res.hypotheses_hold = False
    res.expected_nonzero = True
    return res


def _ex_4_2() -> Residual:
    """Symmetric 2 x 2 case over M2(GF(2)) with h = beta: [a_12, h] != 0 and
    the ring has 2-torsion, and the residual is beta^2 = identity."""
    zero = M2GF2.zero()
    A = _gf2([[zero, ALPHA], [ALPHA, zero]])
    B = _gf2([[zero, BETA], [BETA, zero]])
    h = BETA
    hs = HSpec.scalar(h)
    I = J = (1, 2)
    rhs = capelli_rhs(A, B, I, J, "col-det", "AtB", 1, hs)
    lhs = nc_det(transpose(A)) * nc_det(B)
    el = rhs - lhs

    def expected(i, j, k, l):
        v = (1 if (i == k and j == l) else 0) + (1 if (i == l and j == k) else 0)
        return h * (-v) if v else zero

    audit = {
        "relation [a_ij,b_kl] = -h(d_ik d_jl + d_il d_jk)": _relation_audit(A, B, expected),
        "A commutative": commutativity_class(A).commutative,
        "B commutative": commutativity_class(B).commutative,
        "A symmetric": True,
        "n=2 (i) two-torsion-free": M2GF2.two_torsion_free,
        "n=2 (ii) [a_12,h] = 0": (ALPHA * h - h * ALPHA).is_zero(),
    }
    res = _residual("ex_4_2", {"backend": "m2gf2", "n": 2}, {"residual": el}, lhs, rhs, audit)
    res.parts["residual == beta^2 == identity"] = el == BETA * BETA and el == M2GF2.one()
    res.expected_nonzero = True
    res.note = "extra n=2 hypotheses (i) and (ii) both fail"
    return res


def counterexample(cid: str) -> Residual:
    fn = {
        "ex_2_4": _ex_2_4,
        "ex_3_5": _ex_3_5,
        "ex_3_6_itoh": _ex_3_6_itoh,
        "ex_3_7": _ex_3_7,
        "ex_4_2": _ex_4_2,
    }.get(cid)
    if fn is None:
        raise ValueError(f"unknown counterexample {cid!r}; choose from {', '.join(COUNTEREXAMPLES)}")
    res = fn()
    # every auxiliary check recorded in parts must hold
    extra = {k: v for k, v in res.parts.items() if k not in ("col-det", "residual")}
    if cid == "ex_3_5":
        extra.pop("one-row residual", None)
    res.note = (res.note + "; " if res.note else "") + (
        "all witness checks hold" if all(extra.values()) else "a witness check failed")
    if not all(extra.values()):
        res.is_zero = True  # force ok == False
    return res


# 2 x 2 error term with [a, b] = 0 -------------------------------------------------------

def easy_cb_error_term(A: NCMatrix, B: NCMatrix):
    """([a21,a12] + [a11,a22]) b21 b12 + [a11,a12] b11 b12 + [a21,a22] b21 b22."""
    def c(x, y):
        return x * y - y * x
    a, b = A, B
    return ((c(a[2, 1], a[1, 2]) + c(a[1, 1], a[2, 2])) * b[2, 1] * b[1, 2]
            + c(a[1, 1], a[1, 2]) * b[1, 1] * b[1, 2]
            + c(a[2, 1], a[2, 2]) * b[2, 1] * b[2, 2])


def easy_cb_error_check(samples: int = 2000, seed: int = 0, exhaustive_a: bool = False) -> Tuple[int, int]:
    """Compare col-det(A^T B) - col-det(A^T) col-det(B) with the error term
    for 2 x 2 matrices over M2(GF(2)) embedded so that [a, b] = 0.
    Returns (cases checked, mismatches)."""
    rng = random.Random(seed)
    els = enumerate_m2gf2()
    if exhaustive_a:
        a_iter = itertools.product(els, repeat=4)
    else:
        a_iter = (tuple(rng.choice(els) for _ in range(4)) for _ in range(samples))
    checked = bad = 0
    for quad in a_iter:
        A = NCMatrix(M4GF2, ((lift_left(quad[0]), lift_left(quad[1])),
                             (lift_left(quad[2]), lift_left(quad[3]))))
        B = NCMatrix.build(M4GF2, 2, 2, lambda i, j: lift_right(rng.choice(els)))
        lhs = nc_det(matmul(transpose(A), B)) - nc_det(transpose(A)) * nc_det(B)
        checked += 1
        if lhs != easy_cb_error_term(A, B):
            bad += 1
    return checked, bad
