"""Normal-ordered elements of the quotient rings used throughout.

Generators carry a species (``a``, ``b``, ``x`` or ``d``) and a 1-based
(row, col) index.  Species ``a`` and ``x`` are "left" species, ``b`` and
``d`` are "right" species.  A word is normal when every left generator
precedes every right generator and each block is sorted.  Because every
supported relation system makes same-side generators commute and makes
cross commutators central, a normal word is determined by two sorted
tuples (the left block and the right block).

An element is stored as a flat ``{(left, right, mono): int}`` mapping where
``mono`` is a :mod:`nclin.coeffring` monomial in the central variables.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .coeffring import CoeffPoly, Mono, h1_key, h2_key, hmat_key, mono_mul

SPECIES = ("a", "b", "x", "d")
SPECIES_CODE = {s: k for k, s in enumerate(SPECIES)}
LEFT = frozenset({0, 2})
RIGHT = frozenset({1, 3})

RELATION_KINDS = ("abstract-h1h2", "abstract-matrix-h", "weyl", "commutative")
H2_MODES = ("free", "zero", "plus", "minus")
SYMMETRY_FLAGS = ("none", "sym", "antisym", "antisym-offdiag")

_SPECIES_FOR_KIND = {
    "abstract-h1h2": frozenset({0, 1}),
    "abstract-matrix-h": frozenset({0, 1}),
    "weyl": frozenset({2, 3}),
    "commutative": frozenset({0, 1, 2, 3}),
}

Gen = int
Word = Tuple[Gen, ...]
Key = Tuple[Word, Word, Mono]
Scalar = Dict[Mono, int]


def encode_gen(species: str | int, row: int, col: int) -> Gen:
    code = SPECIES_CODE[species] if isinstance(species, str) else species
    if not (1 <= row <= 99 and 1 <= col <= 99):
        raise ValueError(f"generator index ({row},{col}) out of range 1..99")
    return code * 10000 + row * 100 + col


def decode_gen(g: Gen) -> Tuple[int, int, int]:
    return g // 10000, (g // 100) % 100, g % 100


def gen_name(g: Gen) -> str:
    s, i, j = decode_gen(g)
    return f"{SPECIES[s]}[{i},{j}]"


def is_left(g: Gen) -> bool:
    return g // 10000 in LEFT


@dataclass(frozen=True)
class RelationSystem:
    """Commutation rules between the left and right species.

    ``h2`` fixes how the second abstract parameter is specialised
    (``plus`` means h2 = h1, ``minus`` means h2 = -h1).  ``orientation``
    only matters for ``abstract-matrix-h``: ``col`` gives
    ``[a_ij, b_kl] = -delta_ik h[j,l]`` and ``row`` gives
    ``[a_ij, b_kl] = -h[i,k] delta_jl``.
    """

    kind: str = "abstract-h1h2"
    h: int = 1
    h2: str = "free"
    orientation: str = "col"

    def __post_init__(self):
        if self.kind not in RELATION_KINDS:
            raise ValueError(f"unknown relation kind {self.kind!r}")
        if self.h2 not in H2_MODES:
            raise ValueError(f"unknown h2 mode {self.h2!r}")
        if self.orientation not in ("col", "row"):
            raise ValueError(f"unknown orientation {self.orientation!r}")

    @property
    def species(self) -> frozenset:
        return _SPECIES_FOR_KIND[self.kind]


@dataclass(frozen=True)
class SymmetryRule:
    """Per-species symmetry constraint applied when generators are built."""

    flags: Tuple[Tuple[str, str], ...] = ()

    @classmethod
    def of(cls, **kw: str) -> "SymmetryRule":
        items = []
        for sp, flag in sorted(kw.items()):
            if sp not in SPECIES_CODE:
                raise ValueError(f"unknown species {sp!r}")
            if flag not in SYMMETRY_FLAGS:
                raise ValueError(f"unknown symmetry flag {flag!r}")
            if flag != "none":
                items.append((sp, flag))
        return cls(tuple(items))

    def flag(self, species: str) -> str:
        for sp, f in self.flags:
            if sp == species:
                return f
        return "none"

    def is_trivial(self) -> bool:
        return not self.flags


NO_SYMMETRY = SymmetryRule()


def _check_consistency(rel: RelationSystem, sym: SymmetryRule) -> None:
    if sym.is_trivial() or rel.kind == "commutative":
        return
    if rel.kind != "abstract-h1h2":
        raise ValueError(f"symmetry constraints are only supported for abstract-h1h2 "
                         f"and commutative relations, not {rel.kind}")
    flags = {sp: f for sp, f in sym.flags}
    kinds = {("sym" if f == "sym" else "anti") for f in flags.values()}
    if len(kinds) > 1:
        raise ValueError("opposite symmetries force h1 = h2 = 0; use the commutative system")
    need = "plus" if kinds == {"sym"} else "minus"
    if rel.h2 != need:
        raise ValueError(f"{'symmetric' if need == 'plus' else 'antisymmetric'} generators "
                         f"require h2 mode {need!r}, got {rel.h2!r}")


def _scalar_add(acc: Scalar, mono: Mono, c: int) -> None:
    v = acc.get(mono, 0) + c
    if v:
        acc[mono] = v
    else:
        acc.pop(mono, None)


def _merge(w1: Word, w2: Word) -> Word:
    if not w1:
        return w2
    if not w2:
        return w1
    return tuple(sorted(w1 + w2))


class NCAlgebra:
    """A relation system plus symmetry rule, with its memo tables.

    Use :func:`algebra` to obtain a shared instance per configuration.
    """

    def __init__(self, rel: RelationSystem, sym: SymmetryRule = NO_SYMMETRY):
        _check_consistency(rel, sym)
        self.rel = rel
        self.sym = sym
        self._bracket: Dict[Tuple[Gen, Gen], Scalar] = {}
        self._reorder: Dict[Tuple[Word, Word], Dict[Key, int]] = {}
        self._flags = {SPECIES_CODE[sp]: f for sp, f in sym.flags}

    def __repr__(self):
        return f"NCAlgebra({self.rel}, {self.sym})"

    # generators ---------------------------------------------------------

    def canonical(self, g: Gen) -> Tuple[int, Gen]:
        """Apply the symmetry rule: returns (sign, representative); sign 0 kills."""
        s, i, j = decode_gen(g)
        if s not in self.rel.species:
            raise ValueError(f"species {SPECIES[s]!r} not supported by {self.rel.kind}")
        flag = self._flags.get(s, "none")
        if flag == "none":
            return 1, g
        if flag == "sym":
            return (1, encode_gen(s, j, i)) if i > j else (1, g)
        if i == j:
            return (0, g) if flag == "antisym" else (1, g)
        return (-1, encode_gen(s, j, i)) if i > j else (1, g)

    def gen(self, species: str, i: int, j: int) -> "NCElement":
        sign, g = self.canonical(encode_gen(species, i, j))
        if not sign:
            return self.zero()
        w = (g,)
        key = (w, (), ()) if is_left(g) else ((), w, ())
        return NCElement(self, {key: sign})

    def zero(self) -> "NCElement":
        return NCElement(self, {})

    def one(self) -> "NCElement":
        return NCElement(self, {((), (), ()): 1})

    def scalar(self, c: Union[CoeffPoly, int]) -> "NCElement":
        p = CoeffPoly.coerce(c)
        return NCElement(self, {((), (), m): v for m, v in p.terms.items()})

    # relations ----------------------------------------------------------

    def bracket(self, right: Gen, left: Gen) -> Scalar:
        """Central value of ``[right, left]`` for a right and a left generator."""
        key = (right, left)
        hit = self._bracket.get(key)
        if hit is not None:
            return hit
        out: Scalar = {}
        rel = self.rel
        _, k, l = decode_gen(right)
        _, i, j = decode_gen(left)
        # [b_kl, a_ij] = -[a_ij, b_kl]
        if rel.kind == "abstract-h1h2":
            if i == k and j == l:
                _scalar_add(out, ((h1_key(), 1),), 1)
            if i == l and j == k:
                if rel.h2 == "free":
                    _scalar_add(out, ((h2_key(), 1),), 1)
                elif rel.h2 == "plus":
                    _scalar_add(out, ((h1_key(), 1),), 1)
                elif rel.h2 == "minus":
                    _scalar_add(out, ((h1_key(), 1),), -1)
        elif rel.kind == "abstract-matrix-h":
            if rel.orientation == "col" and i == k:
                _scalar_add(out, ((hmat_key(j, l), 1),), 1)
            elif rel.orientation == "row" and j == l:
                _scalar_add(out, ((hmat_key(i, k), 1),), 1)
        elif rel.kind == "weyl":
            if i == k and j == l and rel.h:
                _scalar_add(out, (), rel.h)
        self._bracket[key] = out
        return out

    def reorder(self, right: Word, left: Word) -> Dict[Key, int]:
        """Normal form of the product ``right * left`` of two sorted blocks.

        Commutators are central and same-side generators commute, so
        ``b * A = A * b + sum_t [b, a_t] * (A without a_t)``; recursion on
        the right block gives a memoized contraction expansion.
        """
        if not right or not left:
            return {(left, right, ()): 1}
        key = (right, left)
        hit = self._reorder.get(key)
        if hit is not None:
            return hit
        b = right[0]
        out: Dict[Key, int] = {}
        for (la, rb, mono), c in self.reorder(right[1:], left).items():
            k0 = (la, _merge((b,), rb), mono)
            out[k0] = out.get(k0, 0) + c
            prev = None
            for pos, t in enumerate(la):
                if t == prev:
                    continue
                prev = t
                br = self.bracket(b, t)
                if not br:
                    continue
                mult = la.count(t)
                rest = la[:pos] + la[pos + 1:]
                for m2, c2 in br.items():
                    k1 = (rest, rb, mono_mul(mono, m2))
                    out[k1] = out.get(k1, 0) + c * c2 * mult
        out = {k: v for k, v in out.items() if v}
        self._reorder[key] = out
        return out

    # element construction ------------------------------------------------

    def word(self, gens: Sequence[Union[Gen, Tuple[str, int, int]]]) -> "NCElement":
        """Product of generators in the given order, normal-ordered."""
        out = self.one()
        for g in gens:
            if not isinstance(g, int):
                g = encode_gen(*g)
            s, i, j = decode_gen(g)
            out = out * self.gen(SPECIES[s], i, j)
        return out

    def normal_order(self, gens: Sequence[Union[Gen, Tuple[str, int, int]]],
                     rng: Optional[random.Random] = None) -> "NCElement":
        """Adjacent-swap rewriting of a raw word to normal form.

        Independent of :meth:`reorder`; with ``rng`` the swap position is
        chosen at random, which exercises confluence.
        """
        start: List[Gen] = []
        sign = 1
        for g in gens:
            if not isinstance(g, int):
                g = encode_gen(*g)
            s, g2 = self.canonical(g)
            if not s:
                return self.zero()
            sign *= s
            start.append(g2)
        pending: Dict[Tuple[Word, Mono], int] = {(tuple(start), ()): sign}
        done: Dict[Key, int] = {}
        while pending:
            (w, mono), c = pending.popitem()
            if not c:
                continue
            descents = [p for p in range(len(w) - 1) if self._out_of_order(w[p], w[p + 1])]
            if not descents:
                split = sum(1 for g in w if is_left(g))
                k = (w[:split], w[split:], mono)
                done[k] = done.get(k, 0) + c
                continue
            p = rng.choice(descents) if rng is not None else descents[0]
            u, v = w[p], w[p + 1]
            swapped = w[:p] + (v, u) + w[p + 2:]
            k = (swapped, mono)
            pending[k] = pending.get(k, 0) + c
            if not is_left(u) and is_left(v):
                shorter = w[:p] + w[p + 2:]
                for m2, c2 in self.bracket(u, v).items():
                    k2 = (shorter, mono_mul(mono, m2))
                    pending[k2] = pending.get(k2, 0) + c * c2
        return NCElement(self, {k: v for k, v in done.items() if v})

    @staticmethod
    def _out_of_order(u: Gen, v: Gen) -> bool:
        lu, lv = is_left(u), is_left(v)
        if lu != lv:
            return not lu
        return u > v


def algebra(rel: RelationSystem, sym: SymmetryRule = NO_SYMMETRY) -> NCAlgebra:
    return _shared_algebra(rel, sym)


@lru_cache(maxsize=None)
def _shared_algebra(rel: RelationSystem, sym: SymmetryRule) -> NCAlgebra:
    return NCAlgebra(rel, sym)


class NCElement:
    """Finite combination of normal words with central polynomial coefficients."""

    __slots__ = ("alg", "_t")

    def __init__(self, alg: NCAlgebra, terms: Dict[Key, int]):
        self.alg = alg
        self._t = terms

    # inspection ---------------------------------------------------------

    @property
    def raw(self) -> Dict[Key, int]:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def terms(self) -> Dict[Word, CoeffPoly]:
        """Map from full normal word (left block then right block) to coefficient."""
        grouped: Dict[Word, Dict[Mono, int]] = {}
        for (la, rb, mono), c in self._t.items():
            grouped.setdefault(la + rb, {})[mono] = c
        return {w: CoeffPoly(d) for w, d in grouped.items()}

    def term_count(self) -> int:
        return len({(la, rb) for la, rb, _ in self._t})

    def scalar_value(self) -> CoeffPoly:
        """Coefficient of the empty word; raises if other words are present."""
        out: Dict[Mono, int] = {}
        for (la, rb, mono), c in self._t.items():
            if la or rb:
                raise ValueError(f"{self} is not central")
            out[mono] = c
        return CoeffPoly(out)

    def degree(self) -> int:
        return max((len(la) + len(rb) for la, rb, _ in self._t), default=0)

    # arithmetic ---------------------------------------------------------

    def _same(self, other: "NCElement") -> None:
        if other.alg is not self.alg:
            raise ValueError("cannot combine elements of different relation systems")

    def _lift(self, other) -> "NCElement":
        if isinstance(other, NCElement):
            self._same(other)
            return other
        if isinstance(other, (int, CoeffPoly)):
            return self.alg.scalar(other)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._t)
        for k, c in other._t.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return NCElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return NCElement(self.alg, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Union[int, CoeffPoly]) -> "NCElement":
        if isinstance(c, int):
            if not c:
                return self.alg.zero()
            return NCElement(self.alg, {k: v * c for k, v in self._t.items()})
        out: Dict[Key, int] = {}
        for (la, rb, mono), v in self._t.items():
            for m2, c2 in c.terms.items():
                k = (la, rb, mono_mul(mono, m2))
                out[k] = out.get(k, 0) + v * c2
        return NCElement(self.alg, {k: v for k, v in out.items() if v})

    def __mul__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            return self.scale(other)
        if not isinstance(other, NCElement):
            return NotImplemented
        self._same(other)
        alg = self.alg
        out: Dict[Key, int] = {}
        get = out.get
        for (la1, rb1, m1), c1 in self._t.items():
            for (la2, rb2, m2), c2 in other._t.items():
                c12 = c1 * c2
                m12 = mono_mul(m1, m2)
                if not rb1 or not la2:
                    k = (_merge(la1, la2), _merge(rb1, rb2), m12)
                    out[k] = get(k, 0) + c12
                    continue
                for (la, rb, m3), c3 in alg.reorder(rb1, la2).items():
                    k = (_merge(la1, la), _merge(rb, rb2), mono_mul(m12, m3) if m3 else m12)
                    out[k] = get(k, 0) + c12 * c3
        return NCElement(alg, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            other = self.alg.scalar(other)
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.alg is other.alg and self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def substitute(self, mapping) -> "NCElement":
        """Substitute central variables in every coefficient."""
        out = self.alg.zero()
        for w, p in self.terms().items():
            q = p.substitute(mapping)
            if q.is_zero():
                continue
            split = sum(1 for g in w if is_left(g))
            for m, c in q.terms.items():
                k = (w[:split], w[split:], m)
                out._t[k] = out._t.get(k, 0) + c
        out._t = {k: v for k, v in out._t.items() if v}
        return out

    # display ------------------------------------------------------------

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for w, p in sorted(self.terms().items(), key=lambda it: (-len(it[0]), it[0])):
            body = "*".join(gen_name(g) for g in w)
            if not body:
                parts.append(str(p))
            elif p == 1:
                parts.append(body)
            elif p == -1:
                parts.append("-" + body)
            elif len(p) == 1 and p.is_constant():
                parts.append(f"{p}*{body}")
            else:
                parts.append(f"({p})*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NCElement({self})"


def commutator(e1: NCElement, e2: NCElement) -> NCElement:
    return e1 * e2 - e2 * e1


def el_combine(kind: str, e1: NCElement, e2) -> NCElement:
    if kind == "add":
        return e1 + e2
    if kind == "sub":
        return e1 - e2
    if kind == "mul":
        if not isinstance(e2, NCElement):
            raise TypeError("mul expects two elements; use scalar_mul for coefficients")
        return e1 * e2
    if kind == "scalar_mul":
        if isinstance(e2, NCElement):
            raise TypeError("scalar_mul expects a CoeffPoly or int")
        return e1.scale(e2)
    raise ValueError(f"unknown combine kind {kind!r}")


def normal_order(word: Sequence, rel: RelationSystem, sym: SymmetryRule = NO_SYMMETRY,
                 rng: Optional[random.Random] = None) -> NCElement:
    return algebra(rel, sym).normal_order(word, rng)
