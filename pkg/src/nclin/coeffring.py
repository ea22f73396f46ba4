"""Exact sparse polynomials over the integers in central indeterminates.

The indeterminates are the scalars that may appear in a commutator or a
diagonal correction: ``h1``, ``h2``, the matrix entries ``h[j,l]`` and the
correction entries ``q[i]``.  A variable is identified by a small tuple key
whose natural ordering is the global variable order

    h1 < h2 < h[j,l] (lex by (j, l)) < q[i] (by i)

A monomial is a sorted tuple of ``(key, exponent)`` pairs.  Coefficients are
Python integers, so arithmetic never overflows.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

VarKey = Tuple[int, int, int]
Mono = Tuple[Tuple[VarKey, int], ...]

_H1: VarKey = (0, 0, 0)
_H2: VarKey = (1, 0, 0)


def h1_key() -> VarKey:
    return _H1


def h2_key() -> VarKey:
    return _H2


def hmat_key(j: int, l: int) -> VarKey:
    if j < 1 or l < 1:
        raise ValueError(f"h[{j},{l}]: indices are 1-based")
    return (2, j, l)


def q_key(i: int) -> VarKey:
    if i < 1:
        raise ValueError(f"q[{i}]: index is 1-based")
    return (3, i, 0)


def var_name(key: VarKey) -> str:
    tag, a, b = key
    if tag == 0:
        return "h1"
    if tag == 1:
        return "h2"
    if tag == 2:
        return f"h[{a},{b}]"
    if tag == 3:
        return f"q[{a}]"
    raise ValueError(f"unknown variable key {key!r}")


@lru_cache(maxsize=1 << 16)
def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for v, e in m2:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def mono_str(m: Mono) -> str:
    parts = []
    for v, e in m:
        name = var_name(v)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _grlex_key(item):
    mono, _ = item
    # descending total degree, then lexicographic in the variable order
    return (-mono_degree(mono), tuple((v, -e) for v, e in mono))


class CoeffPoly:
    """Immutable integer polynomial in central variables.

    Terms are stored as ``{monomial: nonzero int}``.  Two equal polynomials
    always have equal term dictionaries, so equality and hashing are exact.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        if terms:
            self._terms = {m: c for m, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Mono, int]) -> "CoeffPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "CoeffPoly":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, key: VarKey, power: int = 1) -> "CoeffPoly":
        if power < 0:
            raise ValueError("negative exponent")
        if power == 0:
            return cls.const(1)
        return cls._raw({((key, power),): 1})

    @classmethod
    def h1(cls) -> "CoeffPoly":
        return cls.var(_H1)

    @classmethod
    def h2(cls) -> "CoeffPoly":
        return cls.var(_H2)

    @classmethod
    def hmat(cls, j: int, l: int) -> "CoeffPoly":
        return cls.var(hmat_key(j, l))

    @classmethod
    def q(cls, i: int) -> "CoeffPoly":
        return cls.var(q_key(i))

    @classmethod
    def coerce(cls, x: Union["CoeffPoly", int]) -> "CoeffPoly":
        if isinstance(x, CoeffPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CoeffPoly")

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Mono, int]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Mono, int]]:
        """Terms in graded-lex order (highest degree first)."""
        return sorted(self._terms.items(), key=_grlex_key)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((), 0)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = CoeffPoly.const(other)
        elif not isinstance(other, CoeffPoly):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return CoeffPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CoeffPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = CoeffPoly.const(other)
        elif not isinstance(other, CoeffPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return CoeffPoly._raw({})
            return CoeffPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        out: Dict[Mono, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return CoeffPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = CoeffPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = CoeffPoly.const(other)
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution -------------------------------------------------------

    def substitute(self, mapping: Mapping[VarKey, Union["CoeffPoly", int]]) -> "CoeffPoly":
        """Simultaneously replace variables by polynomials."""
        if not mapping:
            return self
        images = {k: CoeffPoly.coerce(v) for k, v in mapping.items()}
        powers: Dict[Tuple[VarKey, int], CoeffPoly] = {}
        out = CoeffPoly._raw({})
        for mono, c in self._terms.items():
            kept = []
            factor = CoeffPoly.const(c)
            for v, e in mono:
                if v in images:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = images[v] ** e
                    factor = factor * powers[key]
                    if factor.is_zero():
                        break
                else:
                    kept.append((v, e))
            if factor.is_zero():
                continue
            if kept:
                factor = factor * CoeffPoly._raw({tuple(kept): 1})
            out = out + factor
        return out

    # display ------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for mono, c in self.items():
            body = mono_str(mono)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            chunks.append(("-" if c < 0 else "+", s))
        first_sign, first = chunks[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, s in chunks[1:]:
            out += f" {sign} {s}"
        return out

    def __repr__(self):
        return f"CoeffPoly({self})"


def cp_combine(kind: str, p: CoeffPoly, q: CoeffPoly | None = None) -> CoeffPoly:
    """Functional entry point: ``kind`` is one of add, mul, neg."""
    if kind == "neg":
        if q is not None:
            raise ValueError("neg takes a single operand")
        return -p
    if q is None:
        raise ValueError(f"{kind} needs two operands")
    if kind == "add":
        return p + q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown combine kind {kind!r}")


def cp_substitute(p: CoeffPoly, mapping: Mapping[VarKey, Union[CoeffPoly, int]]) -> CoeffPoly:
    return p.substitute(mapping)


def cp_is_zero(p: CoeffPoly) -> bool:
    return p.is_zero()
