from __future__ import annotations

import itertools

import pytest

from nclin.ncalgebra import RelationSystem, algebra
from nclin.rings import (
    ALPHA,
    BETA,
    INTEGERS,
    M2GF2,
    GF2Mat,
    GF2MatrixRing,
    NCRing,
    enumerate_m2gf2,
    kron,
    ring_arith,
)

ELEMENTS = enumerate_m2gf2()


def test_sixteen_elements():
    assert len(ELEMENTS) == 16 == len(set(ELEMENTS))
    assert all(M2GF2.contains(x) for x in ELEMENTS)


def test_ring_axioms_exhaustive():
    one, zero = M2GF2.one(), M2GF2.zero()
    for x, y, z in itertools.product(ELEMENTS, repeat=3):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
        assert (x + y) + z == x + (y + z)
    for x in ELEMENTS:
        assert x * one == x == one * x
        assert x + zero == x
        assert x + x == zero == ring_arith("add", x, x)
        assert -x == x


def test_alpha_beta_do_not_commute():
    assert ALPHA * BETA != BETA * ALPHA
    assert ALPHA * BETA + BETA * ALPHA == BETA
    assert BETA * BETA == M2GF2.one()


def test_gf2mat_validation():
    with pytest.raises(ValueError):
        GF2Mat.from_rows([[1, 2], [0, 0]])
    with pytest.raises(ValueError):
        GF2Mat.from_rows([[1, 0, 0], [0, 0, 0]])
    with pytest.raises(ValueError):
        ALPHA + GF2MatrixRing(4).one()
    assert GF2Mat.from_rows(ALPHA.rows()) == ALPHA


def test_kron_factors_commute():
    I2 = M2GF2.one()
    for a, b in itertools.product(ELEMENTS, repeat=2):
        left, right = kron(a, I2), kron(I2, b)
        assert left * right == right * left == kron(a, b)
    for a, c in itertools.product(ELEMENTS, repeat=2):
        assert kron(a, I2) * kron(c, I2) == kron(a * c, I2)


def test_capability_flags():
    assert not M2GF2.two_torsion_free
    alg = algebra(RelationSystem("weyl"))
    assert NCRing(alg).two_torsion_free
    assert INTEGERS.from_int(3) == 3


def test_nc_ring_axioms_sampled(rng):
    alg = algebra(RelationSystem("weyl"))
    R = NCRing(alg)
    gens = [alg.gen(s, i, j) for s in "xd" for i in (1, 2) for j in (1, 2)]

    def element():
        out = R.zero()
        for _ in range(rng.randint(0, 3)):
            w = R.from_int(rng.randint(-2, 2))
            for _ in range(rng.randint(0, 2)):
                w = w * rng.choice(gens)
            out = out + w
        return out

    for _ in range(100):
        x, y, z = element(), element(), element()
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert R.is_zero(x - x)
        assert x * R.one() == x


def test_ring_arith_errors():
    with pytest.raises(ValueError):
        ring_arith("add", 1, ALPHA)
    with pytest.raises(ValueError):
        ring_arith("mul", 1)
    assert ring_arith("neg", 3) == -3
