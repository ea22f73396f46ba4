from __future__ import annotations

import itertools
import random

import pytest

from nclin.identities import (
    COUNTEREXAMPLES,
    IDENTITIES,
    IdentitySpec,
    antisym_lhs,
    capelli_rhs,
    cb_lhs,
    counterexample,
    easy_cb_error_check,
    generic_matrix,
    grid,
    itoh_matrices,
    noncentral_instance,
    verify,
    verify_many,
)
from nclin.ncalgebra import RelationSystem, algebra
from nclin.ncmatrix import HSpec, NCMatrix, nc_det, submatrix, transpose
from nclin.rings import INTEGERS, NCRing

H1H2 = algebra(RelationSystem("abstract-h1h2"))


def run_grid(name, framework, **kw):
    results = [verify(s) for s in grid(name, framework, **kw)]
    assert results
    return results


# builders ----------------------------------------------------------------------

def test_cb_lhs_small_cases():
    A = generic_matrix(H1H2, "a", 1, 2)
    B = generic_matrix(H1H2, "b", 1, 2)
    assert cb_lhs(A, B, (1, 2), (1, 2)).is_zero()
    A1, B1 = generic_matrix(H1H2, "a", 1, 1), generic_matrix(H1H2, "b", 1, 1)
    assert cb_lhs(A1, B1, (1,), (1,)) == H1H2.gen("a", 1, 1) * H1H2.gen("b", 1, 1)
    assert antisym_lhs(A1, B1, (1,), (1,)) == H1H2.gen("a", 1, 1) * H1H2.gen("b", 1, 1)


def test_commutative_degeneration(rng):
    for _ in range(40):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        A = NCMatrix.build(INTEGERS, m, n, lambda i, j: rng.randint(-3, 3))
        B = NCMatrix.build(INTEGERS, m, n, lambda i, j: rng.randint(-3, 3))
        P = transpose(A) @ B
        r = rng.randint(1, n)
        I = tuple(sorted(rng.sample(range(1, n + 1), r)))
        J = tuple(sorted(rng.sample(range(1, n + 1), r)))
        assert cb_lhs(A, B, I, J) == nc_det(submatrix(P, I, J))
        assert antisym_lhs(A, B, I, J) == nc_det(submatrix(P, I, J), "col-per")


def test_dropping_the_correction_breaks_capelli():
    alg = algebra(RelationSystem("weyl"))
    ring = NCRing(alg)
    X = NCMatrix.build(ring, 2, 2, lambda i, j: alg.gen("x", i, j))
    D = NCMatrix.build(ring, 2, 2, lambda i, j: alg.gen("d", i, j))
    I = J = (1, 2)
    lhs = cb_lhs(X, D, I, J)
    assert lhs == capelli_rhs(X, D, I, J, "col-det", "AtB", 1, HSpec.scalar(alg.one()))
    assert lhs != capelli_rhs(X, D, I, J, "col-det", "AtB")


# the published identities on small grids ------------------------------------------------

@pytest.mark.parametrize("name", ["prop_1_1a", "prop_1_1b", "prop_1_1c",
                                  "prop_1_1_prime_a", "prop_1_1_prime_b", "prop_1_1_prime_c"])
@pytest.mark.parametrize("framework", ["abstract-matrix-h", "weyl"])
def test_cauchy_binet_family(name, framework):
    for res in run_grid(name, framework, m_max=2, n_max=3):
        assert res.is_zero and res.hypotheses_hold, res.as_dict()


def test_cauchy_binet_row_orientation_examples():
    res = verify(IdentitySpec("prop_1_1a", 1, 1, 1, (1,), (1,)))
    assert res.is_zero and res.lhs_terms == 1
    res = verify(IdentitySpec("prop_1_1a", 1, 2, 2, (1, 2), (1, 2)))
    assert res.is_zero and res.lhs_terms == 0


def test_duality_matches_transpose():
    for m, n in itertools.product((1, 2), (1, 2, 3)):
        direct = run_grid("prop_1_1a", "weyl", m_values=[n], n_values=[m])
        dual = run_grid("prop_1_1_prime_a", "weyl", m_values=[m], n_values=[n])
        assert [(r.lhs_terms, r.rhs_terms) for r in direct] == [(r.lhs_terms, r.rhs_terms) for r in dual]


@pytest.mark.parametrize("framework", ["abstract-h1h2", "weyl"])
def test_capelli_four_forms(framework):
    for res in run_grid("cor_1_2", framework, m_max=2, n_max=2):
        assert res.is_zero and len(res.parts) == 4


@pytest.mark.parametrize("name", ["prop_1_3a", "prop_1_3b", "prop_1_4a", "prop_1_4b"])
@pytest.mark.parametrize("framework", ["abstract-h1h2", "weyl"])
def test_turnbull_family(name, framework):
    for res in run_grid(name, framework, m_max=2, n_max=2):
        assert res.is_zero and res.hypotheses_hold, res.as_dict()


def test_turnbull_n2_extra_hypotheses_recorded():
    res = verify(IdentitySpec("prop_1_3a", 2, 2, 2, (1, 2), (1, 2), "abstract-h1h2"))
    assert res.is_zero
    keys = " ".join(res.hypothesis_audit)
    assert "two-torsion-free" in keys and "[m_12,h] = 0" in keys
    assert res.hypothesis_audit["n=2 extra hypothesis"]


def test_permanent_second_form_needs_zero_diagonal():
    res = verify(IdentitySpec("prop_1_4a", 1, 1, 1, (1,), (1,), "abstract-h1h2", symA="antisym-offdiag"))
    assert res.is_zero
    assert not any("AB" in k for k in res.parts)
    res = verify(IdentitySpec("prop_1_4a", 2, 2, 2, (1, 2), (1, 2), "abstract-h1h2", symA="antisym"))
    assert res.is_zero and any("AB" in k for k in res.parts)


@pytest.mark.parametrize("framework", ["commutative", "m2gf2"])
def test_commuting_cauchy_binet(framework):
    for res in run_grid("prop_3_4", framework, m_max=2, n_max=2):
        assert res.is_zero


@pytest.mark.parametrize("name", ["prop_3_8a", "prop_3_8b"])
def test_factor_two(name):
    for fw in ("abstract-matrix-h", "m2gf2"):
        for res in run_grid(name, fw, m_max=2, n_max=2):
            assert res.ok


def test_noncentral_h_lemmas():
    for seed in range(3):
        for n in (2, 3):
            res = verify(IdentitySpec("lemma_3_1", 1, n, 1, framework="weyl", s=seed))
            assert res.is_zero and res.hypotheses_hold
            assert res.hypothesis_audit["info:h noncentral"]
    for res in run_grid("cor_3_3", "weyl", m_values=[1], n_max=3):
        assert res.is_zero
    for res in run_grid("cor_3_3", "abstract-matrix-h", m_values=[1], n_max=3):
        assert res.is_zero


def test_noncentral_instance_relation():
    alg, A, B, H = noncentral_instance(2, seed=5)
    for j, l in itertools.product((1, 2), repeat=2):
        assert A[1, j] * B[1, l] - B[1, l] * A[1, j] == -H[j, l]
    assert any(not (H[k] * alg.gen("d", 1, 1) - alg.gen("d", 1, 1) * H[k]).is_zero() for k in H)


def test_cayley_type_identities():
    res = verify(IdentitySpec("lemma_A_2", 2, 2, 1, framework="weyl", s=2))
    assert res.is_zero
    for fw in ("abstract-matrix-h", "weyl"):
        for res in run_grid("prop_A_1", fw, m_max=2, n_max=2, s_values=(0, 1, 2)):
            assert res.is_zero
        for res in run_grid("lemma_A_2", fw, m_max=2, n_max=2, s_values=(1, 2)):
            assert res.is_zero


# validation -----------------------------------------------------------------------

@pytest.mark.parametrize("spec", [
    IdentitySpec("prop_9_9", 1, 1, 1, (1,), (1,)),
    IdentitySpec("prop_1_1a", 1, 1, 1, (1,), (1,), framework="m2gf2"),
    IdentitySpec("prop_1_3a", 1, 2, 1, (1,), (1,), framework="weyl"),
    IdentitySpec("prop_1_1a", 2, 2, 3, (1, 2, 3), (1, 2, 3)),
    IdentitySpec("prop_1_1a", 2, 2, 2, (1,), (1, 2)),
    IdentitySpec("prop_1_1a", 2, 2, 1, (3,), (1,)),
    IdentitySpec("prop_A_1", 2, 2, 1, (1,), (1,), framework="weyl", s=-1),
])
def test_invalid_specs(spec):
    with pytest.raises(ValueError):
        verify(spec)


def test_registry_is_complete():
    assert len(IDENTITIES) == 18
    for name, info in IDENTITIES.items():
        assert info.summary and info.frameworks, name


def test_parallel_matches_serial():
    specs = list(grid("prop_1_1b", "abstract-matrix-h", m_max=2, n_max=2))
    serial = [r.as_dict() for r in verify_many(specs, jobs=1)]
    parallel = [r.as_dict() for r in verify_many(specs, jobs=2)]
    assert serial == parallel


# counterexamples --------------------------------------------------------------------

@pytest.mark.parametrize("cid", COUNTEREXAMPLES)
def test_counterexamples(cid):
    res = counterexample(cid)
    assert res.expected_nonzero and not res.is_zero and res.ok
    assert "all witness checks hold" in res.note


def test_example_3_5_report():
    res = counterexample("ex_3_5")
    assert "column-pseudo-commutativity" in res.note
    assert res.parts["2*residual == 0"]
    assert not res.hypothesis_audit["A column-pseudo-commutative"]


def test_itoh_relation():
    alg, A, B = itoh_matrices(2)
    for i, j, k, l in itertools.product((1, 2), repeat=4):
        c = A[i, j] * B[k, l] - B[k, l] * A[i, j]
        assert c == (alg.one() if (i == k and j == l) else alg.zero())


def test_unknown_counterexample():
    with pytest.raises(ValueError):
        counterexample("ex_9_9")


def test_two_by_two_error_term():
    assert easy_cb_error_check(300, seed=3) == (300, 0)
