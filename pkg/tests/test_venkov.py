import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonobelt import catalog
from zonobelt.errors import InternalInconsistency, NegativeVerdict
from zonobelt.exactlin import rank
from zonobelt.venkov import (
    check_projection,
    check_scaling,
    check_subset_closure,
    is_parallelohedron,
    venkov_test,
)
from zonobelt.zonotope import GeneratorSet, flats_of_dim

from conftest import PARALLELOHEDRA, random_nonzero

OCTAGON = GeneratorSet.from_columns([(1, 0), (0, 1), (1, 1), (1, -1)])


def brute_venkov(V):
    """Worst class count over closed rank-(d-2) subsets, by rank tests only."""
    d = V.dim
    worst = 0
    for S in _closed_subsets(V, d - 2):
        W = [V.gens[i] for i in S]
        outside = [i for i in range(V.n) if i not in S]
        reps = []
        for i in outside:
            if not any(rank(W + [V.gens[i], V.gens[j]]) == d - 1 for j in reps):
                reps.append(i)
        worst = max(worst, len(reps))
    return worst <= 3, worst


def _closed_subsets(V, k):
    for size in range(k, V.n + 1):
        for S in combinations(range(V.n), size):
            W = [V.gens[i] for i in S]
            if rank(W) == k and all(rank(W + [V.gens[j]]) > k for j in range(V.n) if j not in S):
                yield S


def test_octagon_fails_with_witness():
    v = venkov_test(OCTAGON)
    assert not v
    assert v.witness is not None and v.witness.indices == ()
    assert v.witness_count == 4


def test_hexagon_passes():
    assert venkov_test(GeneratorSet.from_columns([(1, 0), (0, 1), (1, 1)]))


@pytest.mark.parametrize("name", PARALLELOHEDRA)
def test_catalog_parallelohedra_pass(name):
    V = catalog.get(name).generators
    assert venkov_test(V)
    assert is_parallelohedron(V)


@pytest.mark.parametrize("name", ["cube3", "hexagonal_prism", "rhombic_dodecahedron",
                                  "elongated_dodecahedron", "permutahedron3", "cube4"])
def test_agrees_with_brute_force(name):
    V = catalog.get(name).generators
    ok, worst = brute_venkov(V)
    verdict = venkov_test(V)
    assert bool(verdict) == ok
    assert max(c for _, c in verdict.ridge_reports) == worst


def test_four_generic_vectors_in_3d_fail():
    V = GeneratorSet.from_columns([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3), (1, -1, 2)])
    ok, _ = brute_venkov(V)
    assert not ok
    assert not venkov_test(V)
    assert not is_parallelohedron(V)


def test_dimension_one_rejected():
    with pytest.raises(ValueError):
        venkov_test(GeneratorSet.from_columns([(1,)]))


vecs3 = st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)).filter(any),
                 min_size=3, max_size=6)


@settings(max_examples=60, deadline=None)
@given(vecs3)
def test_random_3d_agrees_with_brute_force(cols):
    V = GeneratorSet.from_columns(cols, 3)
    if V.rank < 3:
        return
    assert bool(venkov_test(V)) == brute_venkov(V)[0]
    assert is_parallelohedron(V) == bool(venkov_test(V))


def test_closure_suites_stay_positive():
    rng = random.Random(5)
    pool = [catalog.get(n).generators for n in PARALLELOHEDRA]
    for _ in range(100):
        V = rng.choice(pool)
        S = [i for i in range(V.n) if rng.random() < 0.6]
        assert check_subset_closure(V, S)
        assert check_scaling(V, rng.randrange(V.n), random_nonzero(rng))
        k = rng.randint(0, V.dim - 1)
        assert check_projection(V, rng.choice(flats_of_dim(V, k)))


def test_scaling_preserves_negative_verdict():
    assert not check_scaling(OCTAGON, 2, Fraction(-7, 3))


def test_subset_of_non_parallelohedron_rejected():
    with pytest.raises(NegativeVerdict):
        check_subset_closure(OCTAGON, [0, 1])


def test_internal_inconsistency_is_exit_5():
    assert InternalInconsistency("x").exit_code == 5
