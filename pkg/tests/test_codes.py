import random

import pytest

from monomials import codes
from monomials.core import Graph, MonomialIdeal
from monomials.errors import BudgetExceededError, PreconditionError

from helpers import complete_graph, cycle_graph, path_graph, random_point_set


def p1_f2():
    return codes.PointSetOverFq(2, 2, [(1, 0), (0, 1), (1, 1)])


def test_field_tables():
    for q in (2, 3, 4, 5, 7, 8, 9):
        f = codes.GF(q)
        for a in range(q):
            for b in range(q):
                assert f.add[a][b] == f.add[b][a]
                assert f.mul[a][b] == f.mul[b][a]
                for c in range(q):
                    assert (
                        f.mul[a][f.add[b][c]]
                        == f.add[f.mul[a][b]][f.mul[a][c]]
                    )
        for a in range(1, q):
            assert f.mul[a][f.inv[a]] == 1
    with pytest.raises(PreconditionError):
        codes.GF(6)


def test_build_code_examples():
    code = codes.build_code(p1_f2(), 1)
    assert (code.dimension, code.length) == (2, 3)
    assert codes.minimum_distance(code) == 2
    code = codes.build_code(p1_f2(), 2)
    assert code.dimension == 3
    assert codes.minimum_distance(code) == 1
    affine = codes.PointSetOverFq(
        2, 3, [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)], normalize=False
    )
    assert codes.build_code(affine, 1).dimension == 3


def test_projective_normalization_and_duplicates():
    pts = codes.PointSetOverFq(3, 2, [(2, 1)])
    assert pts.points == ((1, 2),)
    with pytest.raises(PreconditionError):
        codes.PointSetOverFq(3, 2, [(1, 2), (2, 1)])  # same projective point


def test_weights_hierarchy():
    code = codes.build_code(p1_f2(), 2)
    assert codes.weight_hierarchy(code) == [1, 2, 3]
    code = codes.build_code(p1_f2(), 1)
    hierarchy = codes.weight_hierarchy(code)
    assert hierarchy == sorted(hierarchy)
    assert len(set(hierarchy)) == len(hierarchy)


def _subspace_weight_reference(code, r):
    """delta_r by direct enumeration of r-dimensional subcodes."""
    f = code.field
    best = code.length
    for mat in codes._r_subspaces(f, code.dimension, r):
        support = set()
        rows = []
        for coeffs in mat:
            word = [0] * code.length
            for c, row in zip(coeffs, code.basis):
                if c:
                    for i, x in enumerate(row):
                        word[i] = f.add[word[i]][f.mul[c][x]]
            rows.append(word)
        for i in range(code.length):
            if any(row[i] for row in rows):
                support.add(i)
        best = min(best, len(support))
    return best


def test_generalized_weight_matches_subspace_enumeration():
    rng = random.Random(163)
    for _ in range(6):
        pts = random_point_set(rng, 2, 3, rng.randint(3, 6))
        for d in (1, 2):
            code = codes.build_code(pts, d)
            for r in range(1, min(code.dimension, 3) + 1):
                assert codes.generalized_weight(code, r) == \
                    _subspace_weight_reference(code, r)


def test_minimum_distance_equals_first_weight():
    rng = random.Random(167)
    for _ in range(8):
        q = rng.choice([2, 3])
        pts = random_point_set(rng, q, 3, rng.randint(3, 7))
        code = codes.build_code(pts, rng.randint(1, 2))
        assert codes.minimum_distance(code) == codes.generalized_weight(code, 1)


def test_gmd_and_vasconcelos():
    assert codes.gmd_and_vasconcelos(p1_f2(), 1, 1) == (2, 2)
    # at the regularity threshold everything collapses to delta = r
    code = codes.build_code(p1_f2(), 2)
    for r in (1, 2, 3):
        d_i, theta = codes.gmd_and_vasconcelos(p1_f2(), 2, r)
        assert d_i == theta == codes.generalized_weight(code, r) == r
    p1f3 = codes.PointSetOverFq(3, 2, [(1, 0), (0, 1), (1, 1), (1, 2)])
    d_i, theta = codes.gmd_and_vasconcelos(p1f3, 1, 2)
    code = codes.build_code(p1f3, 1)
    assert d_i == theta == codes.generalized_weight(code, 2)


def test_v_number_points_examples():
    assert codes.v_number_points(p1_f2()) == 2
    two = codes.PointSetOverFq(3, 2, [(1, 0), (1, 2)])
    assert codes.v_number_points(two) == 1
    collinear = codes.PointSetOverFq(
        3, 2, [(1, 0), (1, 1), (1, 2)], normalize=False
    )
    v = codes.v_number_points(collinear)
    # cross check against the delta threshold
    d = 1
    while codes.minimum_distance(codes.build_code(collinear, d)) > 1:
        d += 1
    assert v == d == 2


def test_v_number_monomial_examples():
    c4 = cycle_graph(4).edge_ideal()
    assert codes.v_number_monomial(c4) == 1
    assert codes.v_number_monomial(MonomialIdeal(1, [(1,)])) == 0
    c5 = cycle_graph(5).edge_ideal()
    assert codes.v_number_monomial(c5) == 2
    assert codes.v_number_monomial(MonomialIdeal(2, [(1, 0), (0, 1)])) == 0
    with pytest.raises(BudgetExceededError):
        codes.v_number_monomial(c5, degree_cap=1)


def test_v_number_basic_laws():
    rng = random.Random(173)
    from helpers import random_squarefree_ideal

    for _ in range(10):
        ideal = random_squarefree_ideal(rng, rng.randint(2, 6))
        v = codes.v_number_monomial(ideal)
        prime = all(sum(g) == 1 for g in ideal.gens)
        assert (v == 0) == prime
        assert v >= 0


def test_irreducible_decomposition():
    ideal = MonomialIdeal(2, [(2, 0), (1, 1)])
    comps = codes.irreducible_components(ideal)
    inter = comps[0]
    for c in comps[1:]:
        inter = inter.intersect(c)
    assert inter == ideal
    assert codes.associated_primes(ideal) == [
        frozenset({0}), frozenset({0, 1})
    ]
    # squarefree: associated primes are the minimal covers
    c5 = cycle_graph(5).edge_ideal()
    assert set(codes.associated_primes(c5)) == {
        frozenset(c) for c in c5.minimal_primes()
    }


def test_prime_power_field_code():
    # the projective line over F4 has 5 points; with d = 1 the code is MDS
    f4_points = codes.PointSetOverFq(
        4, 2, [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3)]
    )
    code = codes.build_code(f4_points, 1)
    assert (code.length, code.dimension) == (5, 2)
    assert codes.minimum_distance(code) == 4  # Reed-Solomon-like: n - k + 1
    # on the projective line the distance is (q+1) - d, reaching 1 at d = q
    assert codes.v_number_points(f4_points) == 4


def test_weight_report():
    report = codes.weight_report(p1_f2())
    assert report.v_number == 2
    assert report.threshold == 2
    assert report.weights[1] == (2, 3)
    assert report.weights[2] == (1, 2, 3)
    rng = random.Random(179)
    for _ in range(5):
        pts = random_point_set(rng, rng.choice([2, 3]), 3, rng.randint(3, 7))
        codes.weight_report(pts)  # raises if any structural law breaks


def test_w2():
    assert codes.w2_test(complete_graph(3))
    assert not codes.w2_test(path_graph(3))
    assert not codes.w2_test(cycle_graph(4))
    assert codes.w2_test(cycle_graph(5))  # C5 is in W2
    with pytest.raises(PreconditionError):
        codes.w2_test(Graph(3, [(0, 1)]))  # isolated vertex
