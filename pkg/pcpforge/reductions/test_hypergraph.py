from fractions import Fraction

import numpy as np
import pytest

from pcpforge.utils.errors import PreconditionError, SizeError
from pcpforge.utils.rng import make_rng
from pcpforge.label_cover import generate_planted, Labeling
from pcpforge.reductions import (
    build_hypergraph, yes_two_coloring, independent_set_violations, violations_by_enumeration,
    monochromatic_weight, good_vertex_fraction, MonteCarloEstimate,
)


@pytest.fixture
def small():
    lc, lab = generate_planted(2, 3, 2, 2, 2, seed=1)
    return build_hypergraph(lc), lc, lab


def test_vertex_count():
    lc, _ = generate_planted(1, 3, 3, 1, 1, seed=0)
    assert build_hypergraph(lc).vertex_count == 6


def test_tiny_edges_are_never_constant():
    lc, _ = generate_planted(1, 1, 1, 1, 1, seed=0)
    h = build_hypergraph(lc)
    edges = h.edges()
    assert sum(edges.values()) == 1
    assert all(len(set(key)) > 1 for key in edges)
    assert h.to_text().startswith("p hyper 2 ")


def test_sampled_edges_lie_in_support(small):
    h, _, _ = small
    support = set(h.edges())
    ids = h.sample_edges(100000, seed=4)
    assert ids.shape == (100000, 4)
    assert all(tuple(int(i) for i in row) in support for row in ids)


def test_yes_coloring_exhaustive(small):
    h, lc, lab = small
    colors = yes_two_coloring(lc, lab)
    assert colors.shape == (h.vertex_count,)
    for c in (0, 1):
        assert violations_by_enumeration(h, colors == c) == 0
        assert independent_set_violations(h, colors == c) == 0
    assert monochromatic_weight(h, colors) == 0
    assert good_vertex_fraction(h, colors == 0, 1) == 1


def test_yes_coloring_sampled():
    lc, lab = generate_planted(6, 6, 3, 3, 4, seed=2)
    h = build_hypergraph(lc)
    est = monochromatic_weight(h, yes_two_coloring(lc, lab), mode="sample", samples=200000, seed=3)
    assert isinstance(est, MonteCarloEstimate)
    assert est.value == 0


def test_corrupted_labeling_rejected(small):
    _, lc, lab = small
    left = list(lab.left)
    left[0] = (left[0] + 1) % lc.k
    with pytest.raises(PreconditionError):
        yes_two_coloring(lc, Labeling(left, lab.right))


def test_trivial_subsets(small):
    h, _, _ = small
    assert independent_set_violations(h, np.ones(h.vertex_count, bool)) == 1
    assert independent_set_violations(h, []) == 0


def test_random_subset_matches_recount(small):
    h, _, _ = small
    rng = make_rng(6, "subset")
    for _ in range(5):
        subset = rng.random(h.vertex_count) < 0.5
        assert independent_set_violations(h, subset) == violations_by_enumeration(h, subset)


def test_sampled_violations_agree(small):
    h, _, _ = small
    subset = make_rng(7, "subset").random(h.vertex_count) < 0.6
    exact = float(independent_set_violations(h, subset))
    est = independent_set_violations(h, subset, mode="sample", samples=100000, seed=8)
    assert abs(est.value - exact) <= 4 * est.stderr
    big = independent_set_violations(h, subset, mode="sample", samples=400000, seed=9)
    assert 1.6 < est.stderr / big.stderr < 2.4


def test_exact_cap(small):
    _, lc, _ = small
    h = build_hypergraph(lc, cap=64)
    with pytest.raises(SizeError):
        independent_set_violations(h, [0, 1])
    with pytest.raises(SizeError):
        h.edges()
    est = independent_set_violations(h, [0, 1], mode="auto", samples=1000)
    assert isinstance(est, MonteCarloEstimate)


def test_good_vertex_fraction(small):
    h, _, _ = small
    subset = np.zeros(h.vertex_count, bool)
    subset[:2] = True
    assert good_vertex_fraction(h, subset, 1) == Fraction(1, 3)
    assert good_vertex_fraction(h, subset, Fraction(1, 4)) == Fraction(1, 3)
