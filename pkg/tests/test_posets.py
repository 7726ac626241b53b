"""Tests for P-partitions and cone point counts."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfkit.application.fixtures import get_fixture
from gfkit.domain.errors import ComputationError, GuardExceededError
from gfkit.domain.polynomials import UPolyT
from gfkit.domain.posets import (
    HalfspaceSystem,
    NaturalPoset,
    PPartition,
    brute_p_partitions,
    compatible_extension,
    cone_points_bruteforce,
    in_class,
    linear_extensions,
    p_partition_gf,
    p_partitions,
    sigma_data,
    staircase_denominator,
)
from gfkit.domain.ratfun import RatFun, ratfun_expand


@pytest.fixture
def example_poset():
    return get_fixture("example_poset", "poset")


@st.composite
def natural_posets(draw, max_k: int = 5) -> NaturalPoset:
    k = draw(st.integers(1, max_k))
    candidates = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    pairs = draw(st.lists(st.sampled_from(candidates), unique=True)) if candidates else []
    return NaturalPoset.from_pairs(k, pairs)


# ---------------------------------------------------------------------------
# Posets
# ---------------------------------------------------------------------------
class TestNaturalPoset:
    def test_transitive_closure(self):
        p = NaturalPoset.from_pairs(3, [(1, 2), (2, 3)])
        assert p.less(1, 3)

    def test_naturality_enforced(self):
        with pytest.raises(ComputationError):
            NaturalPoset.from_pairs(3, [(2, 1)])

    def test_out_of_range(self):
        with pytest.raises(ComputationError):
            NaturalPoset.from_pairs(2, [(1, 3)])

    def test_predecessors(self, example_poset):
        assert example_poset.predecessors(3) == [1, 2]
        assert example_poset.predecessors(4) == [2]

    def test_negative_parts_rejected(self):
        with pytest.raises(ComputationError):
            PPartition((1, -1))


class TestLinearExtensions:
    def test_example(self, example_poset):
        assert linear_extensions(example_poset) == [
            (1, 2, 3, 4),
            (1, 2, 4, 3),
            (2, 1, 3, 4),
            (2, 1, 4, 3),
            (2, 4, 1, 3),
        ]

    def test_antichain_gives_every_permutation(self):
        assert len(linear_extensions(NaturalPoset.from_pairs(4, []))) == 24

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            linear_extensions(NaturalPoset.from_pairs(13, []))

    def test_sigma_data(self):
        assert sigma_data((2, 1, 4, 3), 4) == (4, PPartition((1, 0, 2, 1)))

    def test_sigma_data_identity(self):
        assert sigma_data((1, 2, 3), 3) == (0, PPartition((0, 0, 0)))

    def test_sigma_data_rejects_non_permutation(self):
        with pytest.raises(ComputationError):
            sigma_data((1, 1, 2), 3)


# ---------------------------------------------------------------------------
# Generating functions
# ---------------------------------------------------------------------------
class TestPPartitionGf:
    def test_example_numerator(self, example_poset):
        expected = RatFun(UPolyT([1, 1, 1, 1, 1]), staircase_denominator(4))
        assert p_partition_gf(example_poset) == expected

    def test_agrees_with_enumeration(self, example_poset):
        gf = p_partition_gf(example_poset)
        assert ratfun_expand(gf, 20) == brute_p_partitions(example_poset, 20)

    def test_chain_is_partitions_into_at_most_k_parts(self):
        chain = NaturalPoset.from_pairs(3, [(1, 2), (2, 3)])
        assert p_partition_gf(chain) == RatFun(UPolyT([1]), staircase_denominator(3))

    def test_small_counts(self, example_poset):
        assert brute_p_partitions(example_poset, 2).coeffs == (1, 2, 4)

    def test_brute_guard(self, example_poset):
        with pytest.raises(GuardExceededError):
            brute_p_partitions(example_poset, 61)

    @given(natural_posets())
    @settings(max_examples=20, deadline=None)
    def test_random_posets_agree_with_enumeration(self, poset):
        assert ratfun_expand(p_partition_gf(poset), 15) == brute_p_partitions(poset, 15)


class TestPartitionClasses:
    def test_every_partition_lies_in_exactly_one_class(self, example_poset):
        extensions = linear_extensions(example_poset)
        for lam in p_partitions(example_poset, 6):
            owners = [s for s in extensions if in_class(s, lam)]
            assert owners == [compatible_extension(example_poset, lam)]

    def test_minimal_partition_is_in_its_class(self, example_poset):
        for sigma in linear_extensions(example_poset):
            _, lam = sigma_data(sigma, example_poset.k)
            assert lam.compatible_with(example_poset)
            assert in_class(sigma, lam)

    def test_incompatible_partition_rejected(self, example_poset):
        with pytest.raises(ComputationError):
            compatible_extension(example_poset, PPartition((1, 0, 0, 0)))

    @given(natural_posets())
    @settings(max_examples=20, deadline=None)
    def test_random_posets_partition_into_classes(self, poset):
        extensions = linear_extensions(poset)
        for lam in p_partitions(poset, 6):
            owners = [s for s in extensions if in_class(s, lam)]
            assert owners == [compatible_extension(poset, lam)]
        for sigma in extensions:
            _, lam = sigma_data(sigma, poset.k)
            assert lam.compatible_with(poset)
            assert compatible_extension(poset, lam) == sigma


# ---------------------------------------------------------------------------
# Cones
# ---------------------------------------------------------------------------
class TestCones:
    def test_doubling_cone(self):
        h = get_fixture("cone_doubling", "cone")
        counts = cone_points_bruteforce(h, 40)
        assert counts.coeffs[:8] == (1, 0, 1, 2, 1, 2, 3, 2)
        assert counts == ratfun_expand(RatFun.parse("(1 - t + t^2)/((1 - t)*(1 - t^3))"), 40)

    def test_triangle_cone(self):
        h = get_fixture("cone_triangle", "cone")
        expected = RatFun.parse("(1 + t + t^2)/((1 - t)*(1 - t^2)^2)")
        assert cone_points_bruteforce(h, 12) == ratfun_expand(expected, 12)

    def test_row_length_checked(self):
        with pytest.raises(ComputationError):
            HalfspaceSystem(2, ((1, 2, 3),))

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            cone_points_bruteforce(HalfspaceSystem(5, ()), 3)
