"""Tests for walk generating functions: transfer matrix and cycle collections."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfkit.application.fixtures import get_fixture
from gfkit.domain.digraph import (
    VIENNOT_MAX_VERTICES,
    WeightedDigraph,
    elementary_cycles,
    simple_paths,
    transfer_gf,
    viennot_gf,
    viennot_terms,
)
from gfkit.domain.errors import ComputationError, GuardExceededError
from gfkit.domain.expressions import parse_polynomial
from gfkit.domain.linalg import det_bareiss
from gfkit.domain.ratfun import RatFun, ratfun_expand

DET = "1 - (3 + x)*t + (1 + 3*x)*t^2 - 2*x*t^3 + (x - y)*t^4"


@pytest.fixture
def five_vertex():
    return get_fixture("five_vertex", "digraph")


def walk_counts(g: WeightedDigraph, start: int, targets: list[int], n: int) -> list[int]:
    current = {start: 1}
    out = []
    for _ in range(n + 1):
        out.append(sum(current.get(j, 0) for j in targets))
        nxt: dict[int, int] = {}
        for v, count in current.items():
            for d, w in g.successors(v):
                nxt[d] = nxt.get(d, 0) + count * int(w.scalar())
        current = nxt
    return out


digraphs = st.integers(min_value=1, max_value=5).flatmap(
    lambda p: st.tuples(
        st.just(p),
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=p),
                st.integers(min_value=1, max_value=p),
                st.integers(min_value=1, max_value=2),
            ),
            max_size=10,
        ),
    )
).map(lambda pe: WeightedDigraph.from_edges(pe[0], pe[1]))


# ---------------------------------------------------------------------------
# Graph model
# ---------------------------------------------------------------------------
class TestWeightedDigraph:
    def test_parallel_edges_merge(self):
        g = WeightedDigraph.from_edges(2, [(1, 2, 1), (1, 2, 2)])
        assert g.edges == ((1, 2, parse_polynomial("3")),)

    def test_cancelling_weights_drop_edge(self):
        g = WeightedDigraph.from_edges(2, [(1, 2, 1), (1, 2, -1)])
        assert g.edges == ()

    def test_vertex_out_of_range(self):
        with pytest.raises(ComputationError):
            WeightedDigraph.from_edges(2, [(1, 3, 1)])

    def test_targets_checked(self, five_vertex):
        with pytest.raises(ComputationError):
            five_vertex.check_targets(1, [])
        with pytest.raises(ComputationError):
            five_vertex.check_targets(1, [6])

    def test_kernel_determinant(self, five_vertex):
        assert det_bareiss(five_vertex.kernel_matrix()) == parse_polynomial(DET)

    def test_to_dict(self):
        g = WeightedDigraph.from_edges(2, [(2, 1, parse_polynomial("x"))])
        assert g.to_dict() == {"vertices": 2, "edges": [{"from": 2, "to": 1, "weight": "x"}]}


# ---------------------------------------------------------------------------
# Walk generating functions
# ---------------------------------------------------------------------------
class TestTransfer:
    def test_five_vertex_targets(self, five_vertex):
        expected = RatFun.from_mpolys(parse_polynomial("t*(1 - t)^2*(1 + t - x*t)"), parse_polynomial(DET))
        assert transfer_gf(five_vertex, 1, [2, 3]) == expected

    def test_two_cycle(self):
        g = get_fixture("two_cycle", "digraph")
        assert transfer_gf(g, 1, [1]) == RatFun.parse("1/(1 - t^2)")

    def test_no_path(self):
        g = WeightedDigraph.from_edges(2, [(1, 1, 1)])
        assert transfer_gf(g, 1, [2]) == 0


class TestViennot:
    def test_five_vertex_numerators(self, five_vertex):
        den, nums = viennot_terms(five_vertex, 1, [2, 3])
        assert den == parse_polynomial(DET)
        assert nums[2] == parse_polynomial("t*(1 - t)^2*(1 - x*t)")
        assert nums[3] == parse_polynomial("t^2*(1 - t)^2")

    def test_agrees_with_transfer(self, five_vertex):
        assert viennot_gf(five_vertex, 1, [2, 3]) == transfer_gf(five_vertex, 1, [2, 3])

    def test_loops_only(self):
        g = WeightedDigraph.from_edges(3, [(1, 1, 1), (2, 2, 2), (3, 3, 1)])
        den, _ = viennot_terms(g, 1, [1])
        assert den == parse_polynomial("(1 - t)*(1 - 2*t)*(1 - t)")

    def test_vertex_guard(self):
        big = VIENNOT_MAX_VERTICES + 1
        g = WeightedDigraph.from_edges(big, [(k, k + 1, 1) for k in range(1, big)])
        with pytest.raises(GuardExceededError):
            viennot_terms(g, 1, [big])

    def test_elementary_cycles_listed_once(self):
        g = get_fixture("two_cycle", "digraph")
        cycles = elementary_cycles(g)
        assert [c for c, _ in cycles] == [(1, 2)]
        assert cycles[0][1] == parse_polynomial("t^2")

    def test_simple_paths(self, five_vertex):
        paths = [p for p, _ in simple_paths(five_vertex, 1, 3)]
        assert paths == [(1, 2, 3)]


class TestAgreement:
    @given(digraphs, st.data())
    @settings(max_examples=100, deadline=None)
    def test_methods_and_walk_counts_agree(self, g, data):
        start = data.draw(st.integers(min_value=1, max_value=g.vertices))
        targets = data.draw(st.lists(st.integers(min_value=1, max_value=g.vertices), min_size=1, max_size=3))
        gf = transfer_gf(g, start, targets)
        assert viennot_gf(g, start, targets) == gf
        assert list(ratfun_expand(gf, 8).coeffs) == walk_counts(g, start, sorted(set(targets)), 8)
