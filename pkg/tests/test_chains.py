"""Chain arithmetic, boundary, and live-id pivot behaviour."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zigzagrep.chains import Chain, ComplexState, Simplex, boundary, chain_add, pivot
from zigzagrep.filtration import complex_at, parse_filtration


def C(*simplices):
    return Chain(simplices)


class TestSimplex:
    def test_identity_is_vertex_tuple(self):
        assert Simplex((0, 1)) == Simplex([0, 1]) == (0, 1)
        assert hash(Simplex((0, 1))) == hash((0, 1))

    def test_dimension(self):
        assert Simplex((3,)).dimension == 0
        assert Simplex((0, 1, 2)).dimension == 2

    @pytest.mark.parametrize("bad", [(), (1, 0), (2, 2), (-1, 0), (0.5,)])
    def test_rejects_malformed(self, bad):
        with pytest.raises((ValueError, TypeError)):
            Simplex(bad)

    def test_faces(self):
        assert set(Simplex((0, 1, 2)).faces()) == {(0, 1), (0, 2), (1, 2)}
        assert list(Simplex((4,)).faces()) == []


class TestChainAdd:
    def test_cancellation(self):
        # {u+v} + {v+w} -> {u+w}
        assert C((0,), (1,)) + C((1,), (2,)) == C((0,), (2,))

    def test_self_inverse(self):
        c = C((0, 1), (1, 2))
        assert c + c == Chain()

    def test_symmetric_difference(self):
        # {uv,uw} + {uw,vw} -> {uv,vw}
        assert C((0, 1), (0, 2)) + C((0, 2), (1, 2)) == C((0, 1), (1, 2))

    def test_empty_is_identity_at_any_degree(self):
        for c in (C((0,)), C((0, 1)), Chain()):
            assert c + Chain() == c
            assert Chain() + c == c

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            chain_add(C((0,)), C((0, 1)))

    def test_mixed_dimension_chain_rejected(self):
        with pytest.raises(ValueError):
            Chain([(0,), (0, 1)])


def chains(max_vertex=5, dim=1):
    universe = [Simplex(c) for c in itertools.combinations(range(max_vertex + 1), dim + 1)]
    return st.sets(st.sampled_from(universe)).map(Chain)


class TestChainProperties:
    @given(chains(), chains(), chains())
    def test_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(chains(), chains())
    def test_commutative(self, a, b):
        assert a + b == b + a

    @given(chains(dim=2))
    def test_boundary_squared_is_zero(self, c):
        assert boundary(boundary(c)) == Chain()

    @given(chains(dim=2), chains(dim=2))
    def test_boundary_linear(self, a, b):
        assert boundary(a + b) == boundary(a) + boundary(b)


class TestBoundary:
    def test_edge(self):
        assert boundary(C((0, 1))) == C((0,), (1,))

    def test_triangle(self):
        assert boundary(C((0, 1, 2))) == C((0, 1), (0, 2), (1, 2))

    def test_vertex_and_empty(self):
        assert boundary(C((0,))) == Chain()
        assert boundary(Chain()) == Chain()


class TestComplexState:
    def test_insert_requires_faces(self):
        state = ComplexState()
        with pytest.raises(ValueError):
            state.insert(Simplex((0, 1)), 0)

    def test_ids_strictly_increase(self):
        state = ComplexState()
        state.insert(Simplex((0,)), 3)
        with pytest.raises(ValueError):
            state.insert(Simplex((1,)), 3)

    def test_delete_guards_cofaces_and_presence(self):
        state = ComplexState()
        state.insert(Simplex((0,)), 0)
        state.insert(Simplex((1,)), 1)
        state.insert(Simplex((0, 1)), 2)
        with pytest.raises(ValueError):
            state.delete(Simplex((0,)))
        state.delete(Simplex((0, 1)))
        state.delete(Simplex((0,)))
        with pytest.raises(ValueError):
            state.delete(Simplex((0,)))


class TestPivot:
    def test_max_id(self):
        state = ComplexState()
        state.insert(Simplex((0,)), 1)
        state.insert(Simplex((1,)), 2)
        assert pivot(C((0,), (1,)), state) == 2

    def test_empty_is_none(self):
        assert pivot(Chain(), ComplexState()) is None

    def test_reinserted_simplex_uses_fresh_id(self):
        # 10-step replay in which edge (0,1) is deleted and re-inserted at arrow 9.
        f = parse_filtration(
            "i 0\ni 1\ni 0 1\nd 0 1\ni 2\ni 0 2\nd 0 2\nd 2\ni 2\ni 0 1\n"
        )
        assert complex_at(f, 3).id_of(Simplex((0, 1))) == 2
        state = complex_at(f, 10)
        assert pivot(C((0, 1)), state) == 9

    def test_dead_simplex_rejected(self):
        state = ComplexState()
        state.insert(Simplex((0,)), 0)
        with pytest.raises(ValueError):
            pivot(C((1,)), state)

    @given(chains(dim=1), chains(dim=1))
    def test_pivot_of_sum(self, a, b):
        state = ComplexState()
        for v in range(6):
            state.insert(Simplex((v,)), v)
        nxt = 6
        for s in sorted(set(a.simplices | b.simplices)):
            state.insert(s, nxt)
            nxt += 1
        pa, pb, ps = pivot(a, state), pivot(b, state), pivot(a + b, state)
        tops = [p for p in (pa, pb) if p is not None]
        if not tops:
            assert ps is None
        elif ps is None:
            assert pa == pb
        else:
            assert ps <= max(tops)
            # strict drop exactly when the max-pivot simplices coincide
            assert (ps < max(tops)) == (pa == pb)
