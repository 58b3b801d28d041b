import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from oracles import gf2_rank_brute, span

from subsys_encode import gf2

small = st.tuples(st.integers(1, 6), st.integers(1, 7)).flatmap(
    lambda s: arrays(np.uint8, s, elements=st.integers(0, 1))
)


@given(small)
def test_rank_matches_subset_enumeration(a):
    assert gf2.rank(a) == gf2_rank_brute(a)


@given(small, st.data())
def test_solve_agrees_with_span_membership(a, data):
    b = np.array(data.draw(st.lists(st.integers(0, 1), min_size=a.shape[0], max_size=a.shape[0])), dtype=np.uint8)
    x = gf2.solve(a, b)
    reachable = tuple(b) in span(a.T)
    assert (x is not None) == reachable
    if x is not None:
        assert np.array_equal(a.astype(int) @ x % 2, b)


@given(st.integers(1, 5).flatmap(lambda n: arrays(np.uint8, (n, n), elements=st.integers(0, 1))))
def test_inverse(a):
    inv = gf2.inverse(a)
    if gf2_rank_brute(a) < a.shape[0]:
        assert inv is None
    else:
        assert np.array_equal(a.astype(int) @ inv % 2, np.eye(a.shape[0], dtype=int))


def test_same_span_ignores_row_operations():
    a = np.array([[1, 0, 1], [0, 1, 1]])
    b = np.array([[1, 1, 0], [0, 1, 1]])
    assert gf2.same_span(a, b)
    assert not gf2.same_span(a, np.array([[1, 0, 0], [0, 1, 1]]))
