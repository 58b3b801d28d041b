import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import dense

from subsys_encode import (
    CheckMatrix,
    PauliWord,
    multiply,
    parse_pauli,
    symplectic_product,
)
from subsys_encode.pauli import MalformedInputError, pauli_matrix, to_symplectic

words = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.sampled_from(["", "-", "+i", "-i"]), st.text("IXYZ", min_size=n, max_size=n))
).map(lambda t: t[0] + t[1])


@pytest.mark.parametrize("text", ["XYZ", "-IYI", "+iZZ", "-iYXY", "+XI"])
def test_parsed_word_matches_dense_matrix(text):
    assert np.allclose(pauli_matrix(parse_pauli(text)), dense(text))


def test_y_is_hermitian_and_xz_is_not():
    y = parse_pauli("Y")
    assert y.x == (1,) and y.z == (1,) and y.is_hermitian()
    # raw X@Z has the same bits but phase 0: it is -iY
    xz = PauliWord(1, 0, (1,), (1,))
    assert str(xz) == "-iY"


@given(words)
def test_string_round_trip(text):
    w = parse_pauli(text)
    again = parse_pauli(str(w))
    assert again == w or np.allclose(pauli_matrix(again), pauli_matrix(w))


@given(st.data())
def test_product_matches_dense_product(data):
    n = data.draw(st.integers(1, 4))
    a = data.draw(st.sampled_from(["", "-", "+i", "-i"])) + data.draw(st.text("IXYZ", min_size=n, max_size=n))
    b = data.draw(st.sampled_from(["", "-", "+i", "-i"])) + data.draw(st.text("IXYZ", min_size=n, max_size=n))
    assert np.allclose(pauli_matrix(multiply(parse_pauli(a), parse_pauli(b))), dense(a) @ dense(b))


@given(st.data())
def test_symplectic_product_is_commutation(data):
    n = data.draw(st.integers(1, 4))
    a = data.draw(st.text("IXYZ", min_size=n, max_size=n))
    b = data.draw(st.text("IXYZ", min_size=n, max_size=n))
    da, db = dense(a), dense(b)
    commute = np.allclose(da @ db, db @ da)
    assert symplectic_product(parse_pauli(a), parse_pauli(b)) == (0 if commute else 1)


@pytest.mark.parametrize("bad", ["", "XQZ", "--X", "iiX", "+", "x"])
def test_malformed_strings_rejected(bad):
    with pytest.raises(MalformedInputError):
        parse_pauli(bad)


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        multiply(parse_pauli("XX"), parse_pauli("X"))


def test_symplectic_vector_layout():
    assert to_symplectic(parse_pauli("XYZ")).tolist() == [1, 1, 0, 0, 1, 1]


def test_check_matrix_from_strings():
    cm = CheckMatrix.from_strings(["XXXX", "ZZZZ"])
    assert cm.m == 2
    assert cm.x_block().tolist() == [[1, 1, 1, 1], [0, 0, 0, 0]]
