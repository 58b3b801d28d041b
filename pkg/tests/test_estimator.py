import numpy as np
import pytest
from sklearn.base import clone

from subsys_encode import (
    StabilizerCode,
    SubsystemEncoder,
    ValidationError,
    bundled_spec,
)


def test_params_round_trip():
    est = SubsystemEncoder(method="conj", augment="gauge_x")
    assert est.get_params() == {"method": "conj", "augment": "gauge_x", "gauge": "zero", "elide": True}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and not hasattr(twin, "circuit_")


@pytest.mark.parametrize("method", ["std1", "std2", "conj"])
def test_fit_transform_gives_normalized_code_states(method):
    est = SubsystemEncoder(method=method).fit(bundled_spec("four_qubit_b"))
    out = est.transform([[0], [1]])
    assert out.shape == (2, 16)
    assert np.allclose(np.linalg.norm(out, axis=1), 1)
    assert abs(np.vdot(out[0], out[1])) < 1e-9
    assert est.verify().passed


def test_transcript_only_for_conj():
    assert SubsystemEncoder("std1").fit(bundled_spec("five_qubit")).transcript_ is None
    assert SubsystemEncoder("conj").fit(bundled_spec("five_qubit")).transcript_ is not None


def test_accepts_stabilizer_code():
    code = StabilizerCode.from_strings(["ZZI", "IZZ"])
    est = SubsystemEncoder().fit(code)
    assert est.transform([[1]])[0, 7] != 0


def test_input_checks():
    est = SubsystemEncoder().fit(bundled_spec("five_qubit"))
    with pytest.raises(ValidationError):
        est.transform([[0, 1]])
    with pytest.raises(ValidationError):
        est.transform([[2]])
    with pytest.raises(ValueError):
        SubsystemEncoder(method="magic").fit(bundled_spec("five_qubit"))


def test_unfitted():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        SubsystemEncoder().transform([[0]])
