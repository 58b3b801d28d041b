"""scikit-learn style front end: ``fit`` synthesizes, ``transform`` encodes."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .codes import LogicalOperators, StabilizerCode, SubsystemCode, ValidationError
from .conjugation import circuit_logicals, conjugation_transcript
from .specfile import load_code_spec
from .standard_synth import synthesize_subsystem_m1, synthesize_subsystem_m2
from .verify import encode, verify_encoder

__all__ = ["SubsystemEncoder", "check_code"]

METHODS = ("std1", "std2", "conj")


def check_code(code) -> SubsystemCode:
    """Accept a SubsystemCode, a StabilizerCode or a spec-file path; validate it."""
    if isinstance(code, SubsystemCode):
        return code.validate()
    if isinstance(code, StabilizerCode):
        return SubsystemCode.from_stabilizer_code(code.validate()).validate()
    if isinstance(code, str) or hasattr(code, "__fspath__"):
        return load_code_spec(code)
    raise TypeError(f"cannot interpret {type(code).__name__} as a code")


class SubsystemEncoder(TransformerMixin, BaseEstimator):
    """Synthesize an encoder for a code and apply it to message bit rows.

    Parameters
    ----------
    method : {"std1", "std2", "conj"}
    augment : {"gauge_z", "gauge_x"}
        Which gauge half joins the stabilizer for the standard-form methods.
    gauge : {"zero", "seeded"}
        Gauge handling for ``std1``.
    elide : bool
        Remove Z-type gates acting on wires still in |0>.
    """

    def __init__(self, method="std1", augment="gauge_z", gauge="zero", elide=True):
        self.method = method
        self.augment = augment
        self.gauge = gauge
        self.elide = elide

    def fit(self, code, y=None):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        code = check_code(code)
        self.transcript_ = None
        if self.method == "std1":
            circuit = synthesize_subsystem_m1(code, self.augment, self.gauge, self.elide)
        elif self.method == "std2":
            circuit = synthesize_subsystem_m2(code, self.augment, self.elide)
        else:
            result = conjugation_transcript(code, elide_trivial_h=self.elide)
            circuit = result.circuit
            self.transcript_ = result
        xs, zs = circuit_logicals(circuit)
        self.code_ = code
        self.circuit_ = circuit
        self.logical_ = LogicalOperators(tuple(xs), tuple(zs))
        self.n_features_in_ = code.k
        return self

    def transform(self, X):
        """Encoded state vectors, one row of ``2**n`` amplitudes per message row."""
        check_is_fitted(self, "circuit_")
        X = check_array(X, dtype=np.int64, ensure_min_features=0)
        if X.shape[1] != self.code_.k:
            raise ValidationError(f"expected {self.code_.k} message bits per row, got {X.shape[1]}")
        if ((X != 0) & (X != 1)).any():
            raise ValidationError("message entries must be bits")
        return np.array([encode(self.circuit_, row.tolist()).amplitudes for row in X])

    def verify(self, gauge="zero"):
        check_is_fitted(self, "circuit_")
        return verify_encoder(self.code_, self.logical_, self.circuit_, gauge)
