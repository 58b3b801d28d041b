"""Encoding-circuit synthesis for stabilizer and subsystem codes."""

from .circuit import Circuit, Gate, format_circuit, gate_report, parse_circuit
from .codes import (
    LogicalOperators,
    StabilizerCode,
    StandardForm,
    SubsystemCode,
    ValidationError,
    augmented_stabilizer,
    canonicalize_gauge,
    check_logical_operators,
    classify_generators,
    derive_logical_operators,
    standard_form,
    subsystem_logicals,
)
from .conjugation import (
    circuit_logicals,
    conjugation_transcript,
    synthesize_conjugation_encoder,
)
from .estimator import SubsystemEncoder, check_code
from .pauli import CheckMatrix, PauliWord, multiply, parse_pauli, symplectic_product
from .simulator import (
    StateVector,
    apply_circuit,
    apply_gate,
    apply_pauli,
    is_stabilized,
    stabilizer_projector_apply,
)
from .specfile import bundled_spec, bundled_specs, load_code_spec, parse_code_spec
from .standard_synth import (
    elide_redundant_z,
    synthesize_stabilizer_encoder,
    synthesize_subsystem_m1,
    synthesize_subsystem_m2,
)
from .verify import (
    cross_method_consistency,
    gauge_robustness_check,
    logical_zero_check,
    verify_encoder,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "Gate",
    "format_circuit",
    "gate_report",
    "parse_circuit",
    "LogicalOperators",
    "StabilizerCode",
    "StandardForm",
    "SubsystemCode",
    "ValidationError",
    "augmented_stabilizer",
    "canonicalize_gauge",
    "check_logical_operators",
    "classify_generators",
    "derive_logical_operators",
    "standard_form",
    "subsystem_logicals",
    "circuit_logicals",
    "conjugation_transcript",
    "synthesize_conjugation_encoder",
    "SubsystemEncoder",
    "check_code",
    "CheckMatrix",
    "PauliWord",
    "multiply",
    "parse_pauli",
    "symplectic_product",
    "StateVector",
    "apply_circuit",
    "apply_gate",
    "apply_pauli",
    "is_stabilized",
    "stabilizer_projector_apply",
    "bundled_spec",
    "bundled_specs",
    "load_code_spec",
    "parse_code_spec",
    "elide_redundant_z",
    "synthesize_stabilizer_encoder",
    "synthesize_subsystem_m1",
    "synthesize_subsystem_m2",
    "cross_method_consistency",
    "gauge_robustness_check",
    "logical_zero_check",
    "verify_encoder",
    "__version__",
]
