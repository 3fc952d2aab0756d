"""Exact multiplier-ideal computations for polynomial domain boundaries.

The package computes, over the Gaussian rationals, the increasing chain of
multiplier ideals attached to a polynomial defining function: generalized
Levi determinants via exact exterior algebra, a certified real-radical
closure at every step, and deterministic machine-readable traces.
"""

from .forms import (Form, d_antiholo, d_antiholo_form, d_holo, d_holo_form,
                    ddbar, levi_determinants, wedge_many, wedge_power)
from .ideals import (ClosureCaps, ClosureResult, Ideal, RadicalCertificate,
                     contains, contains_unit_at, groebner,
                     groebner_with_representation, ideal_equal, is_subideal,
                     member_cofactors, normal_form, radical_contains,
                     real_radical_closure, sos_split, verify_certificate)
from .kohn import (EngineCaps, KohnTrace, PersistenceReport, ProblemSpec,
                   ProblemValidationError, StepRecord, TraceStatus,
                   TupleRecord, VarietyReport, persistence_check, run, step1,
                   step_next, variety_sample)
from .parser import ParseError, parse_expression, parse_scalar
from .poly import GaussianRational, Point, Poly
from .trace_io import (TRACE_VERSION, build_document, emit_human,
                       emit_machine, emit_report, load_problem, run_problem)

__all__ = [
    "ClosureCaps", "ClosureResult", "EngineCaps", "Form", "GaussianRational",
    "Ideal", "KohnTrace", "ParseError", "PersistenceReport", "Point", "Poly",
    "ProblemSpec", "ProblemValidationError", "RadicalCertificate",
    "StepRecord", "TRACE_VERSION", "TraceStatus", "TupleRecord",
    "VarietyReport", "build_document", "contains", "contains_unit_at",
    "d_antiholo", "d_antiholo_form", "d_holo", "d_holo_form", "ddbar",
    "emit_human", "emit_machine", "emit_report", "groebner",
    "groebner_with_representation", "ideal_equal", "is_subideal",
    "levi_determinants", "load_problem", "member_cofactors", "normal_form",
    "parse_expression", "parse_scalar", "persistence_check",
    "radical_contains", "real_radical_closure", "run", "run_problem",
    "sos_split", "step1", "step_next", "variety_sample", "verify_certificate",
    "wedge_many", "wedge_power",
]

__version__ = "0.1.0"
