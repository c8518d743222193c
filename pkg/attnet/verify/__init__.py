"""Verification suite: core, convexity and the allocation axioms."""

from attnet.verify.axioms import axiom_check, independence_suite, uniqueness_reconstruction
from attnet.verify.convexity import convexity_check, monotonicity_check, superadditivity_check
from attnet.verify.core import core_check
from attnet.verify.models import (
    Axiom,
    AxiomReport,
    AxiomWitness,
    CoreMethod,
    CoreReport,
    CoreViolation,
    IndependenceCase,
    IndependenceReport,
    PropertyReport,
    PropertyViolation,
)

__all__ = [
    "Axiom",
    "AxiomReport",
    "AxiomWitness",
    "CoreMethod",
    "CoreReport",
    "CoreViolation",
    "IndependenceCase",
    "IndependenceReport",
    "PropertyReport",
    "PropertyViolation",
    "axiom_check",
    "convexity_check",
    "core_check",
    "independence_suite",
    "monotonicity_check",
    "superadditivity_check",
    "uniqueness_reconstruction",
]
