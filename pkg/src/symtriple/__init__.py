"""Exact constructions and checks for real simple symplectic triple systems."""

from .sts import ModelLabel, TripleSystem, Z4Grading, check_axioms, inder_span

__all__ = ["ModelLabel", "TripleSystem", "Z4Grading", "check_axioms", "inder_span"]
