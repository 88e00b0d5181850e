"""Theorem suites: hexagons, octagons, symmetry, nets, duals and degenerations."""

from .base import StatementResult

__all__ = ["StatementResult"]
