"""Scalar products of the supersymmetric eight-vertex model."""

__version__ = "0.1.0"
