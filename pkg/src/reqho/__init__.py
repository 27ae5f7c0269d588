"""Rationally extended harmonic oscillators: exact construction and ladder operators."""

__version__ = "0.1.0"
