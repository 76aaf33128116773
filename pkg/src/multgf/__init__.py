"""Rational-or-transcendental classification of generating series of
multiplicative functions, with the exact algebra it needs."""

__version__ = "0.1.0"
