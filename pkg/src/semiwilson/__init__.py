"""Exact solver and cross-checker for f(xy) + mu(y) f(sigma(y)x) = 2 f(x) g(y) on finite semigroups."""

__version__ = "0.1.0"
