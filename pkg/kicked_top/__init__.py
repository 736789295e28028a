"""Kicked top: quantum map, classical limit and P-representation moment propagators."""

__version__ = '0.1.0'
