"""Exact Hecke-bimodule model of the finite-field theta correspondence."""

__version__ = "0.1.0"
