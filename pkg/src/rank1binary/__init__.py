"""Computational engine for binary-action analysis of rank-1 almost simple groups."""

__version__ = "0.1.0"
