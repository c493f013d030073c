"""Exact computations with finite-dimensional Hopf algebras and their partial
(co)actions: verification, globalization, smash products, and duality."""

__version__ = "0.1.0"
