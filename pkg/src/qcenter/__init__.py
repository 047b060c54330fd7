"""Exact computations around quantized enveloping algebras: Drinfeld pairing,
Harish-Chandra center, Weyl modules and characters, induction Euler characters."""

__version__ = "0.1.0"
