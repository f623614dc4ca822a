"""Exact formal group law computations over GF(2) and a mechanical derivation of the dual Steenrod algebra."""

__version__ = "0.1.0"
