"""stb: exact-arithmetic tools for small finite classical groups.

Builds orthogonal and symplectic groups over GF(q) by explicit enumeration,
constructs their maximal tori, and computes Steinberg characters, their
restrictions to codimension-one orthogonal subgroups, and the associated
degree-q^m virtual character, verifying all decompositions by independent
brute force.
"""

__version__ = "0.1.0"
