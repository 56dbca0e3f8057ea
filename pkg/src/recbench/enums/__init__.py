"""Exact enumeration engines for the sequence generators.

Submodules:

- transfer: generic transfer-matrix engine with catalytic variables
- machines: hand-built finite-state machines (digit arrays)
- walks: lattice-walk counting (stepset diagonals, orthant walks)
- perms: permutation-style dynamic programming
- arrays: direct formulas and small array counts
- kaprekar: the sorted-digit subtraction map and its cycles
- cautionary: sequences that look D-finite on short prefixes but are not
- conjectures: closed forms and rescaled recurrences checked against data
"""
