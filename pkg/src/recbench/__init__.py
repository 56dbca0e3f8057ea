"""recbench: exact-arithmetic workbench for linear recurrences with
polynomial coefficients — guessing engines, shift-operator algebra,
transfer-matrix enumeration, and OEIS b-file tooling."""

__version__ = "0.1.0"
