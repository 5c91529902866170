"""Group-graded associative algebras over the rationals and their graded polynomial identities."""

__version__ = "0.1.0"
