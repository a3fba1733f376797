"""Exact Witt-group and real cycle class computations on real curves and cellular varieties."""
