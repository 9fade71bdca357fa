"""Polynomials over GF(2) and the fields GF(2^n)."""
