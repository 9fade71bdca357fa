"""Counting formulas and their brute-force checks."""
