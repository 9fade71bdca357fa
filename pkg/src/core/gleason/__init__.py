"""Gleason polynomials, real hyperbolic centers and kneading data."""
