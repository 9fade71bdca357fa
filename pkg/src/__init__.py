"""Bijections between real hyperbolic centers, Gleason factors mod 2 and necklaces."""
__version__ = "0.1.0"
