"""Core mathematics: words, bijections, finite fields, Gleason polynomials, counting."""
