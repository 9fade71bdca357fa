"""Binary words, symbolic dynamics and the combinatorial bijections."""
