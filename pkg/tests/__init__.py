"""Tests for gleason-bijections."""
