"""End-to-end tables and verification runs."""
