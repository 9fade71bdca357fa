"""In-process polynomial cache."""
