"""Rendering of census tables, record streams and analysis reports."""
