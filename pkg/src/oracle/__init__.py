"""Brute-force reference and scan harness."""
