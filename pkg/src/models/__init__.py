"""Data models for graphs, matchings, decompositions and reports."""
