"""Bipartite matching and {P2, P3}-packing subroutines."""
