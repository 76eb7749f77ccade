"""Gallai-Edmonds decomposition and contraction."""
