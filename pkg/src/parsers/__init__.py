"""Parsers and serializers for graph and matching text formats."""

from .graph6 import parse_graph6, serialize_graph6
from .loader import GraphLoader
from .mel import parse_matching, parse_mel, serialize_matching, serialize_mel

__all__ = [
    "GraphLoader",
    "parse_graph6",
    "parse_matching",
    "parse_mel",
    "serialize_graph6",
    "serialize_matching",
    "serialize_mel",
]
