"""regmatch - maximum matchings of regular multigraphs whose bare vertices share no neighbor."""

__version__ = "0.1.0"
