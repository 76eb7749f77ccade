"""Regular graph generators, named fixtures and exhaustive enumeration."""
