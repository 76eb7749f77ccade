"""Construction of maximum matchings whose unsaturated vertices share no neighbor."""
