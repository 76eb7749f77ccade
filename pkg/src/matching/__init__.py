"""Maximum matching algorithms."""
