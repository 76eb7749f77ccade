"""Configuration loader module."""
