"""Belt distances and space-filling tests for zonotopes, in exact arithmetic."""

__version__ = "0.1.0"
