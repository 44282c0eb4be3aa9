"""Path-space metrics and dyadic process approximants."""

__version__ = "0.1.0"
