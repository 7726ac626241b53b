"""Application use-case implementations."""
