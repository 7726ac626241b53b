"""gfkit – exact rational and algebraic generating functions."""

__version__ = "0.1.0"
