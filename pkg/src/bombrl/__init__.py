"""bombrl: deterministic bomber grid arena with a learning harness."""

__version__ = "0.1.0"
