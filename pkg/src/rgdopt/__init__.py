"""Exact search for A- and D-best regular graph designs."""

__version__ = "0.1.0"
