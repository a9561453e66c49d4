"""Anytime CS - time-uniform confidence sequences for bounded means."""

__version__ = "0.1.0"
