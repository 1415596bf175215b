"""Exact enumeration of words avoiding generalized multipermutation patterns."""
__version__ = "0.1.0"
