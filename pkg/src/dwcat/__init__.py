"""Categorified finite gauge theory with exact arithmetic."""

__version__ = "0.1.0"
