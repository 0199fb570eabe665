"""Helpers shared across the backend."""
