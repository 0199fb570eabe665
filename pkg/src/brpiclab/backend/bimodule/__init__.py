"""Invertible Vec_G-bimodule categories."""
