"""brpiclab's diagnostics module."""
