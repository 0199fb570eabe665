"""Lagrangian subcategories of the center of Vec_G and their group labels."""
