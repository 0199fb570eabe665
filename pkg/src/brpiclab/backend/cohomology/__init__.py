"""Cohomology of finite groups with coefficients in finite modules."""
