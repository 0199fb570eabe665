"""Finite groups as multiplication tables: builders, subgroups, automorphisms and Goursat triples."""
