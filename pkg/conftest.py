"""Lets pytest import markovcalc from a source checkout."""
