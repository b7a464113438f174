"""MarkovCalc - Markov's derivative for interval functions, computed exactly in Q(sqrt 2)."""

__version__ = "0.1.0"
