"""Holomorphs, regular embeddings and Hopf-Galois structure counting."""

__version__ = "0.1.0"
