"""Bordered Ozsvath-Szabo algebras, Sartori algebras, and the map between them."""
__version__ = "0.1.0"
