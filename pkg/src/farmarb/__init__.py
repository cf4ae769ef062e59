"""Arbitrage chains in the four-good FARM barter economy."""

__version__ = "0.1.0"
