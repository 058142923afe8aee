"""Command line interface entry points for cd-lattice."""

from .main import app, main

__all__ = ["app", "main"]
