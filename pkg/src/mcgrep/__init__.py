"""Exact verification of the small quantum group u_zeta(sl2), its
mapping class group representations and their homological model."""

__version__ = "0.1.0"
