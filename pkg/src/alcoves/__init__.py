"""Finite root systems, ideals of the positive root poset, affine Weyl alcoves,
coroot-lattice simplex bijections, and ideal classification."""

from .rootsystem import RootSystem, build_root_system, parse_type

__all__ = ["RootSystem", "build_root_system", "parse_type"]
__version__ = "1.0.0"
