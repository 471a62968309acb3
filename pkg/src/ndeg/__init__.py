"""Realizability of neighborhood degree profiles."""

from __future__ import annotations

from .graphcore import Graph, GraphBuilder, Mode, Realization, profile_of, verify
from .profile import Profile, ProfileError, parse_profile

__all__ = ["Graph", "GraphBuilder", "Mode", "Profile", "ProfileError", "Realization",
           "parse_profile", "profile_of", "verify"]
__version__ = "0.1.0"
