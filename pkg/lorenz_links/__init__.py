# CHECKPOINT_1_PROJECT_SETUP
"""
Lorenz Links Package
====================
Builds Lorenz braids, T-link braids and diagonal grid diagrams from a Lorenz
vector, and checks with exact link invariants that all three describe the
same oriented link.
"""

__version__ = "0.1.0"

from lorenz_links.config import settings

__all__ = ["settings"]
