"""
Utilities
=========
Logging helpers shared across the package.
"""

from lorenz_links.utils.logger import get_logger, setup_logging

__all__ = ["get_logger", "setup_logging"]
