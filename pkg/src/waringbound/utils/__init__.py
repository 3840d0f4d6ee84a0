"""Utility modules for waringbound."""

from .logging import get_logger, setup_logging
from .parallel import ordered_map

__all__ = ["get_logger", "setup_logging", "ordered_map"]
