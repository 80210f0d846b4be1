"""Heat content asymptotics for first-order boundary systems."""

from ._core import ConfigError, coefficients, compare, simulate, verify, version

__all__ = ["ConfigError", "coefficients", "compare", "simulate", "verify", "version"]
__version__ = version()
