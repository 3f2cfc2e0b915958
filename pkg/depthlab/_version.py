"""Version of depthlab."""

__version__ = "0.3.0"
