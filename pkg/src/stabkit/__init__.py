"""stabkit: exact Alexander-module kernels of slice discs and distance bounds."""

__version__ = "0.1.0"
