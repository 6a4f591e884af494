"""rgbt: R-/RGB-/eRGB-tiling verification engine for maximal planar graphs."""

__version__ = "0.1.0"
