"""Stitch towed-video transect frames into georeferenced mosaic overlays."""

__version__ = "0.1.0"
