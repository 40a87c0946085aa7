"""Exception types raised across the pipeline."""


class CorstitchError(Exception):
    """Base class for all pipeline errors."""


class FrameSequenceError(CorstitchError):
    """Frame directory is empty, non-contiguous, or holds unreadable files."""


class TrackParseError(CorstitchError):
    """GPS CSV is missing columns or contains invalid rows."""


class DegeneratePairError(CorstitchError):
    """Both strips carry no usable signal (constant intensity)."""


class StitchError(CorstitchError):
    """Stitching pass received unusable input or an invalid shift."""


class GeorefError(CorstitchError):
    """Time outside GPS coverage, stationary segment, or polar degeneracy."""


class KmzError(CorstitchError):
    """KML/KMZ serialization failed or inputs are inconsistent."""


class ManifestError(CorstitchError):
    """Mosaic manifest is malformed or has an unsupported version."""


class SynthError(CorstitchError):
    """Synthetic survey parameters are out of range."""
