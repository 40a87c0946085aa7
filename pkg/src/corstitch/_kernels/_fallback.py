"""NumPy reference implementations of the hot correlation kernels.

These are the semantics of record: the compiled extension in
``_native.pyx`` must return identical results on identical inputs.
"""

from __future__ import annotations

import numpy as np

BACKEND = "fallback"

# Relative regularizer for the phase-correlation denominator.
REL_EPS = 1e-12


def phase_normalize(spectrum: np.ndarray) -> tuple[np.ndarray, float]:
    """Normalize a cross-spectrum to unit magnitude per frequency bin.

    Returns ``(normalized, peak_magnitude)``.  A ``peak_magnitude`` of zero
    means the spectrum is identically zero; the normalized array is then all
    zeros and the caller decides how to treat the degenerate case.
    """
    spectrum = np.ascontiguousarray(spectrum, dtype=np.complex128)
    magnitude = np.abs(spectrum)
    peak = float(magnitude.max()) if spectrum.size else 0.0
    if peak == 0.0:
        return np.zeros_like(spectrum), 0.0
    return spectrum / (magnitude + REL_EPS * peak), peak


def centered_peak(values: np.ndarray) -> tuple[int, int]:
    """Locate the global maximum of a centered correlation surface.

    ``values`` has its zero-shift bin at ``(h // 2, w // 2)``.  Ties are
    broken by smallest displacement magnitude, then smallest dy, then
    smallest dx.  Returns ``(dx, dy)``.
    """
    values = np.ascontiguousarray(values, dtype=np.float64)
    h, w = values.shape
    ys, xs = np.nonzero(values == values.max())
    dy = ys.astype(np.int64) - h // 2
    dx = xs.astype(np.int64) - w // 2
    order = np.lexsort((dx, dy, dx * dx + dy * dy))
    best = order[0]
    return int(dx[best]), int(dy[best])
