"""Digamma function and the Euler-Mascheroni constant.

The image-charge potential needs the digamma (psi) function only on the
positive real axis, so that is all this module provides.  The construction
is the classic one: shift the argument upward with the recurrence
psi(x+1) = psi(x) + 1/x until it clears a threshold, then evaluate the
asymptotic (de Moivre / Stirling-type) series in 1/x**2.
"""

import numpy as np

#: Euler-Mascheroni constant, gamma = lim (H_n - ln n).
EULER_GAMMA = 0.5772156649015328606065120900824024

# Shift threshold for the upward recurrence.  With Bernoulli coefficients
# through 1/x**14 the truncation error at x = 6 is ~2e-13 relative.
_SHIFT = 6.0


def digamma(x):
    """Digamma function psi(x) = Gamma'(x)/Gamma(x) for x > 0.

    Accepts a scalar or an ndarray and returns the same shape.  Accuracy is
    ~1e-13 (relative for x >= 1, absolute for moderate x < 1).

    Raises ValueError for nonpositive or non-finite arguments; the poles at
    x = 0, -1, -2, ... are called out explicitly.  Negative non-pole
    arguments are not supported: the potential only ever evaluates psi
    inside (0, 1), and the reflection formula is deliberately out of scope.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)

    if not np.all(np.isfinite(arr)):
        raise ValueError("digamma requires finite arguments")
    if np.any(arr <= 0.0):
        bad = float(arr[arr <= 0.0][0])
        if abs(bad - round(bad)) < 1e-12:
            raise ValueError(f"digamma pole at x = {round(bad)}")
        raise ValueError(f"digamma argument must be > 0, got {bad}")

    w = arr.copy()
    acc = np.zeros_like(w)
    # psi(x) = psi(x + n) - sum_{k=0}^{n-1} 1/(x + k); at most ceil(_SHIFT)+1
    # passes since every element grows by 1 per pass.
    while True:
        low = w < _SHIFT
        if not low.any():
            break
        acc[low] -= 1.0 / w[low]
        w[low] += 1.0

    # psi(w) ~ ln w - 1/(2w) - sum_k B_{2k} / (2k w^{2k}), truncated at 2k = 14.
    u = 1.0 / (w * w)
    tail = u * (1.0 / 12.0 - u * (1.0 / 120.0 - u * (1.0 / 252.0 - u * (
        1.0 / 240.0 - u * (1.0 / 132.0 - u * (691.0 / 32760.0 - u / 12.0))))))
    out = np.log(w) - 0.5 / w - tail + acc
    return float(out[0]) if scalar else out
