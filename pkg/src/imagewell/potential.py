"""Image-charge potential of an electron between two grounded conducting planes.

An electron at 0 < x < L between grounded planes at x = 0 and x = L induces
an infinite ladder of alternating image charges.  Pairing each positive
image with its neighbouring negative image keeps the sum absolutely
convergent, and the paired sums collapse to digamma functions, giving the
closed form (hartree units, lengths in Bohr radii)

    V(x) = [psi(a) + psi(1 - a) + 2*gamma] / (4*L),    a = x / L.

The factor 1/4 (rather than 1/2) is the energy of assembly of a charge with
its own images.  Three evaluation routes are provided: the closed digamma
form, the truncated pair series, and the first image generation alone.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .special_functions import EULER_GAMMA, digamma

_SERIES_CHUNK = 1_000_000


class PotentialForm(Enum):
    """Which of the three potential formulas to evaluate."""

    CLOSED_DIGAMMA = "closed_digamma"
    TRUNCATED_SERIES = "truncated_series"
    FIRST_IMAGE_ONLY = "first_image_only"


@dataclass(frozen=True)
class PotentialModel:
    """Potential formula plus its parameters (L and, for the series, n_terms)."""

    form: PotentialForm
    L: float
    n_terms: int | None = None

    def __post_init__(self):
        if self.L <= 0.0:
            raise ValueError(f"plane separation L must be > 0, got {self.L}")
        if self.form is PotentialForm.TRUNCATED_SERIES:
            if self.n_terms is None or self.n_terms < 1:
                raise ValueError("truncated series needs n_terms >= 1")

    def evaluate(self, x):
        if self.form is PotentialForm.CLOSED_DIGAMMA:
            return potential_closed(x, self.L)
        if self.form is PotentialForm.TRUNCATED_SERIES:
            return potential_series(x, self.L, self.n_terms)
        return potential_first_image(x, self.L)


def _ratio(x, L):
    """Validate 0 < x < L and return a = x/L (scalar or array)."""
    if L <= 0.0:
        raise ValueError(f"plane separation L must be > 0, got {L}")
    a = np.asarray(x, dtype=float) / L
    if np.any(a <= 0.0) or np.any(a >= 1.0):
        raise ValueError(f"position must lie strictly between the planes (0, {L})")
    return a


def potential_closed(x, L):
    """Closed digamma form of the image potential at 0 < x < L.

    Diverges to -inf at both planes and is symmetric about the midpoint,
    where it equals -ln(2)/L exactly.
    """
    a = _ratio(x, L)
    v = (digamma(a) + digamma(1.0 - a) + 2.0 * EULER_GAMMA) / (4.0 * L)
    return float(v) if np.isscalar(x) or np.ndim(x) == 0 else v


def potential_series(x, L, n_terms):
    """Truncated image-pair series approximation of the closed form.

    ``n_terms`` counts the paired summands of the image ladder, taken
    symmetrically outward: terms alternate between the left-going and
    right-going image pairs (left side first when n_terms is odd), so
    n_terms = 2K keeps K pairs on each side:

        V_K = (1/4L) [ -1/a + sum_{n<=K} (1/n - 1/(n-a))
                              + sum_{n<=K} (1/n - 1/(n+a)) ].

    The -1/a term is the primary image, always included.  Converges to
    potential_closed as n_terms -> inf, with error ~ 1/n_terms**2.
    """
    a = float(_ratio(x, L))
    n_terms = int(n_terms)
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    k_left = (n_terms + 1) // 2
    k_right = n_terms // 2
    total = -1.0 / a
    for lo in range(1, k_left + 1, _SERIES_CHUNK):
        n = np.arange(lo, min(lo + _SERIES_CHUNK - 1, k_left) + 1, dtype=float)
        total += np.sum(1.0 / n - 1.0 / (n - a))
    for lo in range(1, k_right + 1, _SERIES_CHUNK):
        n = np.arange(lo, min(lo + _SERIES_CHUNK - 1, k_right) + 1, dtype=float)
        total += np.sum(1.0 / n - 1.0 / (n + a))
    return total / (4.0 * L)


def potential_first_image(x, L):
    """Potential from the first generation of images only: (1/4L)(-1/a - 1/(1-a)).

    Lies strictly below the closed form everywhere; the farther image
    generations mostly add the screening constant 2*gamma/(4L).
    """
    a = _ratio(x, L)
    v = (-1.0 / a - 1.0 / (1.0 - a)) / (4.0 * L)
    return float(v) if np.isscalar(x) or np.ndim(x) == 0 else v


def potential_closed_centered(x, L):
    """Closed form on the symmetric interval (-L/2, L/2), i.e. a = x/L + 1/2."""
    if L <= 0.0:
        raise ValueError(f"plane separation L must be > 0, got {L}")
    a = np.asarray(x, dtype=float) / L + 0.5
    if np.any(a <= 0.0) or np.any(a >= 1.0):
        raise ValueError(f"position must lie strictly inside (-{L / 2}, {L / 2})")
    v = (digamma(a) + digamma(1.0 - a) + 2.0 * EULER_GAMMA) / (4.0 * L)
    return float(v) if np.isscalar(x) or np.ndim(x) == 0 else v


@dataclass(frozen=True)
class ConvergenceTable:
    """Series values at increasing term counts next to the closed-form result."""

    x: float
    L: float
    rows: tuple[tuple[int, float], ...]
    closed_form: float

    def as_dict(self):
        return {
            "x": self.x,
            "L": self.L,
            "rows": [{"terms": n, "potential": v} for n, v in self.rows],
            "closed_form": self.closed_form,
        }


def convergence_table(x, L, term_counts):
    """Tabulate the truncated series against the closed form at one position."""
    counts = [int(n) for n in term_counts]
    if not counts:
        raise ValueError("term_counts must be nonempty")
    rows = tuple((n, potential_series(x, L, n)) for n in counts)
    return ConvergenceTable(x=float(x), L=float(L), rows=rows,
                            closed_form=potential_closed(x, L))
