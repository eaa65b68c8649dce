"""Shared helpers: seeded stencil generators, ulp measurement, acceptance log."""

import math
from fractions import Fraction

import numpy as np

_ACCEPTANCE_LINES = []


def record_criterion(index: int, passed: bool, detail: str) -> None:
    """Collect one pass/fail line per acceptance criterion for the summary."""
    line = f"acceptance criterion {index}: {'PASS' if passed else 'FAIL'} ({detail})"
    _ACCEPTANCE_LINES.append((index, line))
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


def ulp_distance(computed: float, reference: Fraction) -> float:
    """Distance from `computed` to the exact `reference` in ulps of the reference.

    Returns inf when the reference is zero but the computed value is not.
    """
    if reference == 0:
        return 0.0 if computed == 0.0 else math.inf
    ref = float(reference)
    spacing = math.ulp(abs(ref))
    return abs(Fraction(computed) - reference) / Fraction(spacing)


def rational_stencil(rng: np.random.Generator, m: int):
    """Strictly increasing stencil of dyadic rationals, exactly representable.

    Denominator is 2**j with j in [0, 6]; consecutive gaps are drawn from
    [den, 2*den] / den so the gap ratio stays at most 2 and no coordinate
    exceeds a few hundred.  Returns (float64 array, list of Fraction) holding
    the identical values.
    """
    den = 2 ** int(rng.integers(0, 7))
    gaps = rng.integers(den, 2 * den + 1, size=m - 1)
    start = int(rng.integers(-2 * den, 2 * den + 1))
    nums = np.concatenate(([start], start + np.cumsum(gaps)))
    fracs = [Fraction(int(v), den) for v in nums]
    pts = np.array([float(f) for f in fracs])
    return pts, fracs


def smooth_stencil(rng: np.random.Generator, m: int, lo: float = 0.2, hi: float = 1.0):
    """Strictly increasing float stencil with gaps uniform in [lo, hi)."""
    gaps = rng.uniform(lo, hi, size=m - 1)
    start = rng.uniform(-1.0, 1.0)
    return np.concatenate(([start], start + np.cumsum(gaps)))
