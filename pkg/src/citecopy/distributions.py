"""Citation-count distribution analytics: CCDF, log-binned histograms,
and a Kolmogorov-Smirnov style distance between step curves."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from .errors import InvalidTallyError

__all__ = [
    "CountSample",
    "CcdfCurve",
    "LogBinnedHistogram",
    "ccdf",
    "log_bin_histogram",
    "ks_distance",
]


@dataclass(frozen=True)
class CountSample:
    """Citations-per-paper counts with a label for output files."""

    counts: tuple[int, ...]
    label: str = ""


@dataclass(frozen=True)
class CcdfCurve:
    """Complementary CDF: (threshold x, fraction of items >= x), one
    point per distinct value, thresholds strictly increasing."""

    points: tuple[tuple[int, float], ...]

    def at(self, threshold: float) -> float:
        """Fraction of items >= threshold, as a step function."""
        xs = [x for x, _ in self.points]
        i = bisect_left(xs, threshold)
        if i == len(xs):
            return 0.0
        return self.points[i][1]


def ccdf(sample: CountSample) -> CcdfCurve:
    if not sample.counts:
        raise InvalidTallyError("empty sample")
    counts = np.asarray(sample.counts)
    values, occurrences = np.unique(counts, return_counts=True)
    # fraction >= x: cumulative occurrences from the top down
    above = np.cumsum(occurrences[::-1])[::-1] / counts.size
    return CcdfCurve(points=tuple((int(v), float(f)) for v, f in zip(values, above)))


@dataclass(frozen=True)
class LogBinnedHistogram:
    """Geometric-bin density over positive counts; the zero-count mass is
    reported separately."""

    points: tuple[tuple[float, float], ...]  # (bin geometric center, density)
    edges: tuple[float, ...]
    zero_mass: float  # fraction of the sample with count 0


def log_bin_histogram(sample: CountSample, bins_per_decade: int) -> LogBinnedHistogram:
    """Histogram with `bins_per_decade` geometric bins per decade,
    covering [1, max count].  Density is count-in-bin divided by bin
    width and total sample size, so sum(density * width) equals the
    positive-count fraction."""
    if bins_per_decade < 1:
        raise InvalidTallyError("bins_per_decade must be >= 1")
    if not sample.counts:
        raise InvalidTallyError("empty sample")
    counts = np.asarray(sample.counts)
    positive = counts[counts > 0]
    if positive.size == 0:
        raise InvalidTallyError("sample has no positive counts")
    n_total = counts.size
    max_count = int(positive.max())
    n_bins = 1
    while 10.0 ** (n_bins / bins_per_decade) <= max_count:
        n_bins += 1
    edges = 10.0 ** (np.arange(n_bins + 1) / bins_per_decade)
    hist, _ = np.histogram(positive, bins=edges)
    widths = np.diff(edges)
    centers = np.sqrt(edges[:-1] * edges[1:])
    density = hist / (widths * n_total)
    return LogBinnedHistogram(
        points=tuple(
            (float(c), float(d)) for c, d in zip(centers, density)
        ),
        edges=tuple(float(e) for e in edges),
        zero_mass=float((counts == 0).sum() / n_total),
    )


def ks_distance(a: CcdfCurve, b: CcdfCurve) -> float:
    """Maximum absolute vertical gap between two CCDF step curves over
    the union of their thresholds."""
    thresholds = {x for x, _ in a.points} | {x for x, _ in b.points}
    return max(abs(a.at(t) - b.at(t)) for t in thresholds)
