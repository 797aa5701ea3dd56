"""Random-citing-scientist citation network growth.

Papers arrive sequentially.  Each new paper picks m random earlier
papers, cites them, and also copies each of their references with
probability p.  Copying makes already-cited papers more likely to be
cited again, which is enough to produce the heavy-tailed citation
distributions seen in real bibliometric data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidTallyError

__all__ = [
    "RcsConfig",
    "CitationNetwork",
    "DegreeStats",
    "simulate_rcs",
    "renowned_fraction",
    "degree_stats",
]


@dataclass(frozen=True)
class RcsConfig:
    """Growth parameters.

    n_papers : total papers grown
    m        : random earlier papers picked per new paper
    p        : per-reference copy probability
    seed     : RNG seed; identical configs give bit-identical networks
    """

    n_papers: int
    m: int
    p: float
    seed: int

    def validate(self) -> None:
        if self.m < 1:
            raise InvalidTallyError("m must be >= 1")
        if self.n_papers < self.m + 1:
            raise InvalidTallyError("n_papers must be >= m + 1")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidTallyError("p must be in [0, 1]")


@dataclass(frozen=True)
class CitationNetwork:
    """Directed acyclic citation graph, papers indexed 0..n-1 in arrival
    order.  out_lists[t] holds the papers cited by t (all < t, no
    duplicates); in_degree[i] counts lists containing i."""

    out_lists: tuple[tuple[int, ...], ...]
    in_degree: np.ndarray

    @property
    def n_papers(self) -> int:
        return len(self.out_lists)

    @property
    def total_edges(self) -> int:
        return int(self.in_degree.sum())


def simulate_rcs(config: RcsConfig) -> CitationNetwork:
    """Grow one network.  Uses PCG64 seeded from config.seed.

    Bootstrap: papers 0..m-1 cite all earlier papers (paper 0 cites
    nothing).  From paper m on: pick m distinct earlier papers uniformly,
    cite each, then copy each reference of each picked paper with
    probability p; duplicates in the combined list are dropped, keeping
    first occurrence.
    """
    config.validate()
    rng = np.random.default_rng(np.random.PCG64(config.seed))
    n, m, p = config.n_papers, config.m, config.p
    out_lists: list[tuple[int, ...]] = []
    in_degree = np.zeros(n, dtype=np.int64)
    for t in range(n):
        if t < m:
            refs = list(range(t))
        else:
            picks = rng.choice(t, size=m, replace=False)
            raw: list[int] = []
            for pick in picks:
                raw.append(int(pick))
                prior = out_lists[pick]
                if prior and p > 0.0:
                    keep = rng.random(len(prior)) < p
                    raw.extend(r for r, k in zip(prior, keep) if k)
            refs = list(dict.fromkeys(raw))
        out_lists.append(tuple(refs))
        for r in refs:
            in_degree[r] += 1
    return CitationNetwork(out_lists=tuple(out_lists), in_degree=in_degree)


def renowned_fraction(network: CitationNetwork, threshold: int) -> tuple[int, float]:
    """Count and fraction of papers with at least `threshold` citations."""
    if threshold < 1:
        raise InvalidTallyError("threshold must be >= 1")
    count = int((network.in_degree >= threshold).sum())
    return count, count / network.n_papers


@dataclass(frozen=True)
class DegreeStats:
    total_edges: int
    mean_in_degree: float
    max_in_degree: int
    ccdf_points: tuple[tuple[int, float], ...]  # (threshold, fraction >= threshold)


def degree_stats(network: CitationNetwork) -> DegreeStats:
    """In-degree summary plus CCDF points for distribution comparison."""
    from .distributions import CountSample, ccdf

    deg = network.in_degree
    curve = ccdf(CountSample(counts=tuple(int(d) for d in deg), label="in-degree"))
    return DegreeStats(
        total_edges=network.total_edges,
        mean_in_degree=float(deg.mean()),
        max_in_degree=int(deg.max()),
        ccdf_points=curve.points,
    )
