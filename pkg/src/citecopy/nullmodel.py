"""Exact tail probabilities for the equal-papers null hypothesis.

If every citation event lands on one of K equally likely papers, a
paper's citation count is binomial.  The tails of interest are so far
out (500 successes at p = 1/24000) that everything must be done in log
space with log-gamma terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln

from .errors import CitecopyError, InvalidTallyError

__all__ = [
    "BinomialTailQuery",
    "binomial_log10_tail",
    "streak_probability",
    "expected_count",
]

LN10 = math.log(10.0)
# stop summing once a term is this many orders of magnitude below the sum
TERM_CUTOFF_LOG = 40.0 * LN10


@dataclass(frozen=True)
class BinomialTailQuery:
    """P(X >= threshold) for X ~ binomial(trials, success_prob)."""

    trials: int
    success_prob: float
    threshold: int

    def validate(self) -> None:
        if not 0 <= self.threshold <= self.trials:
            raise InvalidTallyError("need 0 <= threshold <= trials")
        if not 0.0 <= self.success_prob <= 1.0:
            raise InvalidTallyError("success_prob must be in [0, 1]")


def _log_pmf(n: int, log_p: float, log_q: float, k: int) -> float:
    return (
        gammaln(n + 1)
        - gammaln(k + 1)
        - gammaln(n - k + 1)
        + k * log_p
        + (n - k) * log_q
    )


def binomial_log10_tail(query: BinomialTailQuery) -> float:
    """log10 of the upper tail P(X >= k), summed stably in log space.

    Terms are accumulated from k upward with a running log-sum-exp;
    summation stops once past the distribution mode and the current term
    has fallen 40 orders of magnitude below the running sum, which bounds
    the truncation error far below reporting precision.
    """
    query.validate()
    n, p, k = query.trials, query.success_prob, query.threshold
    if k == 0:
        return 0.0
    if p == 0.0:
        return -math.inf
    if p == 1.0:
        return 0.0
    log_p, log_q = math.log(p), math.log1p(-p)
    mode = int(n * p)
    log_sum = -math.inf
    for j in range(k, n + 1):
        term = _log_pmf(n, log_p, log_q, j)
        if term > log_sum:
            log_sum = term + math.log1p(math.exp(log_sum - term))
        else:
            log_sum = log_sum + math.log1p(math.exp(term - log_sum))
        if j > mode and term < log_sum - TERM_CUTOFF_LOG:
            break
    return min(log_sum / LN10, 0.0)


def streak_probability(win_prob: float, streak: int) -> float:
    """Probability of winning `streak` independent events in a row."""
    if not 0.0 <= win_prob <= 1.0:
        raise InvalidTallyError("win_prob must be in [0, 1]")
    if streak < 0:
        raise InvalidTallyError("streak must be >= 0")
    return win_prob**streak


def expected_count(population: int, per_item_prob_log10: float) -> float:
    """Expected number of hits in a population given a per-item log10
    probability: population * 10**per_item_prob_log10."""
    if population < 0:
        raise InvalidTallyError("population must be >= 0")
    try:
        prob = 10.0**per_item_prob_log10
    except OverflowError as exc:
        raise CitecopyError(
            f"10**{per_item_prob_log10} overflows double precision"
        ) from exc
    if math.isinf(prob):
        raise CitecopyError(f"10**{per_item_prob_log10} overflows double precision")
    return population * prob
