"""Design thresholds for K under node deletion, the exact cut-event
probability, and the union bound on disconnection.

The four threshold functions answer "how large must K be" for two goals --
full connectivity of the survivors, or a giant component missing fewer than
``lam`` survivors -- under two deletion regimes, a count gamma growing
sublinearly in n or a fixed fraction alpha of n.  All logarithms are
natural.  Binomial-coefficient ratios are evaluated as log-gamma
differences; n around 50,000 overflows direct factorials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammaln, logsumexp

from .errors import InvalidParameterError

__all__ = [
    "r1",
    "r2",
    "r3",
    "r4",
    "ThresholdQuery",
    "ThresholdDecision",
    "resolve_threshold",
    "min_k",
    "cut_event_probability",
    "cut_event_probability_exact",
    "cut_event_upper_bound",
    "cut_event_upper_bound_exact",
    "BoundReport",
    "union_bound_pz",
]

_LOG2_HALF = math.log(2.0) + 0.5


def r1(alpha: float, n: int) -> float:
    """Connectivity threshold when a fraction alpha of the n nodes fails.

    r1 = log(n) / (1 - alpha - log(alpha)); the denominator is strictly
    positive on alpha in (0, 1), so the value is strictly positive.
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError(f"alpha must be in (0, 1), got {alpha}")
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")
    return math.log(n) / (1.0 - alpha - math.log(alpha))


def r2(gamma: int) -> float:
    """Connectivity threshold when gamma = Omega(sqrt(n)) but o(n) nodes fail.

    r2 = log(gamma) / (log 2 + 1/2), zero at gamma = 1.  Some tabulations
    shift this value by +1 as a conservative margin; pass ``slack=1`` to
    :func:`min_k` for that reading.
    """
    if gamma < 1:
        raise InvalidParameterError(f"gamma must be >= 1, got {gamma}")
    return math.log(gamma) / _LOG2_HALF


def r3(gamma: int, lam: int) -> float:
    """Giant-component threshold for sublinear deletion: fewer than ``lam``
    of the survivors end up outside the largest component.

    r3 = 1 + log(1 + gamma/lam) / (log 2 + 1/2).
    """
    if gamma < 0:
        raise InvalidParameterError(f"gamma must be >= 0, got {gamma}")
    if lam < 1:
        raise InvalidParameterError(f"lam must be >= 1, got {lam}")
    return 1.0 + math.log(1.0 + gamma / lam) / _LOG2_HALF


def r4(alpha: float, lam: int, n: int) -> float:
    """Giant-component threshold when a fraction alpha of the n nodes fails.

    r4 = 1 + [log(1 + n*alpha/lam) + alpha + log(1-alpha)]
           / [(1-alpha)/2 - log((1+alpha)/2)].
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError(f"alpha must be in (0, 1), got {alpha}")
    if lam < 1:
        raise InvalidParameterError(f"lam must be >= 1, got {lam}")
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")
    den = (1.0 - alpha) / 2.0 - math.log((1.0 + alpha) / 2.0)
    assert den > 0.0, "denominator positive on alpha in (0, 1)"
    num = math.log(1.0 + n * alpha / lam) + alpha + math.log(1.0 - alpha)
    return 1.0 + num / den


@dataclass
class ThresholdQuery:
    """A design question: the goal, the deletion regime, and margins.

    Exactly one of ``gamma`` (count) and ``alpha`` (fraction) must be set.
    ``lam`` (allowed nodes outside the giant component) is required for the
    giant goal.  ``slack`` adds an integer margin on top of the recommended
    K.
    """

    goal: str  # "connectivity" | "giant"
    n: int
    gamma: int | None = None
    alpha: float | None = None
    lam: int | None = None
    slack: int = 0


@dataclass
class ThresholdDecision:
    threshold: float
    regime: str
    k: int


def resolve_threshold(query: ThresholdQuery) -> ThresholdDecision:
    """Pick the applicable threshold for a query and recommend an integer K.

    The recommendation is the smallest integer strictly above the threshold,
    plus ``slack``, floored at 2 for connectivity goals and 1 for giant
    goals.  Regimes at finite n are dispatched by input form: a fraction
    selects the linear-deletion thresholds (r1/r4); a count selects the
    sublinear ones (r2/r3), with counts below sqrt(n) needing no margin
    beyond K = 2 for connectivity.
    """
    n, gamma, alpha = query.n, query.gamma, query.alpha
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")
    if (gamma is None) == (alpha is None):
        raise InvalidParameterError("exactly one of gamma and alpha must be set")
    if alpha is not None and not 0.0 < alpha < 1.0:
        raise InvalidParameterError(f"alpha must be in (0, 1), got {alpha}")
    if gamma is not None and not 0 <= gamma < n:
        raise InvalidParameterError(f"gamma must be in [0, n), got {gamma}")
    if query.slack < 0:
        raise InvalidParameterError(f"slack must be >= 0, got {query.slack}")

    if query.goal == "connectivity":
        floor_k = 2
        if alpha is not None:
            threshold, regime = r1(alpha, n), "linear-fraction"
        elif gamma * gamma < n:
            threshold, regime = 0.0, "sublinear-small"
        else:
            threshold, regime = r2(gamma), "sublinear-log"
    elif query.goal == "giant":
        floor_k = 1
        if query.lam is None:
            raise InvalidParameterError("giant goal requires lam")
        if alpha is not None:
            threshold, regime = r4(alpha, query.lam, n), "giant-linear-fraction"
        else:
            threshold, regime = r3(gamma, query.lam), "giant-sublinear"
    else:
        raise InvalidParameterError(f"unknown goal: {query.goal!r}")

    k = max(floor_k, math.floor(threshold) + 1 + query.slack)
    return ThresholdDecision(threshold=threshold, regime=regime, k=k)


def min_k(query: ThresholdQuery) -> int:
    """Smallest recommended integer K for the query (see resolve_threshold)."""
    return resolve_threshold(query).k


# -- cut-event probability and the union bound ------------------------------


def _log_comb(a, b):
    """log C(a, b) elementwise; -inf where the coefficient vanishes."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    out = np.where(
        (b < 0) | (b > a),
        -np.inf,
        gammaln(a + 1.0) - gammaln(b + 1.0) - gammaln(a - b + 1.0),
    )
    return out


def _check_cut_args(n: int, k: int, gamma: int, r: int) -> None:
    if n < 2 or gamma < 0 or gamma > n - 2:
        raise InvalidParameterError(f"need 0 <= gamma <= n-2, got n={n} gamma={gamma}")
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"need 1 <= k <= n-1, got k={k}")
    if not 1 <= r <= n - gamma - 1:
        raise InvalidParameterError(f"need 1 <= r <= n-gamma-1, got r={r}")


def cut_event_probability(n: int, k: int, gamma: int, r: int) -> float:
    """Exact probability that a fixed set of r survivors and the other
    n-gamma-r survivors place no picks across the divide (log-space).

    Both sides may still pick deleted nodes.  Returns 0 when the r-side has
    fewer than k allowed targets (gamma + r - 1 < k), or the large side does
    (n - r - 1 < k).
    """
    _check_cut_args(n, k, gamma, r)
    if gamma + r - 1 < k or n - r - 1 < k:
        return 0.0
    log_den = float(_log_comb(n - 1, k))
    log_p = r * (float(_log_comb(gamma + r - 1, k)) - log_den) + (n - gamma - r) * (
        float(_log_comb(n - r - 1, k)) - log_den
    )
    return float(math.exp(log_p))


def cut_event_probability_exact(n: int, k: int, gamma: int, r: int) -> Fraction:
    """Rational-arithmetic version of :func:`cut_event_probability`.

    Intended for small instances (golden fixtures, oracle cross-checks);
    the integers grow with the exponents.
    """
    _check_cut_args(n, k, gamma, r)
    den = math.comb(n - 1, k)
    small = Fraction(math.comb(gamma + r - 1, k), den)
    large = Fraction(math.comb(n - r - 1, k), den)
    return small**r * large ** (n - gamma - r)


def cut_event_upper_bound(n: int, k: int, gamma: int, r: int) -> float:
    """Closed-form upper bound ((gamma+r)/n)^(rk) ((n-r)/n)^(k(n-gamma-r));
    dominates :func:`cut_event_probability` on the same arguments."""
    _check_cut_args(n, k, gamma, r)
    log_b = r * k * math.log((gamma + r) / n) + k * (n - gamma - r) * math.log((n - r) / n)
    return float(math.exp(log_b))


def cut_event_upper_bound_exact(n: int, k: int, gamma: int, r: int) -> Fraction:
    """Rational-arithmetic version of :func:`cut_event_upper_bound`."""
    _check_cut_args(n, k, gamma, r)
    return Fraction(gamma + r, n) ** (r * k) * Fraction(n - r, n) ** (k * (n - gamma - r))


@dataclass
class BoundReport:
    """Union bound on the probability that the residual graph has any cut,
    i.e. on its disconnection probability."""

    n: int
    k: int
    gamma: int
    pz_bound: float
    clamped: bool
    per_r_terms: list[float] | None = None

    def to_dict(self) -> dict:
        doc = {
            "n": self.n,
            "k": self.k,
            "gamma": self.gamma,
            "pz_bound": self.pz_bound,
            "clamped": self.clamped,
        }
        if self.per_r_terms is not None:
            doc["per_r_terms"] = self.per_r_terms
        return doc


def union_bound_pz(n: int, k: int, gamma: int, include_terms: bool = False) -> BoundReport:
    """Sum the cut-event upper bounds over all cut sizes r = 1 ..
    floor((n-gamma)/2), weighted by the C(n-gamma, r) choices of the cut.

    The sum is evaluated in log-space and clamped at 1 (the bound is vacuous
    above 1; ``clamped`` records that).  The result upper-bounds the
    probability that the residual graph is disconnected.
    """
    if n < 2 or not 0 <= gamma <= n - 2:
        raise InvalidParameterError(f"need 0 <= gamma <= n-2, got n={n} gamma={gamma}")
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    m = n - gamma
    r = np.arange(1, m // 2 + 1, dtype=np.float64)
    log_terms = (
        _log_comb(float(m), r)
        + r * k * np.log((gamma + r) / n)
        + k * (m - r) * np.log((n - r) / n)
    )
    total = float(logsumexp(log_terms))
    raw = math.inf if total > 700.0 else math.exp(total)
    clamped = raw > 1.0
    return BoundReport(
        n=n,
        k=k,
        gamma=gamma,
        pz_bound=1.0 if clamped else raw,
        clamped=clamped,
        per_r_terms=[float(t) for t in np.exp(log_terms)] if include_terms else None,
    )
