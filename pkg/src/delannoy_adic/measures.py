"""The invariant measures of the Delannoy adic and experiments with them.

The non-atomic ergodic measures put weight ``beta`` on every horizontal
edge, ``gamma`` on every vertical edge and ``alpha`` on every diagonal
edge, with ``alpha + beta + gamma = 1`` and ``beta * gamma = alpha``.  Solving
the two constraints for ``beta`` gives

    gamma = (1 - beta) / (1 + beta),   alpha = beta * gamma.

Random numbers come from numpy's PCG64 (``numpy.random.default_rng``).
Trial ``t`` of an experiment seeded with ``s`` draws walker ``w`` from the
stream ``default_rng([s, t, w])``, so trials are independent and results do
not depend on how they are scheduled.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, Sequence, Tuple, Union

import numpy as np

from .diagram import FinitePath, Move, Vertex, as_vertex
from .errors import DomainError

Number = Union[Fraction, float]

# move codes used by the vectorised samplers
H, V, D = 0, 1, 2
_CODE_TO_MOVE = (Move.H, Move.V, Move.D)
_STEP = np.array([[1, 0], [0, 1], [1, 1]], dtype=np.int64)

_FLOAT_TOL = 1e-12


@dataclass(frozen=True)
class MeasureParams:
    alpha: Number
    beta: Number
    gamma: Number

    def __post_init__(self):
        a, b, g = self.alpha, self.beta, self.gamma
        if min(a, b, g) < 0:
            raise DomainError(f"weights must be nonnegative: {self}")
        if self.exact:
            ok = a + b + g == 1 and b * g == a
        else:
            ok = abs(a + b + g - 1) <= _FLOAT_TOL and abs(b * g - a) <= _FLOAT_TOL
        if not ok:
            raise DomainError(f"need alpha+beta+gamma=1 and beta*gamma=alpha: {self}")

    @property
    def exact(self) -> bool:
        return all(isinstance(w, Fraction) for w in (self.alpha, self.beta, self.gamma))

    def weight(self, move: Move) -> Number:
        if move is Move.H:
            return self.beta
        if move is Move.V:
            return self.gamma
        return self.alpha

    def probabilities(self) -> Tuple[float, float, float]:
        """Float probabilities of ``(h, v, d)``."""
        return float(self.beta), float(self.gamma), float(self.alpha)

    def to_json(self) -> dict:
        def enc(w):
            return str(w) if isinstance(w, Fraction) else w

        return {
            "alpha": enc(self.alpha),
            "beta": enc(self.beta),
            "gamma": enc(self.gamma),
            "exact": self.exact,
        }


def parse_beta(text: str) -> Number:
    """``"num/den"`` (or an integer) is exact; anything else is a float."""
    text = text.strip()
    if "/" in text or text.lstrip("+-").isdigit():
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"bad rational beta: {text!r}") from None
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"bad beta: {text!r}") from None


def measure_from_beta(beta) -> MeasureParams:
    """The measure with horizontal weight ``beta`` (exact for rationals)."""
    if isinstance(beta, str):
        beta = parse_beta(beta)
    if isinstance(beta, Rational):
        beta = Fraction(beta)
    else:
        beta = float(beta)
        if not math.isfinite(beta):
            raise DomainError(f"beta must be finite, got {beta}")
    if not 0 <= beta <= 1:
        raise DomainError(f"beta must lie in [0, 1], got {beta}")
    gamma = (1 - beta) / (1 + beta)
    return MeasureParams(alpha=beta * gamma, beta=beta, gamma=gamma)


def cylinder_measure(p: MeasureParams, x: FinitePath) -> Number:
    """Measure of the cylinder of paths starting with ``x``."""
    h, v, d = x.counts()
    one = Fraction(1) if p.exact else 1.0
    return one * p.alpha**d * p.beta**h * p.gamma**v


def sample_moves(p: MeasureParams, depth: int, rng: np.random.Generator) -> np.ndarray:
    """``depth`` i.i.d. move codes (``H``, ``V``, ``D``) as an int8 array."""
    b, g, _ = p.probabilities()
    u = rng.random(depth)
    codes = np.full(depth, D, dtype=np.int8)
    codes[u < b + g] = V
    codes[u < b] = H
    return codes


def codes_to_path(codes: Sequence[int]) -> FinitePath:
    return FinitePath(tuple(_CODE_TO_MOVE[c] for c in codes))


def sample_path(p: MeasureParams, depth: int, seed: int) -> FinitePath:
    """A ``depth``-step random walk path, deterministic given ``seed``."""
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    rng = np.random.default_rng(seed)
    return codes_to_path(sample_moves(p, depth, rng).tolist())


def path_slope(x: FinitePath) -> float:
    """``k / n`` at the terminal vertex of ``x``."""
    t = x.terminal
    return t.k / t.n if t.n else math.inf


def ergodic_ratio(x: FinitePath, v0=(0, 0)) -> List[float]:
    """``dim(v0, x_i) / dim(root, x_i)`` along the prefix vertices ``x_i >= v0``.

    The Delannoy counts are exact; only the final ratio goes through floats
    (as a difference of logarithms, which stays finite at any depth).
    """
    v0 = as_vertex(v0)
    n0, k0 = v0.n, v0.k
    verts = [v for v in x.vertices if v.n >= n0 and v.k >= k0]
    if not verts:
        return []
    kmax = max(v.k for v in verts)
    nmax = max(v.n for v in verts)
    by_row = {}
    for idx, v in enumerate(verts):
        by_row.setdefault(v.n, []).append(idx)

    out = [0.0] * len(verts)
    window: deque = deque(maxlen=n0 + 1)
    row = [1] * (kmax + 1)
    for n in range(nmax + 1):
        if n > 0:
            prev = row
            row = [1] * (kmax + 1)
            for k in range(1, kmax + 1):
                row[k] = row[k - 1] + prev[k - 1] + prev[k]
        window.append(row)
        for idx in by_row.get(n, ()):
            k = verts[idx].k
            num = window[0][k - k0]  # row n - n0
            out[idx] = math.exp(math.log(num) - math.log(row[k]))
    return out


def slope_and_limit(p: MeasureParams, v0=(0, 0)) -> Tuple[float, float]:
    """Limiting slope ``rho`` of typical paths and the limit of the ratio.

    ``rho = (alpha + gamma) / (alpha + beta)``, and for a cylinder ending at
    ``(n0, k0)`` the ratio tends to
    ``(sqrt(1+rho^2) + rho)^-n0 * ((sqrt(1+rho^2) + 1) / rho)^-k0``.
    """
    if p.beta == 0 or p.gamma == 0:
        raise DomainError("slope is degenerate when beta or gamma is 0")
    v0 = as_vertex(v0)
    a, b, g = float(p.alpha), float(p.beta), float(p.gamma)
    rho = (a + g) / (a + b)
    root = math.sqrt(1 + rho * rho)
    log_ratio = -v0.n * math.log(root + rho) - v0.k * math.log((root + 1) / rho)
    return rho, math.exp(log_ratio)


@dataclass(frozen=True)
class WalkStats:
    """Aggregate of the difference walk ``Z = X - X'`` over several trials.

    ``collisions`` counts times ``1 <= i <= steps`` with ``Z_i = 0``, summed
    over trials; the per-trial counts are kept in ``trial_collisions``.
    """

    steps: int
    trials: int
    collisions: int
    trial_collisions: Tuple[int, ...]
    mean_increment: Tuple[float, float]
    increment_stderr: Tuple[float, float]
    final_slope: float

    def to_json(self) -> dict:
        return {
            "steps": self.steps,
            "trials": self.trials,
            "collisions": self.collisions,
            "trial_collisions": list(self.trial_collisions),
            "mean_increment": list(self.mean_increment),
            "increment_stderr": list(self.increment_stderr),
            "final_slope": self.final_slope,
        }


def collision_experiment(
    p: MeasureParams,
    steps: int,
    trials: int,
    seed: int,
    coupled: bool = False,
) -> WalkStats:
    """Run pairs of independent walks and count when they sit at one vertex.

    With ``coupled=True`` both walkers share one stream (a sanity control:
    every time is then a collision).
    """
    if steps < 0 or trials < 0:
        raise DomainError("steps and trials must be nonnegative")
    per_trial = []
    slopes = []
    inc_sum = np.zeros(2)
    inc_sq = np.zeros(2)
    for t in range(trials):
        cx = sample_moves(p, steps, np.random.default_rng([seed, t, 0]))
        if coupled:
            cy = cx
        else:
            cy = sample_moves(p, steps, np.random.default_rng([seed, t, 1]))
        inc = _STEP[cx] - _STEP[cy]
        z = np.cumsum(inc, axis=0)
        per_trial.append(int(np.count_nonzero(~z.any(axis=1))))
        inc_sum += inc.sum(axis=0)
        inc_sq += (inc.astype(np.float64) ** 2).sum(axis=0)
        end = _STEP[cx].sum(axis=0)
        slopes.append(end[1] / end[0] if end[0] else math.inf)
    total = steps * trials
    if total:
        mean = inc_sum / total
        var = inc_sq / total - mean**2
        stderr = np.sqrt(np.maximum(var, 0.0) / total)
    else:
        mean = stderr = np.zeros(2)
    return WalkStats(
        steps=steps,
        trials=trials,
        collisions=sum(per_trial),
        trial_collisions=tuple(per_trial),
        mean_increment=(float(mean[0]), float(mean[1])),
        increment_stderr=(float(stderr[0]), float(stderr[1])),
        final_slope=float(np.mean(slopes)) if slopes else math.nan,
    )
