"""Fuzzy numbers stored as nested families of alpha-level intervals.

A fuzzy number A is represented by its level sets [A]^alpha on a uniform
grid alpha_i = i/K, i = 0..K.  Each level is a closed interval, levels
shrink (nest) as alpha grows, and endpoints between grid nodes are read
off by linear interpolation.  The level at alpha = 1 is the closed core.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .interval import Interval

DEFAULT_GRID_K = 100

# Constructors accept this much numerical slack before declaring an input
# non-nested; anything tighter is repaired to an exactly nested family.
NEST_TOL = 1e-12


@dataclass(frozen=True)
class AlphaGrid:
    """Uniform subdivision of [0, 1] into K steps, K + 1 nodes."""

    K: int = DEFAULT_GRID_K

    def __post_init__(self) -> None:
        if not isinstance(self.K, (int, np.integer)) or isinstance(self.K, bool):
            raise ValueError(f"grid size must be an integer, got {self.K!r}")
        if self.K < 1:
            raise ValueError(f"grid size must be at least 1, got {self.K}")
        object.__setattr__(self, "K", int(self.K))

    def alphas(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.K + 1)

    @classmethod
    def coerce(cls, grid: "AlphaGrid | int") -> "AlphaGrid":
        if isinstance(grid, AlphaGrid):
            return grid
        return cls(grid)


class FuzzyNumber:
    """A fuzzy quantity described by K + 1 nested alpha-level intervals.

    The constructor takes the lower and upper endpoint arrays sampled at
    the grid nodes.  It validates finiteness, per-level ordering and
    nestedness (lower endpoints non-decreasing in alpha, upper endpoints
    non-increasing), repairing violations up to NEST_TOL and rejecting
    anything larger.
    """

    __slots__ = ("_los", "_his", "_neg_his")

    def __init__(self, los, his) -> None:
        los = np.array(los, dtype=float)
        his = np.array(his, dtype=float)
        if los.ndim != 1 or his.ndim != 1 or los.shape != his.shape:
            raise ValueError("endpoint arrays must be 1-d and of equal length")
        if los.size < 2:
            raise ValueError("need at least two levels (grid size K >= 1)")
        if not (np.isfinite(los).all() and np.isfinite(his).all()):
            raise ValueError("level endpoints must be finite")
        if np.any(los > his + NEST_TOL):
            raise ValueError("level lower endpoint exceeds upper endpoint")
        if np.any(np.diff(los) < -NEST_TOL) or np.any(np.diff(his) > NEST_TOL):
            raise ValueError("levels are not nested")

        # Repair float-scale slack so the stored family is exactly nested.
        los = np.maximum.accumulate(los)
        his = np.minimum.accumulate(his)
        crossed = los > his
        if crossed.any():
            mid = 0.5 * (los[crossed] + his[crossed])
            los[crossed] = mid
            his[crossed] = mid
        if np.any(np.diff(los) < 0) or np.any(np.diff(his) > 0) or np.any(los > his):
            raise ValueError("levels are not nested")

        los.flags.writeable = False
        his.flags.writeable = False
        object.__setattr__(self, "_los", los)
        object.__setattr__(self, "_his", his)
        object.__setattr__(self, "_neg_his", -his)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("FuzzyNumber instances are immutable")

    # -- basic accessors ----------------------------------------------------

    @property
    def los(self) -> np.ndarray:
        """Lower endpoints at the grid nodes (read-only view)."""
        return self._los

    @property
    def his(self) -> np.ndarray:
        """Upper endpoints at the grid nodes (read-only view)."""
        return self._his

    @property
    def k(self) -> int:
        return self._los.size - 1

    @property
    def grid(self) -> AlphaGrid:
        return AlphaGrid(self.k)

    @property
    def support(self) -> Interval:
        """Closure of the support, the level at alpha = 0."""
        return Interval(self._los[0], self._his[0])

    @property
    def core(self) -> Interval:
        """The closed level at alpha = 1."""
        return Interval(self._los[-1], self._his[-1])

    @property
    def is_nested(self) -> bool:
        """Exact nestedness check of the stored family."""
        return bool(
            np.all(np.diff(self._los) >= 0)
            and np.all(np.diff(self._his) <= 0)
            and np.all(self._los <= self._his)
        )

    def level(self, i: int) -> Interval:
        """The stored level at grid node i (alpha = i / K)."""
        return Interval(self._los[i], self._his[i])

    def alpha_cut(self, alpha: float) -> Interval:
        """Level set at an arbitrary alpha in [0, 1].

        Exact at grid nodes; between nodes the endpoints are linearly
        interpolated.
        """
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
        pos = alpha * self.k
        i = int(pos)
        if i >= self.k:
            return self.level(self.k)
        t = pos - i
        lo = self._los[i] + t * (self._los[i + 1] - self._los[i])
        hi = self._his[i] + t * (self._his[i + 1] - self._his[i])
        return Interval(lo, hi)

    def membership(self, x):
        """Degree of membership, sup of the alphas whose cut contains x.

        Accepts a scalar or an array and evaluates elementwise.  The stored
        endpoint curves are inverted with a binary search followed by linear
        interpolation inside the located grid step, so the result is exact
        for the piecewise linear representation.
        """
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        pts = np.atleast_1d(arr)
        k = self.k
        los, his = self._los, self._his

        with np.errstate(invalid="ignore"):
            i = np.searchsorted(los, pts, side="right") - 1
            seg = np.clip(i, 0, k - 1)
            gap = los[seg + 1] - los[seg]
            a_lo = (seg + (pts - los[seg]) / np.where(gap > 0, gap, 1.0)) / k
            a_lo = np.where(i >= k, 1.0, a_lo)
            a_lo = np.where(i < 0, -1.0, a_lo)

            j = np.searchsorted(self._neg_his, -pts, side="right") - 1
            segj = np.clip(j, 0, k - 1)
            gapj = his[segj] - his[segj + 1]
            a_hi = (segj + (his[segj] - pts) / np.where(gapj > 0, gapj, 1.0)) / k
            a_hi = np.where(j >= k, 1.0, a_hi)
            a_hi = np.where(j < 0, -1.0, a_hi)

        out = np.minimum(a_lo, a_hi)
        out = np.where(out < 0.0, 0.0, out)
        return float(out[0]) if scalar else out

    # -- derived representations ---------------------------------------------

    def resample(self, grid: "AlphaGrid | int") -> "FuzzyNumber":
        """The same fuzzy number re-sampled onto another alpha grid."""
        grid = AlphaGrid.coerce(grid)
        if grid.K == self.k:
            return self
        old = self.grid.alphas()
        new = grid.alphas()
        return FuzzyNumber(np.interp(new, old, self._los),
                           np.interp(new, old, self._his))

    def to_json(self) -> dict:
        """Plain-object form: {"K": K, "levels": [[lo, hi], ...]}."""
        return {
            "K": self.k,
            "levels": [[float(a), float(b)] for a, b in zip(self._los, self._his)],
        }

    def approx_equal(self, other: "FuzzyNumber", tol: float = 1e-9) -> bool:
        if self.k != other.k:
            return False
        return bool(
            np.all(np.abs(self._los - other._los) <= tol)
            and np.all(np.abs(self._his - other._his) <= tol)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return (self.k == other.k
                and np.array_equal(self._los, other._los)
                and np.array_equal(self._his, other._his))

    __hash__ = None  # array-backed, not hashable

    def __repr__(self) -> str:
        return (f"FuzzyNumber(K={self.k}, support=[{self._los[0]:g}, {self._his[0]:g}], "
                f"core=[{self._los[-1]:g}, {self._his[-1]:g}])")


# -- constructors -------------------------------------------------------------


def triangular(a: float, b: float, c: float,
               grid: AlphaGrid | int = DEFAULT_GRID_K) -> FuzzyNumber:
    """Triangular fuzzy number with support [a, c] and peak b.

    Level endpoints are a + alpha*(b - a) and c - alpha*(c - b).
    """
    if not a <= b <= c:
        raise ValueError(f"triangular parameters must satisfy a <= b <= c, got {(a, b, c)}")
    al = AlphaGrid.coerce(grid).alphas()
    return FuzzyNumber(a + al * (b - a), c - al * (c - b))


def trapezoidal(a: float, b: float, c: float, d: float,
                grid: AlphaGrid | int = DEFAULT_GRID_K) -> FuzzyNumber:
    """Trapezoidal fuzzy number with support [a, d] and plateau [b, c]."""
    if not a <= b <= c <= d:
        raise ValueError(
            f"trapezoidal parameters must satisfy a <= b <= c <= d, got {(a, b, c, d)}")
    al = AlphaGrid.coerce(grid).alphas()
    return FuzzyNumber(a + al * (b - a), d - al * (d - c))


def crisp(a: float, grid: AlphaGrid | int = DEFAULT_GRID_K) -> FuzzyNumber:
    """Degenerate fuzzy number concentrated at the single value a."""
    n = AlphaGrid.coerce(grid).K + 1
    return FuzzyNumber(np.full(n, float(a)), np.full(n, float(a)))


def from_levels(levels) -> FuzzyNumber:
    """Build a fuzzy number from an explicit (K+1, 2) array of levels.

    Row i holds [lo, hi] at alpha = i / K.  Non-nested input beyond the
    repair tolerance is rejected.
    """
    arr = np.asarray(levels, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("levels must be a (K+1, 2) array of [lo, hi] rows")
    return FuzzyNumber(arr[:, 0], arr[:, 1])


def fuzzy_from_json(obj) -> FuzzyNumber:
    """Parse the JSON forms for fuzzy numbers.

    Accepts the full {"K": ..., "levels": [[lo, hi], ...]} form and the
    shorthands {"tri": [a, b, c]}, {"trap": [a, b, c, d]}, {"crisp": a};
    shorthands honor an optional "K" key (default 100).
    """
    if not isinstance(obj, dict):
        raise ValueError(f"expected an object describing a fuzzy number, got {obj!r}")
    grid = obj.get("K", DEFAULT_GRID_K)
    if "tri" in obj:
        return triangular(*obj["tri"], grid=grid)
    if "trap" in obj:
        return trapezoidal(*obj["trap"], grid=grid)
    if "crisp" in obj:
        val = obj["crisp"]
        if isinstance(val, (list, tuple)):
            (val,) = val
        return crisp(val, grid=grid)
    if "levels" in obj:
        fn = from_levels(obj["levels"])
        if "K" in obj and fn.k != obj["K"]:
            raise ValueError(f"levels length {fn.k + 1} does not match K={obj['K']}")
        return fn
    raise ValueError(f"unrecognized fuzzy number object: {obj!r}")
