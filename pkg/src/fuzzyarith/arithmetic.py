"""Standard and correlated arithmetic on fuzzy numbers.

Standard (non-interactive) sums and products combine levels with interval
arithmetic.  Correlated operations treat the second operand as f(first
operand) and compute, per level, the exact range of x + f(x) or x * f(x)
over the level, either from closed-form critical points or numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .correlation import CorrelationFunction, _validate_custom
from .fuzzy import FuzzyNumber
from .interval import Interval

BINARY_OPS = ("sum", "product")

# Formula identifiers accepted by closed_form.  A hyperbolic correlated sum
# is deliberately absent: splitting x + q/x into independent interval terms
# overstates the range (see the package README), so only the direct range
# computed by correlated_sum is offered for that case.
CLOSED_FORM_KINDS = (
    "std-sum-linear",
    "std-prod-linear",
    "std-sum-hyperbolic",
    "std-prod-hyperbolic",
    "corr-sum-linear",
    "corr-prod-linear",
    "corr-prod-hyperbolic",
)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class RangeMethod:
    """How to compute the range of a function over an interval.

    ``analytic`` uses exact critical points and is only available for the
    profile shapes defined below.  ``numeric`` samples the function on an
    equispaced grid and sharpens every local extremum bracket with a
    golden-section search until the bracket is narrower than refine_tol.
    """

    mode: str = "numeric"
    samples: int = 1025
    refine_tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.mode not in ("analytic", "numeric"):
            raise ValueError(f"mode must be 'analytic' or 'numeric', got {self.mode!r}")
        if self.samples < 65:
            raise ValueError(f"numeric range needs at least 65 samples, got {self.samples}")
        if not self.refine_tol > 0:
            raise ValueError(f"refine_tol must be positive, got {self.refine_tol!r}")


_ANALYTIC = RangeMethod(mode="analytic")


# -- profile shapes with exact ranges ------------------------------------------


@dataclass(frozen=True)
class Affine:
    """g(x) = c1*x + c0."""

    c1: float
    c0: float

    def __call__(self, x):
        return self.c1 * x + self.c0

    def bounds_arrays(self, los, his):
        a = self.c1 * los + self.c0
        b = self.c1 * his + self.c0
        return (a, b) if self.c1 >= 0 else (b, a)

    def bounds_on(self, iv: Interval) -> Interval:
        a, b = self(iv.lo), self(iv.hi)
        return Interval(a, b) if self.c1 >= 0 else Interval(b, a)


@dataclass(frozen=True)
class Quadratic:
    """g(x) = a*x**2 + b*x, the product profile of a linear correlation."""

    a: float
    b: float

    def __call__(self, x):
        return self.a * x * x + self.b * x

    def bounds_arrays(self, los, his):
        v1 = self(los)
        v2 = self(his)
        lo = np.minimum(v1, v2)
        hi = np.maximum(v1, v2)
        if self.a == 0.0:
            return lo, hi
        xv = -self.b / (2.0 * self.a)
        inside = (los <= xv) & (xv <= his)
        if inside.any():
            vv = self(xv)
            if self.a > 0:
                lo = np.where(inside, vv, lo)
            else:
                hi = np.where(inside, vv, hi)
        return lo, hi

    def bounds_on(self, iv: Interval) -> Interval:
        lo, hi = self.bounds_arrays(np.array([iv.lo]), np.array([iv.hi]))
        return Interval(float(lo[0]), float(hi[0]))


@dataclass(frozen=True)
class ReciprocalSum:
    """g(x) = x + q/x + r on intervals that avoid zero.

    For q > 0 there are stationary points at +-sqrt(q): a local minimum on
    the positive side, a local maximum on the negative side.  For q < 0 the
    function is strictly increasing on either side of zero.
    """

    q: float
    r: float

    def __call__(self, x):
        return x + self.q / x + self.r

    def bounds_arrays(self, los, his):
        v1 = self(los)
        v2 = self(his)
        lo = np.minimum(v1, v2)
        hi = np.maximum(v1, v2)
        if self.q > 0:
            s = math.sqrt(self.q)
            pos = (los <= s) & (s <= his)
            neg = (los <= -s) & (-s <= his)
            if pos.any():
                lo = np.where(pos, 2.0 * s + self.r, lo)
            if neg.any():
                hi = np.where(neg, -2.0 * s + self.r, hi)
        return lo, hi

    def bounds_on(self, iv: Interval) -> Interval:
        lo, hi = self.bounds_arrays(np.array([iv.lo]), np.array([iv.hi]))
        return Interval(float(lo[0]), float(hi[0]))


# -- range search ---------------------------------------------------------------


def _golden_min(g, a: float, b: float, tol: float) -> float:
    """Smallest value of g found on [a, b] by golden-section bracketing."""
    h = b - a
    best = min(g(a), g(b))
    if h <= tol:
        return min(best, g(0.5 * (a + b)))
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc = g(c)
    yd = g(d)
    best = min(best, yc, yd)
    steps = max(1, math.ceil(math.log(tol / h) / math.log(_INV_PHI)))
    for _ in range(steps):
        h *= _INV_PHI
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + _INV_PHI2 * h
            yc = g(c)
        else:
            a, c, yc = c, d, yd
            d = a + _INV_PHI * h
            yd = g(d)
        best = min(best, yc, yd)
    return float(best)


def _local_min_indices(ys: np.ndarray) -> list[int]:
    """Sample indices worth refining, plateau runs collapsed to one entry.

    Boundary samples count as local minima too: an interior extremum less
    than one sample gap from an endpoint shows up only there.
    """
    n = ys.size
    inner = np.arange(1, n - 1)
    mask = (ys[1:-1] <= ys[:-2]) & (ys[1:-1] <= ys[2:])
    idx = inner[mask]
    if ys[0] <= ys[1]:
        idx = np.append(0, idx)
    if ys[n - 1] <= ys[n - 2]:
        idx = np.append(idx, n - 1)
    if idx.size:
        keep = np.empty(idx.size, dtype=bool)
        keep[0] = True
        keep[1:] = np.diff(idx) > 1
        idx = idx[keep]
    gmin = int(np.argmin(ys))
    if gmin not in idx:
        idx = np.append(idx, gmin)
    if idx.size > 32:
        idx = idx[np.argsort(ys[idx])[:32]]
    return [int(i) for i in idx]


def range_over_interval(g, iv: Interval, method: RangeMethod | None = None) -> Interval:
    """Closure of {g(x) : x in iv} as an interval.

    ``g`` is any real function of one variable.  With method=None a profile
    object carrying exact bounds (Affine, Quadratic, ReciprocalSum) is ranged
    analytically and anything else numerically; an explicit analytic request
    on a plain callable is an error.
    """
    analytic = getattr(g, "bounds_on", None)
    if method is None:
        method = _ANALYTIC if analytic is not None else RangeMethod()
    if method.mode == "analytic":
        if analytic is None:
            raise ValueError(
                "analytic range requested but the function has no closed-form "
                "critical points; use a numeric RangeMethod")
        return analytic(iv)

    if iv.width == 0.0:
        v = float(g(iv.lo))
        return Interval(v, v)
    xs = np.linspace(iv.lo, iv.hi, method.samples)
    ys = np.array([float(g(float(x))) for x in xs])
    lo_val = float(ys.min())
    hi_val = float(ys.max())
    tol = method.refine_tol
    last = method.samples - 1
    for i in _local_min_indices(ys):
        a, b = float(xs[max(i - 1, 0)]), float(xs[min(i + 1, last)])
        lo_val = min(lo_val, _golden_min(g, a, b, tol))
    neg = lambda x: -g(x)
    for i in _local_min_indices(-ys):
        a, b = float(xs[max(i - 1, 0)]), float(xs[min(i + 1, last)])
        hi_val = max(hi_val, -_golden_min(neg, a, b, tol))
    return Interval(lo_val, hi_val)


# -- standard (non-interactive) operations --------------------------------------


def _common_grid(a: FuzzyNumber, b: FuzzyNumber) -> tuple[FuzzyNumber, FuzzyNumber]:
    if a.k == b.k:
        return a, b
    k = max(a.k, b.k)
    return a.resample(k), b.resample(k)


def standard_sum(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    """Levelwise interval sum; operands on different grids are re-sampled
    onto the finer one."""
    a, b = _common_grid(a, b)
    return FuzzyNumber(a.los + b.los, a.his + b.his)


def standard_product(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    """Levelwise interval product (extrema over the four endpoint products)."""
    a, b = _common_grid(a, b)
    p1 = a.los * b.los
    p2 = a.los * b.his
    p3 = a.his * b.los
    p4 = a.his * b.his
    return FuzzyNumber(np.minimum(np.minimum(p1, p2), np.minimum(p3, p4)),
                       np.maximum(np.maximum(p1, p2), np.maximum(p3, p4)))


# -- correlated operations -------------------------------------------------------


def _profile(f: CorrelationFunction, op: str):
    qr = f.linear_coeffs
    if qr is not None:
        q, r = qr
        return Affine(1.0 + q, r) if op == "sum" else Quadratic(q, r)
    qr = f.hyperbolic_coeffs
    if qr is not None:
        q, r = qr
        # x * (q/x + r) collapses to r*x + q
        return ReciprocalSum(q, r) if op == "sum" else Affine(r, q)
    return None


def _correlated(a: FuzzyNumber, f: CorrelationFunction, op: str,
                method: RangeMethod | None) -> FuzzyNumber:
    f.require_on(a.support)
    _validate_custom(f, a.support)
    profile = _profile(f, op)
    if method is None:
        method = _ANALYTIC if profile is not None else RangeMethod()
    if method.mode == "analytic":
        if profile is None:
            raise ValueError(
                "analytic range is unavailable for custom correlation functions")
        lo, hi = profile.bounds_arrays(a.los, a.his)
        return FuzzyNumber(lo, hi)
    if profile is not None:
        g = profile
    elif op == "sum":
        g = lambda x: x + f(x)
    else:
        g = lambda x: x * f(x)
    n = a.k + 1
    lows = np.empty(n)
    highs = np.empty(n)
    for i in range(n):
        iv = range_over_interval(g, a.level(i), method)
        lows[i] = iv.lo
        highs[i] = iv.hi
    return FuzzyNumber(lows, highs)


def correlated_sum(a: FuzzyNumber, f: CorrelationFunction,
                   method: RangeMethod | None = None) -> FuzzyNumber:
    """Sum of A and f(A) under the graph coupling.

    Level alpha is the closure of {x + f(x) : x in [A]^alpha}, the range of
    one function of one variable, not an interval Minkowski sum.
    """
    return _correlated(a, f, "sum", method)


def correlated_product(a: FuzzyNumber, f: CorrelationFunction,
                       method: RangeMethod | None = None) -> FuzzyNumber:
    """Product of A and f(A) under the graph coupling, ranged levelwise."""
    return _correlated(a, f, "product", method)


# -- closed forms ----------------------------------------------------------------


def _scaled(c: float, los: np.ndarray, his: np.ndarray):
    return (c * los, c * his) if c >= 0 else (c * his, c * los)


def _square_range(los: np.ndarray, his: np.ndarray):
    """Levelwise range of x**2, exact (zero handled)."""
    s1 = los * los
    s2 = his * his
    lo = np.where((los <= 0.0) & (0.0 <= his), 0.0, np.minimum(s1, s2))
    return lo, np.maximum(s1, s2)


def closed_form(kind: str, a: FuzzyNumber, q: float, r: float) -> FuzzyNumber:
    """Direct endpoint formulas for the built-in correlation families.

    ``kind`` selects one of CLOSED_FORM_KINDS; q and r parameterize the
    correlation (q*x + r for the linear kinds, q/x + r for the hyperbolic
    ones).  These are transcription-style formulas kept separate from the
    range engine so the two can be checked against each other.
    """
    if kind not in CLOSED_FORM_KINDS:
        raise ValueError(f"unknown closed form {kind!r}; expected one of "
                         f"{', '.join(CLOSED_FORM_KINDS)}")
    q = float(q)
    r = float(r)
    if q == 0.0:
        raise ValueError("closed forms need q != 0")
    los, his = a.los, a.his
    if "hyperbolic" in kind and los[0] <= 0.0 <= his[0]:
        from .errors import DomainError
        raise DomainError("hyperbolic closed forms need a support that avoids zero")

    if kind == "std-sum-linear":
        if q > 0:
            return FuzzyNumber((q + 1.0) * los + r, (q + 1.0) * his + r)
        return FuzzyNumber(los + q * his + r, his + q * los + r)

    if kind == "std-prod-linear":
        cands = (q * los * los + r * los,
                 q * his * los + r * los,
                 q * his * los + r * his,
                 q * his * his + r * his)
        return FuzzyNumber(np.minimum.reduce(cands), np.maximum.reduce(cands))

    if kind == "std-sum-hyperbolic":
        if q < 0:  # q/x + r increases away from zero
            return FuzzyNumber(q / los + los + r, his + q / his + r)
        return FuzzyNumber(q / his + los + r, q / los + his + r)

    if kind == "std-prod-hyperbolic":
        cands = (q + r * los,
                 his * q / los + r * his,
                 los * q / his + r * los,
                 q + r * his)
        return FuzzyNumber(np.minimum.reduce(cands), np.maximum.reduce(cands))

    if kind == "corr-sum-linear":
        slo, shi = _scaled(q + 1.0, los, his)
        return FuzzyNumber(slo + r, shi + r)

    if kind == "corr-prod-linear":
        # q * (range of x**2) + r * [A], two independently scaled intervals.
        # Exact only when x**2 and x move together on the support, e.g. for
        # r = 0 or sign-definite supports with suitably signed q and r.
        sq_lo, sq_hi = _square_range(los, his)
        qlo, qhi = _scaled(q, sq_lo, sq_hi)
        rlo, rhi = _scaled(r, los, his)
        return FuzzyNumber(qlo + rlo, qhi + rhi)

    # corr-prod-hyperbolic: x * (q/x + r) = q + r*x levelwise
    rlo, rhi = _scaled(r, los, his)
    return FuzzyNumber(q + rlo, q + rhi)


# -- comparison -------------------------------------------------------------------


@dataclass(frozen=True)
class LevelResult:
    """Per-alpha comparison of two level intervals."""

    alpha: float
    left: Interval
    right: Interval
    hausdorff: float
    subset: bool
    equal: bool
    method: str | None = None

    def to_json(self) -> dict:
        obj = {
            "alpha": self.alpha,
            "left": [self.left.lo, self.left.hi],
            "right": [self.right.lo, self.right.hi],
            "hausdorff": self.hausdorff,
            "subset": self.subset,
            "equal": self.equal,
        }
        if self.method is not None:
            obj["method"] = self.method
        return obj


def compare_levels(x: FuzzyNumber, y: FuzzyNumber,
                   tol: float = 1e-9) -> list[LevelResult]:
    """Levelwise comparison of two fuzzy numbers on the same grid.

    Reports, per grid alpha, the Hausdorff distance between the levels,
    whether the level of x is contained in the level of y (within tol) and
    whether the two are equal (within tol).
    """
    if x.k != y.k:
        raise ValueError(f"grid mismatch: K={x.k} vs K={y.k}; resample first")
    alphas = x.grid.alphas()
    out = []
    for i, alpha in enumerate(alphas):
        li = x.level(i)
        ri = y.level(i)
        out.append(LevelResult(
            alpha=float(alpha),
            left=li,
            right=ri,
            hausdorff=li.hausdorff(ri),
            subset=ri.contains(li, tol),
            equal=li.approx_equal(ri, tol),
        ))
    return out
