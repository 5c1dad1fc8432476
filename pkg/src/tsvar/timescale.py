"""Exact delta/nabla calculus on finite time scales.

A time scale here is a finite, strictly increasing sequence of rational
points.  On such a scale the forward/backward jump operators, graininess
functions, difference quotients, and delta/nabla integrals are all exact
rational computations:

    sigma(t) = next point (sigma(b) = b)      mu(t) = sigma(t) - t
    rho(t)   = previous point (rho(a) = a)    nu(t) = t - rho(t)

    delta derivative   (y(sigma(t)) - y(t)) / mu(t)   on points below b
    nabla derivative   (y(t) - y(rho(t))) / nu(t)     on points above a

    delta integral over [c, d)   sum of mu(t) * f(t)
    nabla integral over (c, d]   sum of nu(t) * f(t)

Dense real intervals are supported only through `DenseSegmentAdapter`, which
samples them uniformly and marks the resulting scale as a discretization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DegenerateTimeScale, DomainError
from .rationals import as_fraction


@dataclass(frozen=True)
class TimeScale:
    """A finite set of rational time points, strictly increasing.

    `discretized` marks scales produced by sampling a dense segment, so that
    downstream reports can disclose the approximation.
    """

    points: tuple[Fraction, ...]
    discretized: bool = False
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.points) < 2:
            raise DegenerateTimeScale(
                f"a time scale needs at least 2 distinct points, got {len(self.points)}"
            )
        if any(s >= t for s, t in zip(self.points, self.points[1:])):
            raise DomainError("time scale points must be strictly increasing")
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.points)})

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, t) -> bool:
        return t in self._index

    @property
    def a(self) -> Fraction:
        return self.points[0]

    @property
    def b(self) -> Fraction:
        return self.points[-1]

    def index(self, t) -> int:
        try:
            return self._index[t]
        except KeyError:
            raise DomainError(f"point {t} does not belong to the time scale") from None

    def sigma(self, t) -> Fraction:
        """Forward jump; sigma(b) = b."""
        i = self.index(t)
        return self.points[min(i + 1, len(self.points) - 1)]

    def rho(self, t) -> Fraction:
        """Backward jump; rho(a) = a."""
        i = self.index(t)
        return self.points[max(i - 1, 0)]

    def mu(self, t) -> Fraction:
        """Forward graininess sigma(t) - t (zero at b)."""
        return self.sigma(t) - t

    def nu(self, t) -> Fraction:
        """Backward graininess t - rho(t) (zero at a)."""
        return t - self.rho(t)

    @property
    def without_last(self) -> tuple[Fraction, ...]:
        """Domain of the delta derivative: every point but the maximum."""
        return self.points[:-1]

    @property
    def without_first(self) -> tuple[Fraction, ...]:
        """Domain of the nabla derivative: every point but the minimum."""
        return self.points[1:]

    @property
    def interior(self) -> tuple[Fraction, ...]:
        """Points where both derivatives exist: extremes removed."""
        return self.points[1:-1]


def build_timescale(points: Iterable, discretized: bool = False) -> TimeScale:
    """Sort, deduplicate, and exact-coerce `points` into a TimeScale.

    Raises DegenerateTimeScale when fewer than 2 distinct points remain.
    """
    distinct = sorted({as_fraction(p) for p in points})
    if len(distinct) < 2:
        raise DegenerateTimeScale(
            f"a time scale needs at least 2 distinct points, got {len(distinct)}"
        )
    return TimeScale(tuple(distinct), discretized=discretized)


def jump_and_graininess(ts: TimeScale, t) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(sigma(t), rho(t), mu(t), nu(t)) for a point of the scale."""
    return ts.sigma(t), ts.rho(t), ts.mu(t), ts.nu(t)


def truncations(ts: TimeScale) -> tuple[tuple, tuple, tuple]:
    """The three truncated domains: (max removed, min removed, both removed)."""
    return ts.without_last, ts.without_first, ts.interior


@dataclass(frozen=True)
class DenseSegmentAdapter:
    """Uniform sampling of a real interval [left, right] into a time scale.

    Expansion yields ``sample_count + 1`` equally spaced points including both
    endpoints; the result is flagged as a discretization.
    """

    left: Fraction
    right: Fraction
    sample_count: int

    def __post_init__(self):
        object.__setattr__(self, "left", as_fraction(self.left))
        object.__setattr__(self, "right", as_fraction(self.right))


def expand_dense_segment(adapter: DenseSegmentAdapter) -> TimeScale:
    if adapter.left >= adapter.right:
        raise DomainError(
            f"dense segment needs left < right, got [{adapter.left}, {adapter.right}]"
        )
    if adapter.sample_count < 1:
        raise DomainError("dense segment needs at least one sample step")
    step = (adapter.right - adapter.left) / adapter.sample_count
    pts = tuple(adapter.left + i * step for i in range(adapter.sample_count + 1))
    return TimeScale(pts, discretized=True)


@dataclass(frozen=True)
class GridFunction:
    """One value per point of a time scale; the discrete trajectory type.

    Values are usually exact Fractions; floats are accepted so the same type
    can carry solver iterates.
    """

    scale: TimeScale
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.scale):
            raise DomainError(
                f"grid function has {len(self.values)} values for "
                f"{len(self.scale)} points"
            )
        object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def from_mapping(cls, scale: TimeScale, mapping: Mapping) -> "GridFunction":
        missing = [t for t in scale if t not in mapping]
        if missing:
            raise DomainError(f"missing values at points {missing}")
        if len(mapping) != len(scale):
            raise DomainError("mapping mentions points outside the scale")
        return cls(scale, tuple(mapping[t] for t in scale))

    @classmethod
    def from_callable(cls, scale: TimeScale, fn: Callable) -> "GridFunction":
        return cls(scale, tuple(fn(t) for t in scale))

    def __call__(self, t):
        return self.values[self.scale.index(t)]

    def sigma_value(self, t):
        """y(sigma(t))."""
        return self.values[self.scale.index(self.scale.sigma(t))]

    def rho_value(self, t):
        """y(rho(t))."""
        return self.values[self.scale.index(self.scale.rho(t))]

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        if self.scale.points != other.scale.points:
            raise DomainError("grid functions live on different scales")
        return GridFunction(self.scale, tuple(u - v for u, v in zip(self.values, other.values)))

    def is_exact(self) -> bool:
        return all(not isinstance(v, float) for v in self.values)


def delta_derivative(y: GridFunction, t):
    """Forward difference quotient at a right-scattered point.

    Undefined at the scale maximum (mu(b) = 0)."""
    ts = y.scale
    if t == ts.b:
        raise DomainError(f"delta derivative is undefined at the maximum point {t}")
    return (y.sigma_value(t) - y(t)) / ts.mu(t)


def nabla_derivative(y: GridFunction, t):
    """Backward difference quotient at a left-scattered point.

    Undefined at the scale minimum (nu(a) = 0)."""
    ts = y.scale
    if t == ts.a:
        raise DomainError(f"nabla derivative is undefined at the minimum point {t}")
    return (y(t) - y.rho_value(t)) / ts.nu(t)


def _span_indices(ts: TimeScale, start, stop) -> tuple[int, int]:
    i, j = ts.index(start), ts.index(stop)
    if i > j:
        raise DomainError(f"reversed integration interval [{start}, {stop}]")
    return i, j


def delta_integral(f: GridFunction, start, stop):
    """Integral of f over [start, stop) weighted by forward graininess."""
    ts = f.scale
    i, j = _span_indices(ts, start, stop)
    total = Fraction(0)
    for t in ts.points[i:j]:
        total += ts.mu(t) * f(t)
    return total


def nabla_integral(f: GridFunction, start, stop):
    """Integral of f over (start, stop] weighted by backward graininess."""
    ts = f.scale
    i, j = _span_indices(ts, start, stop)
    total = Fraction(0)
    for t in ts.points[i + 1 : j + 1]:
        total += ts.nu(t) * f(t)
    return total


def compose_sigma(f: GridFunction) -> GridFunction:
    """The grid function t -> f(sigma(t))."""
    return GridFunction(f.scale, tuple(f.sigma_value(t) for t in f.scale))


def compose_rho(f: GridFunction) -> GridFunction:
    """The grid function t -> f(rho(t))."""
    return GridFunction(f.scale, tuple(f.rho_value(t) for t in f.scale))


def norm_1_inf(y: GridFunction):
    """Sum of the four sup-norms over the interior: |y^sigma|, |y^rho|,
    |y^delta|, |y^nabla|.

    This is the distance used to compare candidate trajectories; it rejects
    two-point scales, whose interior is empty.
    """
    interior = y.scale.interior
    if not interior:
        raise DomainError("the 1,inf norm needs at least one interior point")
    return (
        max(abs(y.sigma_value(t)) for t in interior)
        + max(abs(y.rho_value(t)) for t in interior)
        + max(abs(delta_derivative(y, t)) for t in interior)
        + max(abs(nabla_derivative(y, t)) for t in interior)
    )
