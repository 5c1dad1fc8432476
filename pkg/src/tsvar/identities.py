"""Exact identity checks for the delta/nabla calculus.

Every identity below holds with exact rational equality on finite isolated
scales, for arbitrary grid functions:

* four integration-by-parts formulas (two delta, two nabla),
* derivative conversion in both directions (nabla at t equals delta at
  rho(t), delta at t equals nabla at sigma(t)),
* integral conversion in both directions (delta of f equals nabla of
  f composed with rho, and vice versa),
* four endpoint-splitting formulas (first/last summand peeled off either
  integral).

`run_identity_suite` drives them over randomly generated scales and grid
functions and reports pass counts per identity; any failure is a bug.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .timescale import (
    GridFunction,
    TimeScale,
    build_timescale,
    compose_rho,
    compose_sigma,
    delta_derivative,
    delta_integral,
    nabla_derivative,
    nabla_integral,
)

IDENTITY_NAMES = (
    "parts_delta_fsigma_gdelta",
    "parts_delta_f_gdelta",
    "parts_nabla_frho_gnabla",
    "parts_nabla_f_gnabla",
    "derivative_nabla_from_delta",
    "derivative_delta_from_nabla",
    "integral_delta_to_nabla",
    "integral_nabla_to_delta",
    "split_delta_last",
    "split_delta_first",
    "split_nabla_last",
    "split_nabla_first",
)


def _boundary_term(f: GridFunction, g: GridFunction):
    ts = f.scale
    return f(ts.b) * g(ts.b) - f(ts.a) * g(ts.a)


def check_integration_by_parts(f: GridFunction, g: GridFunction) -> dict[str, bool]:
    """The four product-rule integral identities, checked exactly."""
    ts = f.scale
    a, b = ts.a, ts.b

    def gf(values):
        return GridFunction(ts, tuple(values))

    # Derivative grids carry a zero placeholder at the point where the
    # quotient is undefined; the integrals never sample it.
    f_delta = gf(delta_derivative(f, t) if t != b else 0 for t in ts)
    g_delta = gf(delta_derivative(g, t) if t != b else 0 for t in ts)
    f_nabla = gf(nabla_derivative(f, t) if t != a else 0 for t in ts)
    g_nabla = gf(nabla_derivative(g, t) if t != a else 0 for t in ts)
    f_sigma, g_sigma = compose_sigma(f), compose_sigma(g)
    f_rho, g_rho = compose_rho(f), compose_rho(g)

    def prod(u, v):
        return gf(u(t) * v(t) for t in ts)

    boundary = _boundary_term(f, g)
    return {
        "parts_delta_fsigma_gdelta": delta_integral(prod(f_sigma, g_delta), a, b)
        == boundary - delta_integral(prod(f_delta, g), a, b),
        "parts_delta_f_gdelta": delta_integral(prod(f, g_delta), a, b)
        == boundary - delta_integral(prod(f_delta, g_sigma), a, b),
        "parts_nabla_frho_gnabla": nabla_integral(prod(f_rho, g_nabla), a, b)
        == boundary - nabla_integral(prod(f_nabla, g), a, b),
        "parts_nabla_f_gnabla": nabla_integral(prod(f, g_nabla), a, b)
        == boundary - nabla_integral(prod(f_nabla, g_rho), a, b),
    }


def check_derivative_conversion(f: GridFunction) -> dict[str, bool]:
    """nabla at t vs delta at rho(t), and delta at t vs nabla at sigma(t)."""
    ts = f.scale
    return {
        "derivative_nabla_from_delta": all(
            nabla_derivative(f, t) == delta_derivative(f, ts.rho(t))
            for t in ts.without_first
        ),
        "derivative_delta_from_nabla": all(
            delta_derivative(f, t) == nabla_derivative(f, ts.sigma(t))
            for t in ts.without_last
        ),
    }


def check_integral_conversion(f: GridFunction) -> dict[str, bool]:
    ts = f.scale
    a, b = ts.a, ts.b
    return {
        "integral_delta_to_nabla": delta_integral(f, a, b)
        == nabla_integral(compose_rho(f), a, b),
        "integral_nabla_to_delta": nabla_integral(f, a, b)
        == delta_integral(compose_sigma(f), a, b),
    }


def check_endpoint_splitting(f: GridFunction) -> dict[str, bool]:
    """Peeling the first or last weighted summand off either integral."""
    ts = f.scale
    a, b = ts.a, ts.b
    rb, sa = ts.rho(b), ts.sigma(a)
    return {
        "split_delta_last": delta_integral(f, a, b)
        == delta_integral(f, a, rb) + (b - rb) * f(rb),
        "split_delta_first": delta_integral(f, a, b)
        == (sa - a) * f(a) + delta_integral(f, sa, b),
        "split_nabla_last": nabla_integral(f, a, b)
        == nabla_integral(f, a, rb) + (b - rb) * f(b),
        "split_nabla_first": nabla_integral(f, a, b)
        == (sa - a) * f(sa) + nabla_integral(f, sa, b),
    }


def check_all_identities(f: GridFunction, g: GridFunction) -> dict[str, bool]:
    results = {}
    results.update(check_integration_by_parts(f, g))
    results.update(check_derivative_conversion(f))
    results.update(check_integral_conversion(f))
    results.update(check_endpoint_splitting(f))
    return results


def random_scale(rng: random.Random, min_points: int = 2, max_points: int = 12) -> TimeScale:
    """A random finite scale of rationals with small numerators/denominators."""
    n = rng.randint(min_points, max_points)
    pool = set()
    while len(pool) < n:
        pool.add(Fraction(rng.randint(-60, 60), rng.randint(1, 12)))
    return build_timescale(pool)


def random_grid_function(rng: random.Random, ts: TimeScale) -> GridFunction:
    values = tuple(Fraction(rng.randint(-40, 40), rng.randint(1, 10)) for _ in ts)
    return GridFunction(ts, values)


@dataclass
class IdentityReport:
    """Pass/total counters per identity over a batch of randomized checks."""

    passed: dict[str, int] = field(default_factory=lambda: {k: 0 for k in IDENTITY_NAMES})
    total: dict[str, int] = field(default_factory=lambda: {k: 0 for k in IDENTITY_NAMES})

    def record(self, results: dict[str, bool]) -> None:
        for name, ok in results.items():
            self.total[name] += 1
            if ok:
                self.passed[name] += 1

    @property
    def all_passed(self) -> bool:
        return all(self.passed[k] == self.total[k] for k in IDENTITY_NAMES)

    @property
    def failures(self) -> int:
        return sum(self.total[k] - self.passed[k] for k in IDENTITY_NAMES)


def run_identity_suite(
    rounds: int = 200,
    seed: int = 0,
    extra_scales: tuple[TimeScale, ...] = (),
) -> IdentityReport:
    """Check every identity on `rounds` random scales plus any given scales."""
    rng = random.Random(seed)
    report = IdentityReport()
    scales = list(extra_scales) + [random_scale(rng) for _ in range(rounds)]
    for ts in scales:
        f = random_grid_function(rng, ts)
        g = random_grid_function(rng, ts)
        report.record(check_all_identities(f, g))
    return report
