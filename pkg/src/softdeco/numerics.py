"""Special functions and quadrature engines.

Two integrators carry all of the numerical work: a product Gauss-Legendre x
trapezoid rule on the unit sphere, and a panelled Gauss-Legendre rule on
frequency intervals with panels aligned to the oscillation period 2*pi/tau.
Both report an error gauge obtained by doubling the resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

__all__ = [
    "EULER_GAMMA",
    "FINE_STRUCTURE_ALPHA",
    "E2_ELECTRON",
    "QuadratureSpec",
    "QuadratureResult",
    "cosine_integral",
    "atanh_over_x",
    "bessel_k2",
    "sphere_integrate",
    "freq_integrate",
]

EULER_GAMMA = 0.57721566490153286061
FINE_STRUCTURE_ALPHA = 1.0 / 137.035999
E2_ELECTRON = 4.0 * math.pi * FINE_STRUCTURE_ALPHA

_GL_NODES = 12  # base Gauss-Legendre order per frequency panel
_PANEL_CHUNK = 32768  # panels per vectorized block


@dataclass(frozen=True)
class QuadratureSpec:
    """Grid sizes and tolerances shared by every quadrature call."""

    n_theta: int = 48
    n_phi: int = 96
    panels_per_period: int = 4
    abs_tol: float = 1e-12
    rel_tol: float = 1e-8

    def __post_init__(self):
        if self.n_theta < 8:
            raise ValueError("n_theta must be >= 8")
        if self.n_phi < 16:
            raise ValueError("n_phi must be >= 16")
        if self.panels_per_period < 4:
            raise ValueError("panels_per_period must be >= 4")
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be > 0")


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate with a grid-doubling error gauge."""

    value: float
    error: float
    converged: bool

    def __float__(self):
        return self.value


def cosine_integral(x: float) -> float:
    """Cosine integral Ci(x) = gamma_EM + ln(x) - int_0^x (1-cos t)/t dt, x > 0."""
    if x <= 0:
        raise ValueError("cosine_integral requires x > 0")
    _, ci = _sp.sici(x)
    return float(ci)


def atanh_over_x(x: float) -> float:
    """atanh(x)/x on [0, 1), with the x -> 0 limit taken by series."""
    if x < 0 or x >= 1:
        raise ValueError("atanh_over_x requires 0 <= x < 1")
    if x < 1e-4:
        x2 = x * x
        return 1.0 + x2 / 3.0 + x2 * x2 / 5.0
    return float(np.arctanh(x) / x)


def bessel_k2(x: float) -> float:
    """Modified Bessel function K_2 via the recurrence K_2 = K_0 + 2 K_1 / x.

    Grows like 2/x^2 for x -> 0; values below x ~ 1e-3 are returned as-is
    and are large but nowhere near overflow.
    """
    if x <= 0:
        raise ValueError("bessel_k2 requires x > 0")
    return float(_sp.k0(x) + 2.0 * _sp.k1(x) / x)


def _sphere_grid(n_theta: int, n_phi: int):
    u, wu = np.polynomial.legendre.leggauss(n_theta)  # u = cos(theta)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    s = np.sqrt(1.0 - u * u)
    nx = np.outer(s, np.cos(phi)).ravel()
    ny = np.outer(s, np.sin(phi)).ravel()
    nz = np.outer(u, np.ones(n_phi)).ravel()
    w = np.outer(wu, np.full(n_phi, 2.0 * np.pi / n_phi)).ravel()
    return nx, ny, nz, w


def _sphere_pass(f, n_theta, n_phi):
    nx, ny, nz, w = _sphere_grid(n_theta, n_phi)
    vals = np.asarray(f(nx, ny, nz), dtype=float)
    return float(np.sum(w * vals))


def sphere_integrate(f, spec: QuadratureSpec = QuadratureSpec()) -> QuadratureResult:
    """Integrate f(nx, ny, nz) over the unit sphere.

    f must accept numpy arrays of direction components.  Gauss-Legendre in
    cos(theta) and periodic trapezoid in phi converge spectrally for smooth
    integrands; the error gauge compares against a doubled grid.
    """
    coarse = _sphere_pass(f, spec.n_theta, spec.n_phi)
    fine = _sphere_pass(f, 2 * spec.n_theta, 2 * spec.n_phi)
    err = abs(fine - coarse)
    converged = err <= spec.abs_tol + spec.rel_tol * abs(fine)
    return QuadratureResult(fine, err, converged)


def _panel_edges(lo: float, hi: float, tau: float, panels_per_period: int) -> np.ndarray:
    if tau > 0:
        width = 2.0 * np.pi / (tau * panels_per_period)
    else:
        width = (hi - lo) / (8 * panels_per_period)
    width = min(width, (hi - lo) / panels_per_period)
    # period-aligned linear panels over the bulk of the interval
    first = lo + width
    main = np.arange(first, hi, width)
    edges = [lo]
    # geometric refinement toward lo when the first panel spans many octaves
    if lo > 0 and width > 8 * lo:
        e = 2.0 * lo
        while e < first:
            edges.append(e)
            e *= 2.0
    edges.extend(main.tolist())
    edges.append(hi)
    return np.unique(np.asarray(edges, dtype=float))


def _panel_pass(g, edges: np.ndarray, order: int) -> float:
    x, wx = np.polynomial.legendre.leggauss(order)
    left = edges[:-1]
    half = 0.5 * np.diff(edges)
    mid = left + half
    total = 0.0
    for start in range(0, len(mid), _PANEL_CHUNK):
        m = mid[start : start + _PANEL_CHUNK, None]
        h = half[start : start + _PANEL_CHUNK, None]
        nodes = m + h * x[None, :]
        weights = h * wx[None, :]
        vals = np.asarray(g(nodes.ravel()), dtype=float)
        total += float(np.sum(weights.ravel() * vals))
    return total


def freq_integrate(
    g,
    lo: float,
    hi: float,
    tau: float,
    spec: QuadratureSpec = QuadratureSpec(),
) -> QuadratureResult:
    """Integrate g(omega) over [lo, hi] with period-aligned Gauss-Legendre panels.

    g must accept a numpy array of frequencies.  Panels of width
    2*pi/(tau*panels_per_period) resolve the oscillation; the leading panel
    is subdivided geometrically when lo is far below the panel scale so
    that 1/omega factors are handled robustly.  All nodes are interior, so
    lo = 0 is admissible whenever g is bounded there.
    """
    if not lo < hi:
        raise ValueError("freq_integrate requires lo < hi")
    if lo < 0:
        raise ValueError("freq_integrate requires lo >= 0")
    edges = _panel_edges(lo, hi, tau, spec.panels_per_period)
    coarse = _panel_pass(g, edges, _GL_NODES)
    fine = _panel_pass(g, edges, 2 * _GL_NODES)
    err = abs(fine - coarse)
    converged = err <= spec.abs_tol + spec.rel_tol * abs(fine)
    return QuadratureResult(fine, err, converged)
