"""Inscribed disks of polynomial lemniscates.

The lemniscate of a monic real-rooted f at level 1 is the region
|f(x+iy)| <= 1. For real-rooted f it is a union of closed disks centered
on the real line, so the largest inscribed disk has its center on the
axis and its radius equals the maximal vertical halfwidth. The dual
solvers control that halfwidth through |f(c + ai)|, which is what ties
this module to the rest of the package.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import binomial_family as bf
from .errors import DomainError, InputError
from .poly_core import (
    RealRootedPoly,
    log_disc_from_roots,
    log_modulus_at_ai,
    poly_from_roots,
    rel_log_diff,
)

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class DiskResult:
    """Largest inscribed disk centered at center_x on the real axis.
    boundary_point is the top of the disk, where |f| = 1; has_interior is
    False when every scanned center gave halfwidth 0 (radius 0)."""

    center_x: float
    radius: float
    boundary_point: complex
    has_interior: bool


def log_abs_at(roots, x: float, y: float) -> float:
    """log |f(x+iy)| from the root product; -inf at a root.

    Factor moduli near 1 go through log1p of the squared excess, which
    stays resolvable where hypot would round |x+iy-r| to exactly 1.
    """
    total = 0.0
    yy = y * y
    for r in roots:
        dx = x - r
        q = (dx - 1.0) * (dx + 1.0) + yy
        if q > -0.5:
            total += 0.5 * math.log1p(q)
        else:
            h = math.hypot(dx, y)
            if h == 0.0:
                return -math.inf
            total += math.log(h)
    return total


def vertical_halfwidth(p: RealRootedPoly, x: float) -> float:
    """Largest y >= 0 with |f(x + iy)| <= 1, by bisection.

    |f(x+iy)| increases strictly in y >= 0 (each root factor does), and
    exceeds 1 once y > 1, so [0, 1] always brackets. Returns 0 when the
    real axis point itself lies outside the lemniscate.
    """
    if not math.isfinite(x):
        raise InputError("x must be finite")
    return _halfwidth(p.roots, x)


def _halfwidth(roots, x: float) -> float:
    if log_abs_at(roots, x, 0.0) > 0.0:
        return 0.0
    lo, hi = 0.0, 1.0
    if log_abs_at(roots, x, hi) <= 0.0:
        return hi
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if log_abs_at(roots, x, mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _halfwidth_grid(roots: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Vectorised _halfwidth over many centers at once."""

    dxs = xs[:, None] - roots[None, :]

    def logf(y: np.ndarray) -> np.ndarray:
        q = (dxs - 1.0) * (dxs + 1.0) + y[:, None] ** 2
        h = np.hypot(dxs, y[:, None])
        with np.errstate(divide="ignore"):
            terms = np.where(
                q > -0.5, 0.5 * np.log1p(np.maximum(q, -0.5)), np.log(h)
            )
        return np.sum(terms, axis=1)

    inside = logf(np.zeros_like(xs)) <= 0.0
    lo = np.zeros_like(xs)
    hi = np.ones_like(xs)
    at_one = logf(np.ones_like(xs)) <= 0.0
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        below = logf(mid) <= 0.0
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    out = 0.5 * (lo + hi)
    out[at_one] = 1.0
    out[~inside] = 0.0
    return out


def largest_disk(
    p: RealRootedPoly, interval: tuple[float, float] | None = None
) -> DiskResult:
    """Largest disk centered on the real axis inside |f| <= 1.

    The radius equals the maximal vertical halfwidth (disk-union
    structure of real-rooted lemniscates). Candidate centers are a
    uniform grid of 64 d points over the interval (default: root span
    padded by 1, outside which |f| > 1 always) plus the roots themselves,
    whose halfwidths are positive no matter how coarse the grid; the best
    candidate is refined by golden-section search to center accuracy
    1e-10.
    """
    rs = np.asarray(p.roots, dtype=float)
    if interval is None:
        interval = (float(rs[0]) - 1.0, float(rs[-1]) + 1.0)
    lo_b, hi_b = float(interval[0]), float(interval[1])
    if not (math.isfinite(lo_b) and math.isfinite(hi_b)) or hi_b <= lo_b:
        raise InputError("interval must be finite with positive width")

    n = 64 * rs.size
    grid = np.linspace(lo_b, hi_b, n)
    candidates = np.concatenate([grid, rs[(rs >= lo_b) & (rs <= hi_b)]])
    widths = _halfwidth_grid(rs, candidates)
    j = int(np.argmax(widths))
    best_c, best_r = float(candidates[j]), float(widths[j])

    if best_r <= 0.0:
        return DiskResult(
            center_x=best_c, radius=0.0,
            boundary_point=complex(best_c, 0.0), has_interior=False,
        )

    roots = [float(r) for r in rs]
    step = (hi_b - lo_b) / (n - 1)
    a_end = max(best_c - step, lo_b)
    b_end = min(best_c + step, hi_b)
    x1 = b_end - _GOLDEN * (b_end - a_end)
    x2 = a_end + _GOLDEN * (b_end - a_end)
    f1, f2 = _halfwidth(roots, x1), _halfwidth(roots, x2)
    while b_end - a_end > 1e-10:
        if f1 < f2:
            a_end, x1, f1 = x1, x2, f2
            x2 = a_end + _GOLDEN * (b_end - a_end)
            f2 = _halfwidth(roots, x2)
        else:
            b_end, x2, f2 = x2, x1, f1
            x1 = b_end - _GOLDEN * (b_end - a_end)
            f1 = _halfwidth(roots, x1)
    c = 0.5 * (a_end + b_end)
    r = _halfwidth(roots, c)
    if r < best_r:
        c, r = best_c, best_r
    return DiskResult(
        center_x=c, radius=r, boundary_point=complex(c, r), has_interior=True
    )


def radius_upper_bound(d: int, disc: float) -> float:
    """Upper bound on the inscribed-disk radius over all degree-d unit
    lemniscates whose polynomial has discriminant >= disc."""
    _check_bound_args(d, disc)
    log_r = (
        math.log(d) / (d - 1.0)
        - math.log(2.0)
        - math.log(disc) / (d * (d - 1.0))
    )
    return math.exp(log_r)


def radius_lower_bound(d: int, disc: float) -> float | None:
    """Guaranteed inscribed-disk radius 2^(2/d-1) d^(-1/(d-1)), valid for
    1 <= disc <= 2^(1-d) d^d; None outside that window.

    The witness height grows with disc, so its value at disc = 1 bounds
    the whole window from below.
    """
    _check_bound_args(d, disc)
    log_disc = math.log(disc)
    if log_disc < 0.0 or log_disc > (1.0 - d) * math.log(2.0) + d * math.log(d):
        return None
    return _witness_height(d, 0.0)


def _check_bound_args(d: int, disc: float) -> None:
    if not isinstance(d, int) or d < 2:
        raise DomainError("d must be an integer >= 2")
    if disc <= 0 or not math.isfinite(disc):
        raise DomainError("discriminant must be positive and finite")


def _witness_height(d: int, log_disc: float) -> float:
    return math.exp(
        (2.0 / d - 1.0) * math.log(2.0)
        - math.log(d) / (d - 1.0)
        + log_disc / (d * (d - 1.0))
    )


def inscribed_disk_poly(d: int, disc: float) -> tuple[RealRootedPoly, float, float]:
    """(poly, height, value): the even binomial member of discriminant
    disc, centered at the origin, evaluated at its natural height.

    value = |f(i height)| = 2 d^(-d/(d-1)) disc^(1/(d-1)); whenever
    value <= 1 (equivalently disc <= 2^(1-d) d^d) the unit lemniscate of
    f contains the disk of radius height around 0, which realises
    radius_lower_bound. The member is cross-checked at runtime (modulus
    to 1e-9 relative, discriminant to 1e-8 relative in log) and a failure
    raises RuntimeError.
    """
    _check_bound_args(d, disc)
    log_disc = math.log(disc)
    height = _witness_height(d, log_disc)
    phase = 0.0 if d % 2 else math.pi / (2.0 * d)
    poly = poly_from_roots(bf.tangent_lattice_roots(height, d, phase))
    log_value = (
        math.log(2.0) - d * math.log(d) / (d - 1.0) + log_disc / (d - 1.0)
    )
    got = log_modulus_at_ai(poly.roots, height)
    if abs(got - log_value) > 1e-9:
        raise RuntimeError("modulus consistency check failed")
    got_disc = log_disc_from_roots(poly)
    if got_disc.sign != 1 or rel_log_diff(got_disc.log_abs, log_disc) > 1e-8:
        raise RuntimeError("discriminant consistency check failed")
    return poly, height, math.exp(log_value)
