"""Products of cosines and sines over arithmetic lattices of angles.

These identities are the combinatorial engine behind the discriminant
bounds: a product of squared cosines over a pi/d lattice collapses to a
single sine, and the pairwise sine product of any d angles is maximised
exactly by such a lattice.
"""

import math

from .errors import DomainError


def _check_d(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise DomainError("d must be an integer >= 2")


def cos_sq_product(x: float, d: int) -> float:
    """prod_{k=0}^{d-1} cos^2(x + pi k / d)."""
    _check_d(d)
    prod = 1.0
    for k in range(d):
        prod *= math.cos(x + math.pi * k / d) ** 2
    return prod


def cos_sq_product_closed_form(x: float, d: int) -> float:
    """Closed form of cos_sq_product: 2^(2-2d) cos^2(dx) for odd d,
    2^(2-2d) sin^2(dx) for even d."""
    _check_d(d)
    t = math.cos(d * x) if d % 2 else math.sin(d * x)
    return 2.0 ** (2 - 2 * d) * t * t


def sine_product_identity_residual(x: float, d: int) -> float:
    """sin(dx) - 2^(d-1) prod_{k=0}^{d-1} sin(x + pi k / d); zero in exact
    arithmetic for every x."""
    _check_d(d)
    prod = 1.0
    for k in range(d):
        prod *= math.sin(x + math.pi * k / d)
    return math.sin(d * x) - 2.0 ** (d - 1) * prod


def pairwise_sin_sq_product(ys) -> float:
    """prod_{j<k} sin^2(y_j - y_k) for d >= 2 angles.

    Angles are first shifted by their minimum and reduced mod pi; both
    operations leave every sin^2 of a difference unchanged.
    """
    vals = [float(y) for y in ys]
    if len(vals) < 2:
        raise DomainError("need at least two angles")
    base = min(vals)
    vals = [math.fmod(y - base, math.pi) for y in vals]
    prod = 1.0
    for j in range(len(vals)):
        for k in range(j + 1, len(vals)):
            prod *= math.sin(vals[j] - vals[k]) ** 2
    return prod


def log_hadamard_bound(d: int) -> float:
    """log of the sharp upper bound for pairwise_sin_sq_product."""
    _check_d(d)
    return d * math.log(d) - d * (d - 1) * math.log(2.0)


def hadamard_bound(d: int) -> float:
    """Sharp upper bound 2^(-d(d-1)) d^d, attained exactly when the sorted
    angles form an arithmetic progression with difference pi/d."""
    return math.exp(log_hadamard_bound(d))
