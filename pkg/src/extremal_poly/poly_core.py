"""Monic real-rooted polynomials with overflow-safe discriminants.

Coefficient lists are ascending: coeffs[k] multiplies x**k. Discriminants
are kept as (sign, log|value|) pairs because the values themselves overflow
float64 well before degree 20 for root sets of any realistic spread.

Two independent discriminant routes are provided on purpose: the pairwise
root-difference product, and a Sylvester resultant determinant that only
ever sees coefficients. Agreement between them is what the verification
suite leans on.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InputError, StructureError

# Default tolerances. Evaluation residuals are relative to the largest
# intermediate term, oracle comparisons are relative in log magnitude,
# and structural zero tests are relative to the largest coefficient.
TOL_EVAL = 1e-10
TOL_ORACLE = 1e-8
TOL_STRUCT = 1e-12


@dataclass(frozen=True)
class LogDiscriminant:
    """Discriminant stored as sign in {-1, 0, +1} and natural log of |value|.

    When sign == 0 the log_abs field carries no information (it is set to
    -inf by convention). This doubles as the +infinity-energy sentinel in
    the charge-configuration code.
    """

    sign: int
    log_abs: float

    @property
    def value(self) -> float:
        """Plain float value; overflows to inf for large log_abs."""
        if self.sign == 0:
            return 0.0
        try:
            mag = math.exp(self.log_abs)
        except OverflowError:
            mag = math.inf
        return self.sign * mag

    @classmethod
    def zero(cls) -> "LogDiscriminant":
        return cls(0, float("-inf"))

    @classmethod
    def from_value(cls, x: float) -> "LogDiscriminant":
        if x == 0.0:
            return cls.zero()
        return cls(1 if x > 0 else -1, math.log(abs(x)))


def rel_log_diff(lhs: float, rhs: float) -> float:
    """Relative disagreement of two log magnitudes.

    Floored at scale 1 so that values near log = 0 do not blow the ratio up.
    Signs are compared separately by callers.
    """
    scale = max(1.0, abs(lhs), abs(rhs))
    return abs(lhs - rhs) / scale


@dataclass(frozen=True)
class RealRootedPoly:
    """Monic polynomial of degree d >= 2 with d real roots.

    roots are sorted ascending; coeffs has length d + 1 with coeffs[d] == 1.
    """

    degree: int
    roots: tuple[float, ...]
    coeffs: tuple[float, ...]


class NotAllReal:
    """Sentinel result: the structured polynomial has complex or negative
    squared roots, so a full real root list does not exist."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover
        return "NotAllReal"


NOT_ALL_REAL = NotAllReal()


def _expand_monic(roots) -> list[float]:
    # multiply out prod (x - r) left to right; new[k] = old[k-1] - r*old[k]
    coeffs = [1.0]
    for r in roots:
        nxt = [0.0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= r * c
        coeffs = nxt
    return coeffs


def poly_from_roots(roots) -> RealRootedPoly:
    """Build a monic RealRootedPoly from its real roots (any order)."""
    rs = [float(r) for r in roots]
    if len(rs) < 2:
        raise DomainError("need degree >= 2, got %d roots" % len(rs))
    if not all(math.isfinite(r) for r in rs):
        raise InputError("roots must be finite")
    rs.sort()
    coeffs = _expand_monic(rs)
    return RealRootedPoly(degree=len(rs), roots=tuple(rs), coeffs=tuple(coeffs))


def eval_at(p: RealRootedPoly, z: complex) -> complex:
    """Evaluate via the root product; exact zeros at the stored roots."""
    acc = complex(1.0, 0.0)
    for r in p.roots:
        acc *= z - r
    return acc


def eval_coeffs(coeffs, x: float) -> float:
    """Horner evaluation of an ascending coefficient list."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def coeff_eval_residual(p: RealRootedPoly) -> float:
    """Max over stored roots of |coefficient-form value| relative to the
    largest intermediate Horner term. Small iff roots and coeffs agree."""
    worst = 0.0
    for r in p.roots:
        acc = 0.0
        scale = 1.0
        for c in reversed(p.coeffs):
            acc = acc * r + c
            scale = max(scale, abs(acc), abs(c))
        worst = max(worst, abs(acc) / scale)
    return worst


def modulus_at_ai(p: RealRootedPoly, a: float) -> float:
    """|f(ai)| for height a > 0; equals prod sqrt(a^2 + x_k^2) >= a^d."""
    if a <= 0:
        raise DomainError("height a must be positive")
    prod = 1.0
    for r in p.roots:
        prod *= math.hypot(a, r)
    # each factor is >= a, so the product cannot honestly dip below a^d
    return max(prod, a ** p.degree)


def log_modulus_at_ai(roots, a: float) -> float:
    """log |f(ai)| from roots, safe for any degree."""
    if a <= 0:
        raise DomainError("height a must be positive")
    return math.fsum(math.log(math.hypot(a, r)) for r in roots)


def log_disc_from_roots(p: RealRootedPoly) -> LogDiscriminant:
    """Discriminant from the pairwise root-difference product.

    sign 0 exactly when two stored roots coincide as floats; otherwise +1,
    since the polynomial is monic with all roots real.
    """
    rs = p.roots
    terms = []
    for j in range(len(rs)):
        for k in range(j + 1, len(rs)):
            diff = rs[k] - rs[j]
            if diff == 0.0:
                return LogDiscriminant.zero()
            terms.append(2.0 * math.log(abs(diff)))
    return LogDiscriminant(1, math.fsum(terms))


def _log_det(mat: np.ndarray) -> tuple[int, float]:
    """Determinant of a square matrix as (sign, log|det|).

    Gaussian elimination with partial pivoting; rows are pre-scaled and all
    magnitude bookkeeping happens in logs so nothing overflows.
    """
    a = np.array(mat, dtype=float)
    n = a.shape[0]
    sign = 1
    log_abs = 0.0
    for i in range(n):
        s = np.max(np.abs(a[i]))
        if s == 0.0:
            return 0, float("-inf")
        a[i] /= s
        log_abs += math.log(s)
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0.0:
            return 0, float("-inf")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            sign = -sign
        v = a[col, col]
        sign = sign if v > 0 else -sign
        log_abs += math.log(abs(v))
        a[col + 1 :, col:] -= np.outer(a[col + 1 :, col] / v, a[col, col:])
    return sign, log_abs


def disc_resultant_oracle(coeffs) -> LogDiscriminant:
    """Discriminant via the Sylvester resultant of f and f'.

    Coefficient-only route, independent of any root knowledge:
    disc = (-1)^(d(d-1)/2) * Res(f, f') / c_d. Leading coefficient may be
    any nonzero real.
    """
    cs = [float(c) for c in coeffs]
    d = len(cs) - 1
    if d < 2:
        raise DomainError("degree must be >= 2")
    if cs[-1] == 0.0:
        raise DomainError("leading coefficient must be nonzero")
    if not all(math.isfinite(c) for c in cs):
        raise InputError("coefficients must be finite")
    deriv = [k * cs[k] for k in range(1, d + 1)]
    n = 2 * d - 1
    syl = np.zeros((n, n))
    f_desc = cs[::-1]
    g_desc = deriv[::-1]
    for i in range(d - 1):
        syl[i, i : i + d + 1] = f_desc
    for i in range(d):
        syl[d - 1 + i, i : i + d] = g_desc
    s_res, log_res = _log_det(syl)
    if s_res == 0:
        return LogDiscriminant.zero()
    sign = s_res * (1 if (d * (d - 1) // 2) % 2 == 0 else -1)
    sign *= 1 if cs[-1] > 0 else -1
    return LogDiscriminant(sign, log_res - math.log(abs(cs[-1])))


def _deflate(coeffs: list[float], r: float) -> list[float]:
    # synthetic division by (u - r); input/output ascending
    desc = coeffs[::-1]
    out = [desc[0]]
    for c in desc[1:-1]:
        out.append(c + r * out[-1])
    return out[::-1]


def _polish_root(coeffs: list[float], r: float) -> float:
    # a few Newton steps against the original polynomial; keep only improvements
    deriv = [k * coeffs[k] for k in range(1, len(coeffs))]
    best, best_val = r, abs(eval_coeffs(coeffs, r))
    cur = r
    for _ in range(4):
        dv = eval_coeffs(deriv, cur)
        if dv == 0.0:
            break
        cur = cur - eval_coeffs(coeffs, cur) / dv
        if not math.isfinite(cur):
            break
        v = abs(eval_coeffs(coeffs, cur))
        if v < best_val:
            best, best_val = cur, v
    return best


def _find_one_real_root(coeffs: list[float]) -> float | None:
    # scan a Fujiwara-bounded interval for a sign change, then bisect
    h = len(coeffs) - 1
    lead = coeffs[-1]
    bound = 2.0 * max(
        abs(coeffs[h - k] / lead) ** (1.0 / k) for k in range(1, h + 1)
    )
    bound = max(bound, 1e-300)
    grid = np.linspace(-bound, bound, 4097)
    vals = np.polyval(np.array(coeffs[::-1]), grid)
    exact = np.flatnonzero(vals == 0.0)
    if exact.size:
        return float(grid[exact[0]])
    flips = np.flatnonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))
    if flips.size == 0:
        return None
    i = int(flips[0])
    lo, hi = float(grid[i]), float(grid[i + 1])
    flo = eval_coeffs(coeffs, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = eval_coeffs(coeffs, mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _real_roots_all(coeffs: list[float]) -> tuple[list[float], bool]:
    """All real roots of an ascending-coefficient polynomial.

    Returns (roots, leftover) where leftover is True when a nonreal factor
    remained. Roots found by bracketed bisection plus deflation, each one
    re-polished against the original polynomial. Roots of even multiplicity
    produce no sign change and are reported as leftover.
    """
    original = list(coeffs)
    work = [c / coeffs[-1] for c in coeffs]
    roots: list[float] = []
    while True:
        while len(work) > 1 and work[0] == 0.0:
            roots.append(0.0)
            work = work[1:]
        h = len(work) - 1
        if h == 0:
            return sorted(roots), False
        if h == 1:
            roots.append(-work[0] / work[1])
            return sorted(roots), False
        if h == 2:
            a2, a1, a0 = work[2], work[1], work[0]
            disc = a1 * a1 - 4.0 * a2 * a0
            if disc < 0.0:
                return sorted(roots), True
            sq = math.sqrt(disc)
            if a1 == 0.0 and sq == 0.0:
                roots.extend([0.0, 0.0])
            else:
                q = -0.5 * (a1 + math.copysign(sq, a1))
                r1 = q / a2
                r2 = a0 / q if q != 0.0 else 0.0
                roots.extend([r1, r2])
            return sorted(roots), False
        r = _find_one_real_root(work)
        if r is None:
            return sorted(roots), True
        r = _polish_root(original, r)
        roots.append(r)
        work = _deflate(work, r)


def even_odd_structured_roots(coeffs):
    """Real roots of a polynomial whose nonzero coefficients all share the
    degree's parity (even powers only, or odd powers only).

    Substituting u = x^2 halves the degree; u-roots are found by bracketed
    bisection with deflation and mapped back through +-sqrt(u). Returns the
    sorted root list, or the NOT_ALL_REAL sentinel when any u-root is
    negative or complex. Raises StructureError when the parity pattern is
    violated beyond TOL_STRUCT relative.
    """
    cs = [float(c) for c in coeffs]
    d = len(cs) - 1
    if d < 2:
        raise DomainError("degree must be >= 2")
    if cs[-1] == 0.0:
        raise DomainError("leading coefficient must be nonzero")
    scale = max(abs(c) for c in cs)
    parity = d % 2
    for i, c in enumerate(cs):
        if i % 2 != parity and abs(c) > TOL_STRUCT * scale:
            raise StructureError(
                "coefficient of x^%d breaks the even/odd structure" % i
            )
    half = cs[parity::2]
    uroots, leftover = _real_roots_all(half)
    if leftover:
        return NOT_ALL_REAL
    neg_tol = 1e-12 * max(1.0, max((abs(u) for u in uroots), default=0.0))
    xs: list[float] = [0.0] if parity else []
    for u in uroots:
        if u < -neg_tol:
            return NOT_ALL_REAL
        s = math.sqrt(max(u, 0.0))
        xs.extend((-s, s))
    xs.sort()
    return xs


def quartic_disc(c2: float, c0: float) -> float:
    """Discriminant of x^4 + c2 x^2 + c0."""
    return 256.0 * c0**3 - 128.0 * c2**2 * c0**2 + 16.0 * c2**4 * c0


def quintic_disc(c2: float, c0: float) -> float:
    """Discriminant of x^5 + c2 x^3 + c0 x."""
    return quartic_disc(c2, c0) * c0**2


def descartes_real_root_bound(coeffs) -> int:
    """Upper bound on the number of real roots (with multiplicity) from
    sign changes: V(f) + V(f(-x)) + multiplicity of the root at 0."""
    cs = [float(c) for c in coeffs]
    while cs and cs[-1] == 0.0:
        cs.pop()
    if not cs:
        raise DomainError("zero polynomial")

    def changes(seq):
        nz = [c for c in seq if c != 0.0]
        return sum(1 for x, y in zip(nz, nz[1:]) if (x > 0) != (y > 0))

    mult0 = 0
    while mult0 < len(cs) and cs[mult0] == 0.0:
        mult0 += 1
    flipped = [(-1) ** k * c for k, c in enumerate(cs)]
    return changes(cs) + changes(flipped) + mult0
