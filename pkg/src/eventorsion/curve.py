"""Curve family model and exact point arithmetic.

A triple (m, n, D) with D squarefree encodes the curve

    y^2 = x * (x + M) * (x + N),    M = m + n*sqrt(D),  N = m - n*sqrt(D),

which expands over the rationals to the integral model

    y^2 = x^3 + 2m*x^2 + q*x,       q = M*N = m^2 - n^2*D.

All arithmetic is exact; points carry Fraction coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import intmath


class InvalidCurveError(ValueError):
    """Input does not define a member of the curve family."""


class SingularCurveError(InvalidCurveError):
    """The cubic has a repeated root."""


class NoRationalTwoTorsionError(InvalidCurveError):
    """The cubic has no rational root, so there is no rational 2-torsion."""


class PointNotOnCurveError(ValueError):
    """An affine point fails the curve equation."""


@dataclass(frozen=True)
class CurveMND:
    """Normalized curve datum (m, n, D)."""

    m: int
    n: int
    D: int

    def __post_init__(self) -> None:
        if self.n == 0:
            raise InvalidCurveError("n must be nonzero")
        if self.D in (0, 1) or not intmath.is_squarefree(self.D):
            raise InvalidCurveError(f"D={self.D} must be squarefree, not 0 or 1")
        if not intmath.is_squarefree(math.gcd(self.m, self.n)):
            raise InvalidCurveError(
                f"gcd(m, n) = gcd({self.m}, {self.n}) must be squarefree"
            )
        # Automatic for squarefree D not in {0, 1}, asserted anyway.
        if self.m * self.m == self.n * self.n * self.D:
            raise InvalidCurveError("singular: m^2 = n^2 * D")

    @property
    def q(self) -> int:
        """Linear coefficient q = M*N = m^2 - n^2*D."""
        return self.m * self.m - self.n * self.n * self.D

    def rhs(self, x: Fraction | int) -> Fraction | int:
        """Right-hand side x^3 + 2m*x^2 + q*x of the curve equation."""
        return ((x + 2 * self.m) * x + self.q) * x

    def contains(self, point: "Point") -> bool:
        if point.is_infinity:
            return True
        return point.y * point.y == self.rhs(point.x)

    def to_cubic(self) -> "GeneralCubic":
        return GeneralCubic(2 * self.m, self.q, 0)

    def __str__(self) -> str:
        return f"(m={self.m}, n={self.n}, D={self.D}): y^2 = x^3 + {2 * self.m}*x^2 + {self.q}*x"


@dataclass(frozen=True)
class Point:
    """Affine point with exact rational coordinates, or the point at infinity.

    Point() is the point at infinity; module constant INFINITY is provided.
    """

    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates or neither")
        if self.x is not None and not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", Fraction(self.x))
        if self.y is not None and not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def is_integral(self) -> bool:
        """True for infinity and for affine points with integer coordinates."""
        if self.is_infinity:
            return True
        return self.x.denominator == 1 and self.y.denominator == 1

    def __neg__(self) -> "Point":
        if self.is_infinity:
            return self
        return Point(self.x, -self.y)

    def __str__(self) -> str:
        if self.is_infinity:
            return "infinity"
        return f"({self.x}, {self.y})"


INFINITY = Point()


@dataclass(frozen=True)
class GeneralCubic:
    """Curve y^2 = x^3 + a2*x^2 + a4*x + a6 with rational coefficients."""

    a2: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self) -> None:
        for name in ("a2", "a4", "a6"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))

    def discriminant(self) -> Fraction:
        a, b, c = self.a2, self.a4, self.a6
        b2 = 4 * a
        b4 = 2 * b
        b6 = 4 * c
        b8 = 4 * a * c - b * b
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j_invariant(self) -> Fraction:
        disc = self.discriminant()
        if disc == 0:
            raise SingularCurveError("j undefined for singular cubic")
        c4 = 16 * self.a2 * self.a2 - 48 * self.a4
        return c4**3 / disc


@dataclass(frozen=True)
class NonCyclicReport:
    """The cubic has three rational roots: full rational 2-torsion, so the
    torsion subgroup is not cyclic and the curve is outside this family."""

    roots: tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class QuadElement:
    """Element e + f*sqrt(D) of the quadratic field Q(sqrt(D))."""

    e: Fraction
    f: Fraction
    D: int

    def __post_init__(self) -> None:
        if not isinstance(self.e, Fraction):
            object.__setattr__(self, "e", Fraction(self.e))
        if not isinstance(self.f, Fraction):
            object.__setattr__(self, "f", Fraction(self.f))
        if self.D in (0, 1) or not intmath.is_squarefree(self.D):
            raise ValueError(f"D={self.D} must be squarefree, not 0 or 1")


def normalize(m: int, n: int, d_raw: int) -> CurveMND:
    """Build the normalized curve datum from a general (m, n, D) triple.

    Absorbs the square part of d_raw into n, canonicalizes n > 0 (swapping
    the conjugates M and N leaves the curve unchanged), then divides (m, n)
    by the square part of their gcd.  The result is Q-isomorphic to the
    input curve.
    """
    if n == 0:
        raise InvalidCurveError("n must be nonzero")
    if d_raw == 0:
        raise InvalidCurveError("D must be nonzero")
    if intmath.int_sqrt(n * n * d_raw) is not None:
        raise InvalidCurveError(
            f"n^2*D = {n * n * d_raw} is a perfect square: the quadratic "
            "factor is reducible (full rational 2-torsion, outside this family)"
        )
    d, d0 = intmath.squarefree_split(d_raw)
    n = abs(n * d)
    g = math.gcd(m, n)
    e = intmath.squarefree_split(g).square_part
    if e > 1:
        m //= e * e
        n //= e * e
    return CurveMND(m, n, d0)


def _integer_roots_monic_quadratic(b: int, c: int) -> list[int]:
    """Integer roots of x^2 + b*x + c."""
    r = intmath.int_sqrt(b * b - 4 * c)
    if r is None:
        return []
    roots = []
    for s in {r, -r}:
        num = -b + s
        if num % 2 == 0:
            roots.append(num // 2)
    return roots


def _integer_roots_monic_cubic(b: int, c: int, d: int) -> list[int]:
    """Integer roots of x^3 + b*x^2 + c*x + d, via divisors of the constant."""
    roots: set[int] = set()
    if d == 0:
        roots.add(0)
        roots.update(_integer_roots_monic_quadratic(b, c))
    else:
        for t in intmath.divisors(d):
            for x in (t, -t):
                if ((x + b) * x + c) * x + d == 0:
                    roots.add(x)
    return sorted(roots)


def from_general(cubic: GeneralCubic) -> CurveMND | NonCyclicReport:
    """Recognize a general rational cubic as a member of the family.

    Scales to an integer monic model, finds its rational roots, translates
    the single rational root to 0, rescales once more by 2 if needed so the
    middle coefficient is even, and normalizes.  Three rational roots yield
    a NonCyclicReport; zero rational roots are rejected.
    """
    if cubic.discriminant() == 0:
        raise SingularCurveError("cubic has a repeated root")
    scale = math.lcm(
        cubic.a2.denominator, cubic.a4.denominator, cubic.a6.denominator
    )
    b = int(cubic.a2 * scale**2)
    c = int(cubic.a4 * scale**4)
    d = int(cubic.a6 * scale**6)
    roots = _integer_roots_monic_cubic(b, c, d)
    if not roots:
        raise NoRationalTwoTorsionError(
            "cubic has no rational root: no rational point of order 2"
        )
    if len(roots) >= 3:
        return NonCyclicReport(
            tuple(sorted(Fraction(r, scale**2) for r in roots))
        )
    # A monic rational cubic with two rational roots has a rational third
    # root, so exactly one root remains here.
    (r,) = roots
    b2 = 3 * r + b
    b4 = (3 * r + 2 * b) * r + c
    if b2 % 2:
        b2 *= 4
        b4 *= 16
    m = b2 // 2
    s = m * m - b4  # n^2 * D; nonzero and nonsquare when the root was unique
    n, d0 = intmath.squarefree_split(s)
    return normalize(m, n, d0)


def _require_on_curve(c: CurveMND, point: Point) -> None:
    if not c.contains(point):
        raise PointNotOnCurveError(f"{point} is not on {c}")


def _add_raw(c: CurveMND, p: Point, q: Point) -> Point:
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return INFINITY
        lam = (3 * p.x * p.x + 4 * c.m * p.x + c.q) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - 2 * c.m - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return Point(x3, y3)


def add(c: CurveMND, p: Point, q: Point) -> Point:
    """Chord-tangent group law; infinity is the identity."""
    _require_on_curve(c, p)
    _require_on_curve(c, q)
    return _add_raw(c, p, q)


def mul(c: CurveMND, k: int, p: Point) -> Point:
    """Scalar multiple k*p by repeated addition (small k only)."""
    _require_on_curve(c, p)
    if k < 0:
        return mul(c, -k, -p)
    acc = INFINITY
    for _ in range(k):
        acc = _add_raw(c, acc, p)
    return acc


def double_x(c: CurveMND, p: Point) -> Fraction:
    """x(2P) via the closed form ((x^2 - q) / (2y))^2, q = M*N."""
    _require_on_curve(c, p)
    if p.is_infinity or p.y == 0:
        raise ValueError("2P is the point at infinity; x(2P) undefined")
    t = (p.x * p.x - c.q) / (2 * p.y)
    return t * t


def order(c: CurveMND, p: Point, cap: int = 12) -> int | None:
    """Order of p, or None for infinite order.

    Torsion orders are capped at 12 (no larger order occurs over Q), and any
    multiple with a non-integer coordinate proves infinite order on this
    integral model, so the scan aborts there immediately.
    """
    _require_on_curve(c, p)
    if p.is_infinity:
        return 1
    if not p.is_integral:
        return None
    acc = p
    for k in range(2, cap + 1):
        acc = _add_raw(c, acc, p)
        if acc.is_infinity:
            return k
        if not acc.is_integral:
            return None
    return None


def is_square_quad(z: QuadElement) -> QuadElement | None:
    """Square root of z in Q(sqrt(D)), or None when z is not a square.

    For z = e + f*sqrt(D) with f != 0: z is a square exactly when the norm
    e^2 - f^2*D is a rational square r^2 and one of (e + r)/2, (e - r)/2 is a
    nonzero rational square g^2; then h = f / (2g).  For f = 0 both e and
    e/D are tested directly.  Returned roots are canonicalized positive.
    """
    if z.f == 0:
        if z.e == 0:
            return QuadElement(0, 0, z.D)
        g = intmath.rat_sqrt(z.e)
        if g is not None:
            return QuadElement(g, 0, z.D)
        h = intmath.rat_sqrt(z.e / z.D)
        if h is not None:
            return QuadElement(0, h, z.D)
        return None
    r = intmath.rat_sqrt(z.e * z.e - z.f * z.f * z.D)
    if r is None:
        return None
    for s in (r, -r):
        g2 = (z.e + s) / 2
        if g2 <= 0:
            continue
        g = intmath.rat_sqrt(g2)
        if g is None:
            continue
        h = z.f / (2 * g)
        if g * g + h * h * z.D == z.e:
            return QuadElement(g, h, z.D)
    return None


def is_halvable(c: CurveMND, p: Point) -> bool:
    """True when p = 2*r for some r over K = Q(sqrt(D)).

    The cubic's roots are 0, -M, -N, so the point halves over K exactly when
    x, x + M, and x + N are all squares in K.
    """
    _require_on_curve(c, p)
    if p.is_infinity:
        raise ValueError("halving test expects an affine point")
    shifts = (
        QuadElement(p.x, 0, c.D),
        QuadElement(p.x + c.m, Fraction(c.n), c.D),
        QuadElement(p.x + c.m, Fraction(-c.n), c.D),
    )
    return all(is_square_quad(z) is not None for z in shifts)


def three_torsion_quartic(c: CurveMND, x: Fraction | int) -> Fraction:
    """Evaluate 3x^4 + 8m*x^3 + 6q*x^2 - q^2, which vanishes exactly at the
    x-coordinates of points of order 3 (using M + N = 2m, M*N = q)."""
    x = Fraction(x)
    q = c.q
    return 3 * x**4 + 8 * c.m * x**3 + 6 * q * x * x - q * q
