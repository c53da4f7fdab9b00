"""Torsion classification by explicit Diophantine criteria, with generators.

Five parametric conditions on (m, n, D) decide the torsion class; each comes
with an explicit generator x-coordinate:

    case I    Z4  is contained:  m = a^2 + b^2*D,  n = 2ab,  gcd(a,b) = 1
    case II   Z8  exactly:       m = u^4 + v^2*w^2*D,  n = 2*u^2*v*w,
                                 2u^2 - v^2 = w^2*D
    case III  Z6  is contained:  m = a^2 + 2ac + b^2*D,  n = 2b(a+c),
                                 a^2 - b^2*D = c^2,  gcd(a,b,c) = 1
    case IV   Z12 exactly:       m = v^2 - u^2 + w^2*D,  n = 2vw,  and
                                 3A^4 - 4u^2*A^2*B - 16u^4*v^2*w^2*D = 0
                                 with A = v^2 - w^2*D, B = v^2 + w^2*D
    case V    Z10 exactly:       m = 2s(s+u) - v^2,  n = 2st,
                                 (s+u)^2 - v^2 = t^2*D,  (u-v)^2*(u+v) = 4uvs

All checkers enumerate signed divisor pairs of n/2 deterministically
(ascending |first parameter|, positive sign first), so the returned witness
is reproducible.  Every condition forces n even, so odd n always lands in Z2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from . import curve as _curve
from . import oracle as _oracle
from .curve import CurveMND, Point
from .intmath import int_sqrt, signed_divisor_pairs


class InconsistencyError(RuntimeError):
    """A cross-check between the case criteria failed.  This signals a bug
    or a genuine defect in the criteria and is never resolved silently."""


class NonSquareYError(InconsistencyError):
    """A generator x-coordinate produced a non-square y^2 on the curve."""


@dataclass(frozen=True)
class WitnessI:
    a: int
    b: int

    tag = "I"

    @property
    def params(self) -> tuple[int, ...]:
        return (self.a, self.b)

    def curve_mn(self, d: int) -> tuple[int, int]:
        return self.a**2 + self.b**2 * d, 2 * self.a * self.b


@dataclass(frozen=True)
class WitnessII:
    u: int
    v: int
    w: int

    tag = "II"

    @property
    def params(self) -> tuple[int, ...]:
        return (self.u, self.v, self.w)

    def curve_mn(self, d: int) -> tuple[int, int]:
        return (
            self.u**4 + self.v**2 * self.w**2 * d,
            2 * self.u**2 * self.v * self.w,
        )


@dataclass(frozen=True)
class WitnessIII:
    a: int
    b: int
    c: int

    tag = "III"

    @property
    def params(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c)

    def curve_mn(self, d: int) -> tuple[int, int]:
        return (
            self.a**2 + 2 * self.a * self.c + self.b**2 * d,
            2 * self.b * (self.a + self.c),
        )


@dataclass(frozen=True)
class WitnessIV:
    u: int
    v: int
    w: int

    tag = "IV"

    @property
    def params(self) -> tuple[int, ...]:
        return (self.u, self.v, self.w)

    def curve_mn(self, d: int) -> tuple[int, int]:
        return self.v**2 - self.u**2 + self.w**2 * d, 2 * self.v * self.w


@dataclass(frozen=True)
class WitnessV:
    s: int
    t: int
    u: int
    v: int

    tag = "V"

    @property
    def params(self) -> tuple[int, ...]:
        return (self.s, self.t, self.u, self.v)

    def curve_mn(self, d: int) -> tuple[int, int]:
        return 2 * self.s * (self.s + self.u) - self.v**2, 2 * self.s * self.t


Witness = Union[WitnessI, WitnessII, WitnessIII, WitnessIV, WitnessV]

_WITNESS_ORDER = {WitnessI: 4, WitnessII: 8, WitnessIII: 6, WitnessIV: 12, WitnessV: 10}


@dataclass(frozen=True)
class TorsionClass:
    """Cyclic torsion class Z{order} with the witness that produced it."""

    order: int
    witness: Optional[Witness]

    def __post_init__(self) -> None:
        if self.order not in (2, 4, 6, 8, 10, 12):
            raise ValueError(f"unsupported torsion order {self.order}")
        if self.order == 2:
            if self.witness is not None:
                raise ValueError("Z2 carries no witness")
        elif self.witness is None or _WITNESS_ORDER[type(self.witness)] != self.order:
            raise ValueError(f"order {self.order} needs a matching witness")

    @property
    def label(self) -> str:
        return f"Z{self.order}"


@dataclass(frozen=True)
class ClassificationReport:
    curve: CurveMND
    cls: TorsionClass
    generator: Point
    generator_order: int
    oracle_group: Optional[_oracle.TorsionGroup]
    agree: Optional[bool]


def check_case_i(c: CurveMND) -> WitnessI | None:
    """m = a^2 + b^2*D and n = 2ab with a, b coprime and nonzero."""
    if c.n % 2:
        return None
    for a, b in signed_divisor_pairs(c.n // 2):
        if a * a + b * b * c.D == c.m and math.gcd(a, b) == 1:
            return WitnessI(a, b)
    return None


def check_case_ii(c: CurveMND, w1: WitnessI) -> WitnessII | None:
    """Refine a case-I witness to (u, v, w) with a = u^2, a + c = v^2 for a
    sign of c with c^2 = a^2 - b^2*D, w = b/v, and 2u^2 - v^2 = w^2*D."""
    u = int_sqrt(w1.a)
    if u is None or u == 0:
        return None
    r = int_sqrt(w1.a**2 - w1.b**2 * c.D)
    if r is None:
        return None
    for cc in (r, -r):
        v = int_sqrt(w1.a + cc)
        if v is None or v == 0:
            continue
        if w1.b % v:
            continue
        w = w1.b // v
        if w == 0:
            continue
        if 2 * u * u - v * v != w * w * c.D:
            continue
        cand = WitnessII(u, v, w)
        if cand.curve_mn(c.D) == (c.m, c.n):
            return cand
    return None


def check_case_iii(c: CurveMND) -> WitnessIII | None:
    """m = a^2 + 2ac + b^2*D, n = 2b(a+c), a^2 - b^2*D = c^2, gcd(a,b,c) = 1.

    Enumerates (b, k) with b*k = n/2 and k = a + c, solving
    a = (k^2 + b^2*D) / (2k) and requiring exact divisibility.
    """
    if c.n % 2:
        return None
    for b, k in signed_divisor_pairs(c.n // 2):
        a, rem = divmod(k * k + b * b * c.D, 2 * k)
        if rem:
            continue
        cc = k - a
        if a == 0 or cc == 0:
            continue
        if a * a - b * b * c.D != cc * cc:
            continue
        if a * a + 2 * a * cc + b * b * c.D != c.m:
            continue
        if math.gcd(math.gcd(a, b), cc) != 1:
            continue
        return WitnessIII(a, b, cc)
    return None


def check_case_iv(c: CurveMND) -> WitnessIV | None:
    """m = v^2 - u^2 + w^2*D, n = 2vw, and the degree-4 constraint
    3A^4 - 4u^2*A^2*B - 16u^4*v^2*w^2*D = 0 (A = v^2 - w^2*D, B = v^2 + w^2*D)."""
    if c.n % 2:
        return None
    for v, w in signed_divisor_pairs(c.n // 2):
        u2 = v * v + w * w * c.D - c.m
        if u2 <= 0:
            continue
        u = int_sqrt(u2)
        if u is None:
            continue
        a = v * v - w * w * c.D
        b = v * v + w * w * c.D
        if 3 * a**4 - 4 * u2 * a * a * b - 16 * u2 * u2 * v * v * w * w * c.D == 0:
            return WitnessIV(u, v, w)
    return None


def check_case_v(c: CurveMND) -> WitnessV | None:
    """m = 2s(s+u) - v^2, n = 2st, (s+u)^2 - v^2 = t^2*D, (u-v)^2*(u+v) = 4uvs.

    Enumerates (s, t) with s*t = n/2; eliminating v gives
    u^2 = t^2*D + s^2 - m, then v^2 = 2s^2 + 2su - m, each required to be a
    positive perfect square, with both signs of u and v tried.
    """
    if c.n % 2:
        return None
    for s, t in signed_divisor_pairs(c.n // 2):
        u2 = t * t * c.D + s * s - c.m
        if u2 <= 0:
            continue
        u0 = int_sqrt(u2)
        if u0 is None:
            continue
        for u in (u0, -u0):
            v2 = 2 * s * s + 2 * s * u - c.m
            if v2 <= 0:
                continue
            v0 = int_sqrt(v2)
            if v0 is None:
                continue
            for v in (v0, -v0):
                if (u - v) ** 2 * (u + v) != 4 * u * v * s:
                    continue
                if (s + u) ** 2 - v * v != t * t * c.D:
                    continue
                return WitnessV(s, t, u, v)
    return None


def classify(c: CurveMND) -> TorsionClass:
    """Decide the torsion class of a normalized curve.

    Decision tree: case I and case III together force Z12 (case IV is then
    asserted as a cross-check and supplies the witness); case I alone gives
    Z8 when case II refines it and Z4 otherwise; case III alone gives Z6;
    with neither, case V gives Z10; everything else is Z2.
    """
    w1 = check_case_i(c)
    w3 = check_case_iii(c)
    if w1 is not None and w3 is not None:
        w4 = check_case_iv(c)
        if w4 is None:
            raise InconsistencyError(
                f"{c}: Z4 and Z6 criteria both hold but the Z12 criterion fails"
            )
        return TorsionClass(12, w4)
    if w1 is not None:
        w2 = check_case_ii(c, w1)
        if w2 is not None:
            return TorsionClass(8, w2)
        return TorsionClass(4, w1)
    if w3 is not None:
        return TorsionClass(6, w3)
    w5 = check_case_v(c)
    if w5 is not None:
        return TorsionClass(10, w5)
    return TorsionClass(2, None)


def generator_x(c: CurveMND, cls: TorsionClass) -> int:
    """Generator x-coordinate from the class witness."""
    w = cls.witness
    if cls.order == 2:
        return 0
    if cls.order == 4:
        return w.a**2 - w.b**2 * c.D
    if cls.order == 6:
        return 5 * w.c**2 + 4 * w.a * w.c
    if cls.order == 8:
        return (w.u + w.v) * (w.v - w.u) ** 3
    if cls.order == 10:
        return 2 * w.v**2 + 4 * w.v * w.s - w.u**2
    return (w.u + w.v) ** 2 - w.w**2 * c.D  # order 12


def doubled_generator_x(c: CurveMND, cls: TorsionClass) -> int:
    """x-coordinate of twice the generator, per case: 0 (Z4), c^2 (Z6),
    (u^2 - v^2)^2 (Z8), v^2 (Z10), u^2 (Z12).

    For Z10 the value is v^2, not u^2: the order-10 generator with
    x = 2v^2 + 4vs - u^2 is P0 + P5 where x(P5) = u^2, so its double is
    2*P5, and an order-5 point never doubles back onto its own
    x-coordinate.  u^2 is instead the x of the double of the complementary
    generator class (see the acceptance suite, which records this).
    """
    w = cls.witness
    if cls.order == 4:
        return 0
    if cls.order == 6:
        return w.c**2
    if cls.order == 8:
        return (w.u**2 - w.v**2) ** 2
    if cls.order == 10:
        return w.v**2
    if cls.order == 12:
        return w.u**2
    raise ValueError(f"Z{cls.order} generator does not double to an affine point")


def generator(c: CurveMND, cls: TorsionClass) -> Point:
    """Explicit generator point for the class, with canonical y > 0.

    The x-coordinate comes from the witness; y is the exact integer square
    root of the curve's right-hand side, whose failure would mean the
    witness and class are inconsistent.
    """
    x = generator_x(c, cls)
    y2 = c.rhs(x)
    y = int_sqrt(y2)
    if y is None:
        raise NonSquareYError(
            f"{c}: generator x={x} for {cls.label} gives non-square y^2={y2}"
        )
    return Point(x, y)


def full_report(c: CurveMND, with_oracle: bool = False) -> ClassificationReport:
    """Classify, build the generator, and optionally cross-check against the
    brute-force group oracle."""
    cls = classify(c)
    gen = generator(c, cls)
    k = _curve.order(c, gen)
    if k != cls.order:
        raise InconsistencyError(
            f"{c}: generator {gen} has order {k}, expected {cls.order}"
        )
    group = _oracle.torsion_group(c) if with_oracle else None
    agree = None
    if group is not None:
        agree = group.structure == cls.label and group.order == cls.order
    return ClassificationReport(c, cls, gen, k, group, agree)


def case_witnesses(c: CurveMND) -> dict[str, Witness | None]:
    """Run all five case checks (case II on top of case I when present).

    Used by consistency sweeps; classify() itself short-circuits.
    """
    w1 = check_case_i(c)
    return {
        "I": w1,
        "II": check_case_ii(c, w1) if w1 is not None else None,
        "III": check_case_iii(c),
        "IV": check_case_iv(c),
        "V": check_case_v(c),
    }
