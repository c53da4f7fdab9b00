"""Forward direction: sample witness tuples per case and emit labeled curves.

Each sampler enumerates the case's parameter lattice up to a bound, skips
tuples violating the side conditions (nonzero, coprime, squarefree D,
D != 1), normalizes, and records the predicted class and generator
x-coordinate.  Tuples normalizing to a previously emitted curve are
deduplicated; output is sorted by (m, n, D) so the order is canonical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from . import curve as _curve
from . import intmath
from .classifier import (
    TorsionClass,
    Witness,
    WitnessI,
    WitnessII,
    WitnessIII,
    WitnessIV,
    WitnessV,
)
from .curve import CurveMND

CASE_TAGS = ("I", "II", "III", "IV", "V")
CASE_ORDERS = {"I": 4, "II": 8, "III": 6, "IV": 12, "V": 10}

# Cases I, III, IV enumerate D directly; II and V derive D from a squarefree
# split.  The direct range 2*bound keeps small bounds productive (bound 1
# already reaches D = 2).
_D_RANGE_FACTOR = 2


@dataclass(frozen=True)
class FamilySample:
    case_tag: str
    params: Witness
    curve: CurveMND
    predicted: TorsionClass
    predicted_generator_x: int


def _squarefree_ds(limit: int) -> list[int]:
    return [
        d
        for d in range(-limit, limit + 1)
        if d not in (0, 1) and intmath.is_squarefree(d)
    ]


_RawSample = tuple[Witness, int, int, int, int]  # witness, m, n, D, generator x


def _iter_case_i(bound: int, d_limit: int) -> Iterator[_RawSample]:
    ds = _squarefree_ds(d_limit)
    # Sign flips of (a, b) only swap conjugates or negate n: same curve.
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            if math.gcd(a, b) != 1:
                continue
            for d in ds:
                m = a * a + b * b * d
                yield WitnessI(a, b), m, 2 * a * b, d, a * a - b * b * d


def _iter_case_ii(bound: int, d_limit: int) -> Iterator[_RawSample]:
    for u in range(1, bound + 1):
        for v in range(1, bound + 1):
            w, d = intmath.squarefree_split(2 * u * u - v * v)
            if d == 1:
                continue
            m = u**4 + v * v * w * w * d
            n = 2 * u * u * v * w
            yield WitnessII(u, v, w), m, n, d, (u + v) * (v - u) ** 3


def _iter_case_iii(bound: int, d_limit: int) -> Iterator[_RawSample]:
    ds = _squarefree_ds(d_limit)
    # (a, c) -> (-a, -c) negates n only, so a stays positive.
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            for d in ds:
                r = intmath.int_sqrt(a * a - b * b * d)
                if r is None or r == 0:
                    continue
                for c in (r, -r):
                    if a + c == 0:
                        continue
                    if math.gcd(math.gcd(a, b), c) != 1:
                        continue
                    m = a * a + 2 * a * c + b * b * d
                    n = 2 * b * (a + c)
                    yield WitnessIII(a, b, c), m, n, d, 5 * c * c + 4 * a * c


def _iter_case_iv(bound: int, d_limit: int) -> Iterator[_RawSample]:
    ds = _squarefree_ds(d_limit)
    # Only u^2, v^2, w^2 enter the constraint and the curve, so positive
    # representatives suffice.
    for u in range(1, bound + 1):
        u2 = u * u
        for v in range(1, bound + 1):
            v2 = v * v
            for w in range(1, bound + 1):
                w2 = w * w
                for d in ds:
                    a = v2 - w2 * d
                    b = v2 + w2 * d
                    if 3 * a**4 - 4 * u2 * a * a * b - 16 * u2 * u2 * v2 * w2 * d:
                        continue
                    m = v2 - u2 + w2 * d
                    yield WitnessIV(u, v, w), m, 2 * v * w, d, (u + v) ** 2 - w2 * d


def _iter_case_v(bound: int, d_limit: int) -> Iterator[_RawSample]:
    for u in range(1, bound + 1):
        for v in range(-bound, bound + 1):
            if v == 0 or u == v or u == -v:
                continue
            s, rem = divmod((u - v) ** 2 * (u + v), 4 * u * v)
            if rem or s == 0:
                continue
            t2d = (s + u) ** 2 - v * v
            if t2d == 0:
                continue
            t, d = intmath.squarefree_split(t2d)
            if d == 1:
                continue
            m = 2 * s * (s + u) - v * v
            yield WitnessV(s, t, u, v), m, 2 * s * t, d, 2 * v * v + 4 * v * s - u * u


_CASE_ITERATORS = {
    "I": _iter_case_i,
    "II": _iter_case_ii,
    "III": _iter_case_iii,
    "IV": _iter_case_iv,
    "V": _iter_case_v,
}


def sample_case(
    case_tag: str, bound: int, d_limit: int | None = None
) -> list[FamilySample]:
    """Deterministically enumerate case samples with |params| <= bound.

    d_limit caps |D| for the cases that enumerate D directly (default
    2*bound); cases II and V derive D from the parameters instead.
    """
    if case_tag not in CASE_TAGS:
        raise ValueError(f"unknown case tag {case_tag!r}")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if d_limit is None:
        d_limit = _D_RANGE_FACTOR * bound
    order = CASE_ORDERS[case_tag]
    out: dict[tuple[int, int, int], FamilySample] = {}
    for witness, m, n, d, gen_x in _CASE_ITERATORS[case_tag](bound, d_limit):
        cur = _curve.normalize(m, n, d)
        key = (cur.m, cur.n, cur.D)
        if key in out:
            continue
        # Normalization divides (m, n) by e^2; points rescale by the same
        # square, and the image of an integral torsion point stays integral.
        e2 = abs(n) // cur.n
        gx, rem = divmod(gen_x, e2)
        if rem:
            raise AssertionError(
                f"case {case_tag} sample {witness}: generator x {gen_x} "
                f"does not rescale by {e2}"
            )
        out[key] = FamilySample(case_tag, witness, cur, TorsionClass(order, witness), gx)
    return sorted(out.values(), key=lambda s: (s.curve.m, s.curve.n, s.curve.D))
