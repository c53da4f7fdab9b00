"""Independent ground truth: full torsion enumeration by bounded search.

Every rational torsion point on the integral model y^2 = x^3 + 2m*x^2 + q*x
has integer coordinates with y = 0 or y^2 dividing the discriminant, so the
whole group is found by enumerating those finitely many candidates and
keeping the ones of finite order.  The only structural input is the bound
of 12 on rational torsion orders; nothing from the classifier is reused.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import curve as _curve
from . import intmath
from .curve import INFINITY, CurveMND, Point

# The fifteen groups that occur as rational torsion subgroups.
MAZUR_STRUCTURES = frozenset(
    [f"Z{k}" for k in (*range(1, 11), 12)] + [f"Z2xZ{2 * k}" for k in range(1, 5)]
)

# Residue filter used to discard y-candidates that cannot correspond to an
# integer point; modular reduction is exact, so no true candidate is lost.
_FILTER_MODULI = (16, 9, 5, 7, 11, 13)


class OracleError(RuntimeError):
    """The enumerated point set does not form one of the possible groups."""


@dataclass(frozen=True)
class TorsionGroup:
    """Fully enumerated torsion group: elements, structure label, generators.

    Elements are sorted with infinity first, then by (x, y); the structure
    label is 'Z{k}' or 'Z2xZ{k}'.
    """

    elements: tuple[Point, ...]
    structure: str
    generators: tuple[Point, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_cyclic(self) -> bool:
        return not self.structure.startswith("Z2x")


def discriminant(c: CurveMND) -> int:
    """Discriminant of y^2 = x^3 + 2m*x^2 + q*x in the standard convention:
    16*q^2*(4m^2 - 4q) = 64*q^2*n^2*D.  Nonzero for every family member."""
    q = c.q
    return 64 * q * q * c.n * c.n * c.D


def _delta_factorization(c: CurveMND) -> list[tuple[int, int]]:
    fac: dict[int, int] = {2: 6}
    for base, mult in ((c.n, 2), (c.q, 2), (c.D, 1)):
        for p, e in intmath.factorization(base):
            fac[p] = fac.get(p, 0) + mult * e
    return sorted(fac.items())


def _candidate_ys(
    items: list[tuple[int, int]], weak_bound: bool
) -> list[tuple[int, tuple[int, ...]]]:
    """All y with y^2 | delta (y | delta when relaxed), with exponent vectors."""
    out: list[tuple[int, tuple[int, ...]]] = [(1, ())]
    for p, e in items:
        cap = e if weak_bound else e // 2
        grown = []
        for y, exps in out:
            pk = 1
            for k in range(cap + 1):
                grown.append((y * pk, exps + (k,)))
                pk *= p
        out = grown
    return out


def _bounded_divisors(primes: list[int], exps: tuple[int, ...], cap: int) -> list[int]:
    """Divisors of prod(p**e) that do not exceed cap."""
    vals = [1]
    for p, e in zip(primes, exps):
        if not e:
            continue
        grown = []
        for v in vals:
            for _ in range(e + 1):
                if v > cap:
                    break
                grown.append(v)
                v *= p
        vals = grown
    return vals


def _residue_tables(c: CurveMND) -> list[tuple[int, set[int]]]:
    tables = []
    m2 = 2 * c.m
    q = c.q
    for mod in _FILTER_MODULI:
        attain = {(((x + m2) * x + q) * x) % mod for x in range(mod)}
        tables.append((mod, attain))
    return tables


def _two_torsion_points(c: CurveMND) -> list[Point]:
    """Affine points with y = 0: integer roots of x*(x^2 + 2m*x + q)."""
    pts = [Point(0, 0)]
    for x in _curve._integer_roots_monic_quadratic(2 * c.m, c.q):
        if x != 0:
            pts.append(Point(x, 0))
    return pts


def torsion_group(c: CurveMND, weak_bound: bool = False) -> TorsionGroup:
    """Enumerate the full rational torsion group of the curve.

    weak_bound=True relaxes the candidate bound from y^2 | delta to
    y | delta, as a paranoia check against the divisor-bound convention;
    it only ever enlarges the candidate set.
    """
    found: dict[Point, int] = {}
    for p in _two_torsion_points(c):
        found[p] = 2

    items = _delta_factorization(c)
    primes = [p for p, _ in items]
    tables = _residue_tables(c)
    m2 = 2 * c.m
    q = c.q
    # Fujiwara's bound on the roots of x^3 + 2m*x^2 + q*x - y^2 caps |x|.
    base_bound = max(abs(m2), intmath._iroot(abs(q), 2) + 1)
    for y, exps in _candidate_ys(items, weak_bound):
        y2 = y * y
        if any(y2 % mod not in attain for mod, attain in tables):
            continue
        # Any integer root x of x^3 + 2m*x^2 + q*x - y^2 divides y^2.
        xcap = 2 * max(base_bound, intmath._iroot(y2, 3) + 1)
        doubled = tuple(2 * e for e in exps)
        for d in _bounded_divisors(primes, doubled, xcap):
            for x in (d, -d):
                if (((x + m2) * x + q) * x) == y2:
                    p = Point(x, y)
                    if p in found:
                        continue
                    k = _curve.order(c, p)
                    if k is not None:
                        # Non-torsion integer points do occur; only finite
                        # orders are kept.
                        found[p] = k
                        found[Point(x, -y)] = k
    return _assemble(c, found)


def _assemble(c: CurveMND, found: dict[Point, int]) -> TorsionGroup:
    elements = tuple(
        [INFINITY] + sorted(found, key=lambda p: (p.x, p.y))
    )
    total = len(elements)
    two_torsion = [p for p in found if p.y == 0]

    def first_of_order(k: int) -> Point | None:
        # Elements are sorted, so the generator choice is canonical.
        return next((p for p in elements[1:] if found[p] == k), None)

    if len(two_torsion) <= 1:
        if total == 1:
            return TorsionGroup(elements, "Z1", ())
        gen = first_of_order(total)
        if gen is None:
            raise OracleError(f"{c}: no element of order {total} in cyclic group")
        group = TorsionGroup(elements, f"Z{total}", (gen,))
    elif len(two_torsion) == 3:
        half = total // 2
        gen = first_of_order(half)
        if gen is None:
            raise OracleError(f"{c}: no element of order {total}/2")
        cyc = _multiples(c, gen, half)
        extra = next(
            (t for t in sorted(two_torsion, key=lambda p: p.x) if t not in cyc), None
        )
        if extra is None:
            raise OracleError(f"{c}: 2-torsion not split")
        group = TorsionGroup(elements, f"Z2xZ{half}", (extra, gen))
    else:
        raise OracleError(f"{c}: {len(two_torsion)} points of order 2")

    if group.structure not in MAZUR_STRUCTURES:
        raise OracleError(f"{c}: impossible torsion structure {group.structure}")
    if _span(c, group) != set(elements):
        raise OracleError(f"{c}: enumerated points do not form a group")
    return group


def _multiples(c: CurveMND, p: Point, k: int) -> set[Point]:
    out = {INFINITY}
    acc = INFINITY
    for _ in range(k):
        acc = _curve._add_raw(c, acc, p)
        out.add(acc)
    return out


def _span(c: CurveMND, group: TorsionGroup) -> set[Point]:
    if not group.generators:
        return {INFINITY}
    if group.is_cyclic:
        return _multiples(c, group.generators[0], group.order)
    extra, gen = group.generators
    cyc = _multiples(c, gen, group.order // 2)
    return cyc | {_curve._add_raw(c, extra, p) for p in cyc}


def assert_family_shape(group: TorsionGroup, c: CurveMND) -> bool:
    """True when the group is cyclic of even order 2..12, the only shapes a
    family member can have (its cubic has exactly one rational root)."""
    return group.is_cyclic and group.order in (2, 4, 6, 8, 10, 12)
