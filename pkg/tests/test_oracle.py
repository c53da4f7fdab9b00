from itertools import product

import pytest

from eventorsion.curve import INFINITY, CurveMND, InvalidCurveError, Point, add, order
from eventorsion.oracle import (
    MAZUR_STRUCTURES,
    TorsionGroup,
    assert_family_shape,
    discriminant,
    torsion_group,
)

C322 = CurveMND(3, 2, 2)
C323 = CurveMND(3, 2, 3)
C523 = CurveMND(5, 2, 3)

PINNED = [
    ((3, 2, 2), "Z4"),
    ((3, 2, 3), "Z6"),
    ((5, 2, 3), "Z2"),
    ((23, 8, 7), "Z8"),
    ((59, 24, 6), "Z6"),
    ((95, 32, 10), "Z10"),
    ((1, 1, 2), "Z2"),
    ((-366, 30, -15), "Z12"),
]


class TestDiscriminant:
    def test_322(self):
        assert discriminant(C322) == 512

    def test_323(self):
        assert discriminant(C323) == 6912

    def test_matches_b_invariant_formula(self):
        for triple, _ in PINNED:
            c = CurveMND(*triple)
            assert discriminant(c) == c.to_cubic().discriminant()
            assert discriminant(c) != 0


class TestTorsionGroup:
    def test_z4_elements(self):
        g = torsion_group(C322)
        assert g.structure == "Z4"
        assert set(g.elements) == {INFINITY, Point(0, 0), Point(-1, 2), Point(-1, -2)}

    def test_z2_elements(self):
        g = torsion_group(C523)
        assert g.structure == "Z2"
        assert set(g.elements) == {INFINITY, Point(0, 0)}

    def test_z6_elements(self):
        g = torsion_group(C323)
        assert g.structure == "Z6"
        assert Point(1, 2) in g.elements and Point(1, -2) in g.elements
        assert Point(-3, 6) in g.elements and Point(-3, -6) in g.elements
        assert order(C323, Point(1, 2)) == 3
        assert order(C323, Point(-3, 6)) == 6

    def test_z10_contains_order_five_point(self):
        c = CurveMND(95, 32, 10)
        g = torsion_group(c)
        assert g.structure == "Z10"
        assert Point(81, 1296) in g.elements
        assert order(c, Point(81, 1296)) == 5

    @pytest.mark.parametrize("triple,structure", PINNED)
    def test_pinned_structures(self, triple, structure):
        g = torsion_group(CurveMND(*triple))
        assert g.structure == structure
        assert g.order == int(structure[1:])

    @pytest.mark.parametrize("triple,structure", PINNED)
    def test_weak_bound_same_answer(self, triple, structure):
        c = CurveMND(*triple)
        assert torsion_group(c, weak_bound=True) == torsion_group(c)

    def test_closure_under_group_law(self):
        for triple, _ in PINNED:
            c = CurveMND(*triple)
            elements = set(torsion_group(c).elements)
            for p, q in product(elements, repeat=2):
                assert add(c, p, q) in elements

    def test_integer_coordinates(self):
        for triple, _ in PINNED:
            for p in torsion_group(CurveMND(*triple)).elements:
                assert p.is_integral

    def test_generators_span(self):
        g = torsion_group(C323)
        (gen,) = g.generators
        acc = INFINITY
        seen = set()
        for _ in range(g.order):
            acc = add(C323, acc, gen)
            seen.add(acc)
        assert seen == set(g.elements)

    def test_small_scan_against_direct_point_search(self):
        # Independent cross-check: brute-force x in a window large enough to
        # cover every integral point of small height, keep torsion orders.
        for m, n, d in product(range(-4, 5), (1, 2), (-2, 2, 5)):
            try:
                c = CurveMND(m, n, d)
            except InvalidCurveError:
                continue
            direct = {INFINITY}
            for x in range(-600, 601):
                y2 = c.rhs(x)
                if y2 < 0:
                    continue
                from eventorsion.intmath import int_sqrt

                y = int_sqrt(y2)
                if y is None:
                    continue
                for p in (Point(x, y), Point(x, -y)):
                    if order(c, p) is not None:
                        direct.add(p)
            assert direct == set(torsion_group(c).elements), c


class TestFamilyShape:
    def test_true_on_family(self):
        assert assert_family_shape(torsion_group(C322), C322)

    def test_false_on_product_structure(self):
        fake = TorsionGroup((INFINITY,), "Z2xZ2", ())
        assert not assert_family_shape(fake, C322)

    def test_false_on_odd_cyclic(self):
        fake = TorsionGroup((INFINITY,), "Z7", ())
        assert not assert_family_shape(fake, C322)

    def test_mazur_labels(self):
        assert "Z11" not in MAZUR_STRUCTURES
        assert "Z12" in MAZUR_STRUCTURES
        assert "Z2xZ8" in MAZUR_STRUCTURES
        assert len(MAZUR_STRUCTURES) == 15
