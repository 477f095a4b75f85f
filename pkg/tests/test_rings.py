"""Coefficient rings: exactness, reduction rules, zero tests."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from tcorelab.rings import CYC5, INT, Cyclotomic5, LaurentRing, fourth_root_ring

XY = LaurentRing(("x", "y"))


def laurent_elems(ring):
    exps = st.integers(min_value=-3, max_value=3)
    term = st.tuples(st.tuples(*([exps] * len(ring.names))),
                     st.integers(min_value=-5, max_value=5))
    return st.lists(term, max_size=4).map(
        lambda terms: sum(
            (ring.monomial(c, **dict(zip(ring.names, e))) for e, c in terms),
            ring.zero,
        )
    )


cyc_elems = st.tuples(*([st.integers(min_value=-6, max_value=6)] * 4)).map(Cyclotomic5)


class TestLaurent:
    def test_basic_arithmetic(self):
        x = XY.monomial(x=1)
        y = XY.monomial(y=1)
        assert (x + y) * (x - y) == x * x - y * y
        assert x * XY.monomial(x=-1) == XY.one
        assert XY.from_int(0) == XY.zero

    def test_unit_inverse(self):
        m = XY.monomial(-1, x=2, y=-1)
        assert m * m.unit_inverse() == XY.one

    def test_cyclic_exponents(self):
        ring = fourth_root_ring()
        y = ring.monomial(y=1)
        assert y * y * y * y == ring.one
        assert ring.monomial(y=5) == y
        assert ring.monomial(y=-1) == ring.monomial(y=3)

    def test_int_comparison(self):
        assert XY.from_int(3) == 3
        assert XY.zero == 0

    @given(a=laurent_elems(XY), b=laurent_elems(XY), c=laurent_elems(XY))
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + XY.zero == a
        assert a * XY.one == a


class TestCyclotomic5:
    def test_power_sum_vanishes(self):
        total = sum((CYC5.xi(k) for k in range(5)), CYC5.zero)
        assert total == CYC5.zero

    def test_xi_has_order_five(self):
        x = CYC5.xi(1)
        p = CYC5.one
        for _ in range(5):
            p = p * x
        assert p == CYC5.one

    def test_zero_means_all_coordinates_equal(self):
        assert Cyclotomic5.from_five((7, 7, 7, 7, 7)) == CYC5.zero
        assert Cyclotomic5.from_five((7, 7, 7, 7, 6)) != CYC5.zero

    def test_geometric_quotient(self):
        # (1 - xi^(4m+2)) equals (1 - xi^2) times the stored quotient
        for m in range(8):
            lhs = CYC5.one - CYC5.xi(4 * m + 2)
            rhs = (CYC5.one - CYC5.xi(2)) * CYC5.geometric_xi2(m)
            assert lhs == rhs

    @given(a=cyc_elems, b=cyc_elems, c=cyc_elems)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * CYC5.one == a


def test_integer_ring_protocol():
    assert INT.zero == 0
    assert INT.one == 1
    assert INT.from_int(-7) == -7
