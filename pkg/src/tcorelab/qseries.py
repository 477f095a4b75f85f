"""Truncated formal power series in q over a pluggable coefficient ring.

A series carries its truncation order explicitly; arithmetic never looks at
coefficients at or beyond it, and binary operations truncate to the smaller
order.  Infinite products are built factor by factor with O(order) in-place
passes, so no large convolutions are needed for pochhammer-style series.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Sequence

from .rings import INT


class Series:
    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order: int, coeffs: Sequence | None = None):
        if order < 1:
            raise ValueError("order must be positive")
        self.ring = ring
        self.order = order
        if coeffs is None:
            self.coeffs = [ring.zero] * order
        else:
            coeffs = list(coeffs)
            if len(coeffs) < order:
                coeffs.extend([ring.zero] * (order - len(coeffs)))
            self.coeffs = coeffs[:order]

    @classmethod
    def zero(cls, ring, order: int) -> "Series":
        return cls(ring, order)

    @classmethod
    def one(cls, ring, order: int) -> "Series":
        s = cls(ring, order)
        s.coeffs[0] = ring.one
        return s

    @classmethod
    def from_terms(cls, ring, order: int, terms: Iterable[tuple[int, object]]) -> "Series":
        """Accumulate (q-power, coefficient) pairs; powers >= order are dropped."""
        s = cls(ring, order)
        for n, elem in terms:
            if 0 <= n < order:
                s.coeffs[n] = s.coeffs[n] + elem
        return s

    def coeff(self, n: int):
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(
            self.ring, order,
            [a + b for a, b in zip(self.coeffs[:order], other.coeffs[:order])],
        )

    def __sub__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(
            self.ring, order,
            [a - b for a, b in zip(self.coeffs[:order], other.coeffs[:order])],
        )

    def __neg__(self) -> "Series":
        return Series(self.ring, self.order, [-a for a in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        ring = self.ring
        order = min(self.order, other.order)
        zero = ring.zero
        a = self.coeffs
        b = other.coeffs
        out = [zero] * order
        for i in range(order):
            ai = a[i]
            if ai == zero:
                continue
            for j in range(order - i):
                bj = b[j]
                if bj == zero:
                    continue
                out[i + j] = out[i + j] + ai * bj
        return Series(ring, order, out)

    def scaled(self, elem) -> "Series":
        return Series(self.ring, self.order, [elem * c for c in self.coeffs])

    def times_q(self, k: int) -> "Series":
        """Multiply by q**k (k >= 0), keeping the truncation order."""
        if k < 0:
            raise ValueError("negative q-shift")
        return Series(self.ring, self.order, [self.ring.zero] * k + self.coeffs)

    def mul_one_minus(self, elem, d: int) -> "Series":
        """Multiply by (1 - elem * q**d)."""
        if d < 0:
            raise ValueError("negative exponent in factor")
        c = self.coeffs
        if d == 0:
            return Series(self.ring, self.order, [x - elem * x for x in c])
        out = list(c)
        for n in range(d, self.order):
            out[n] = out[n] - elem * c[n - d]
        return Series(self.ring, self.order, out)

    def div_one_minus(self, elem, d: int) -> "Series":
        """Divide by (1 - elem * q**d), d >= 1."""
        if d < 1:
            raise ValueError("division needs a positive q-power")
        out = list(self.coeffs)
        for n in range(d, self.order):
            out[n] = out[n] + elem * out[n - d]
        return Series(self.ring, self.order, out)

    def inverse(self) -> "Series":
        ring = self.ring
        if self.coeffs[0] != ring.one:
            raise ValueError("inversion needs constant term 1")
        zero = ring.zero
        a = self.coeffs
        out = [zero] * self.order
        out[0] = ring.one
        for n in range(1, self.order):
            acc = zero
            for k in range(1, n + 1):
                ak = a[k]
                if ak == zero:
                    continue
                acc = acc + ak * out[n - k]
            out[n] = -acc
        return Series(ring, self.order, out)

    def sift(self, m: int, r: int) -> "Series":
        """Keep coefficients of q**(m*n + r), reindexed by n."""
        if not 0 <= r < m:
            raise ValueError(f"residue {r} out of range for modulus {m}")
        picked = self.coeffs[r :: m]
        if not picked:
            raise ValueError("sift leaves no coefficients below the order")
        return Series(self.ring, len(picked), picked)

    def eq_upto(self, other: "Series", n: int | None = None) -> bool:
        limit = min(self.order, other.order)
        if n is not None:
            if n > limit:
                raise ValueError(f"comparison order {n} beyond truncation {limit}")
            limit = n
        return all(self.coeffs[k] == other.coeffs[k] for k in range(limit))

    def is_zero_upto(self, n: int | None = None) -> bool:
        limit = self.order if n is None else min(n, self.order)
        zero = self.ring.zero
        return all(self.coeffs[k] == zero for k in range(limit))

    def __repr__(self):
        shown = ", ".join(repr(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"Series[{self.ring.name}, O(q^{self.order})]({shown}{tail})"


def pochhammer_inf(ring, elem, q_power: int, step: int, exponent: int, order: int) -> Series:
    """(a; q**step)_infinity ** exponent truncated, with a = elem * q**q_power.

    Negative exponents need q_power >= 1 so every factor is invertible.
    """
    if step < 1:
        raise ValueError("step must be positive")
    if exponent < 0 and q_power < 1:
        raise ValueError("non-invertible leading factor")
    s = Series.one(ring, order)
    if exponent == 0:
        return s
    d = q_power
    while d < order:
        if exponent > 0:
            for _ in range(exponent):
                s = s.mul_one_minus(elem, d)
        else:
            for _ in range(-exponent):
                s = s.div_one_minus(elem, d)
        d += step
    return s


def poch_product(ring, order: int, factors: Iterable[tuple[object, int, int, int]]) -> Series:
    """Product of pochhammer symbols given as (elem, q_power, step, exponent)."""
    s = Series.one(ring, order)
    for elem, q_power, step, exponent in factors:
        if step < 1:
            raise ValueError("step must be positive")
        if exponent < 0 and q_power < 1:
            raise ValueError("non-invertible leading factor")
        d = q_power
        while d < order:
            if exponent > 0:
                for _ in range(exponent):
                    s = s.mul_one_minus(elem, d)
            else:
                for _ in range(-exponent):
                    s = s.div_one_minus(elem, d)
            d += step
    return s


def partition_count_series(order: int) -> Series:
    """1/(q;q)_infinity: the generating function of p(n)."""
    return pochhammer_inf(INT, 1, 1, 1, -1, order)


def theta_jtp(ring, order: int, z=None, z_inv=None) -> Series:
    """Two-sided theta sum over n of z**n * q**(n*n).

    z defaults to 1; pass an invertible ring element together with its
    inverse for the general form.
    """
    if z is None:
        z = ring.one
        z_inv = ring.one
    if z_inv is None:
        raise ValueError("z_inv is required when z is given")
    s = Series(ring, order)
    s.coeffs[0] = ring.one
    zp = ring.one
    zm = ring.one
    n = 1
    while n * n < order:
        zp = zp * z
        zm = zm * z_inv
        s.coeffs[n * n] = s.coeffs[n * n] + zp + zm
        n += 1
    return s


def triangular_theta(ring, order: int) -> Series:
    """Sum of q**(k*(k+1)/2) over k >= 0."""
    s = Series(ring, order)
    k = 0
    while k * (k + 1) // 2 < order:
        s.coeffs[k * (k + 1) // 2] = s.coeffs[k * (k + 1) // 2] + ring.one
        k += 1
    return s


def hexagonal_theta_sum(ring, order: int, term, shifted: bool = False) -> Series:
    """Sum of term(n, m) over the hexagonal quadratic form.

    Places term(n, m) at q**(n*n + n*m + m*m) for all integers n, m; with
    shifted=True the exponent gains the linear part n + m (the form on the
    lattice translated by (1/3, 1/3), up to the constant 1/3).
    """
    s = Series(ring, order)
    bound = isqrt(2 * order) + 3
    for n in range(-bound, bound + 1):
        for m in range(-bound, bound + 1):
            e = n * n + n * m + m * m
            if shifted:
                e += n + m
            if 0 <= e < order:
                s.coeffs[e] = s.coeffs[e] + term(n, m)
    return s
