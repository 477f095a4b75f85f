"""Exact coefficient rings for truncated series arithmetic.

Three flavours cover every identity checked by this package:

* plain arbitrary-precision integers (``INT``),
* sparse Laurent polynomials in named variables, optionally with cyclic
  exponents (a variable y with modulus 4 satisfies y**4 == 1),
* the cyclotomic integers of order 5, Z[xi]/(1 + xi + ... + xi^4), whose
  zero test is "all five coordinates equal after lifting".

Ring objects expose ``zero``, ``one`` and ``from_int``; elements implement
ordinary operator arithmetic and compare equal to plain integers where that
makes sense.
"""

from __future__ import annotations

from typing import Mapping, Sequence


class IntegerRing:
    name = "integer"
    zero = 0
    one = 1

    @staticmethod
    def from_int(k: int) -> int:
        return k


INT = IntegerRing()


class Laurent:
    """Sparse Laurent polynomial over the integers."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "LaurentRing", terms: dict[tuple[int, ...], int]):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, Laurent):
            if other.ring is not self.ring:
                raise ValueError("mixed Laurent rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Laurent(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        norm = self.ring._norm_exp
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = norm(tuple(a + b for a, b in zip(e1, e2)))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Laurent(self.ring, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.ring.names, tuple(sorted(self.terms.items()))))

    def unit_inverse(self) -> "Laurent":
        """Inverse of a monomial with coefficient +-1."""
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not a unit monomial")
        (exps, coeff), = self.terms.items()
        if coeff not in (1, -1):
            raise ValueError(f"{self} is not a unit monomial")
        inv = self.ring._norm_exp(tuple(-e for e in exps))
        return Laurent(self.ring, {inv: coeff})

    def coefficient(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(self.ring._norm_exp(exps), 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"{n}^{e}" for n, e in zip(self.ring.names, exps) if e
            )
            bits.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


class LaurentRing:
    def __init__(self, names: Sequence[str], cyclic: Mapping[str, int] | None = None):
        self.names = tuple(names)
        cyclic = dict(cyclic or {})
        self.mods = tuple(cyclic.get(n) for n in self.names)
        self.name = "laurent(" + ",".join(self.names) + ")"
        self.zero = Laurent(self, {})
        self.one = Laurent(self, {(0,) * len(self.names): 1})

    def _norm_exp(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        if not any(self.mods):
            return exps
        return tuple(
            e % m if m else e for e, m in zip(exps, self.mods)
        )

    def from_int(self, k: int) -> Laurent:
        if k == 0:
            return self.zero
        return Laurent(self, {(0,) * len(self.names): k})

    def monomial(self, coeff: int = 1, **exps: int) -> Laurent:
        if coeff == 0:
            return self.zero
        unknown = set(exps) - set(self.names)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        e = self._norm_exp(tuple(exps.get(n, 0) for n in self.names))
        return Laurent(self, {e: coeff})


def fourth_root_ring(name: str = "y") -> LaurentRing:
    """Integer combinations of 1, y, y^2, y^3 with y^4 == 1."""
    return LaurentRing((name,), cyclic={name: 4})


class Cyclotomic5:
    """Element of Z[xi] with 1 + xi + xi^2 + xi^3 + xi^4 == 0.

    Stored on the basis 1, xi, xi^2, xi^3.  A combination of all five powers
    is zero exactly when its five coordinates are equal, which the reduction
    turns into "all four stored coordinates are zero".
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[int]):
        self.coords = tuple(coords)
        if len(self.coords) != 4:
            raise ValueError("expected 4 reduced coordinates")

    @classmethod
    def from_five(cls, v: Sequence[int]) -> "Cyclotomic5":
        w = v[4]
        return cls((v[0] - w, v[1] - w, v[2] - w, v[3] - w))

    def _lift(self) -> tuple[int, int, int, int, int]:
        return self.coords + (0,)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclotomic5):
            return other
        if isinstance(other, int):
            return Cyclotomic5((other, 0, 0, 0))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic5(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic5(tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a = self._lift()
        b = other._lift()
        out = [0] * 5
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % 5] += ai * bj
        return Cyclotomic5.from_five(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __bool__(self):
        return any(self.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        if not self:
            return "0"
        bits = []
        for k, c in enumerate(self.coords):
            if c:
                bits.append(f"{c}" + (f"*xi^{k}" if k else ""))
        return " + ".join(bits)


class Cyclotomic5Ring:
    name = "cyclotomic5"
    zero = Cyclotomic5((0, 0, 0, 0))
    one = Cyclotomic5((1, 0, 0, 0))

    @staticmethod
    def from_int(k: int) -> Cyclotomic5:
        return Cyclotomic5((k, 0, 0, 0))

    @staticmethod
    def xi(k: int = 1) -> Cyclotomic5:
        v = [0] * 5
        v[k % 5] = 1
        return Cyclotomic5.from_five(v)

    @staticmethod
    def geometric_xi2(m: int) -> Cyclotomic5:
        """1 + xi^2 + xi^4 + ... + xi^(4m): the exact quotient
        (1 - xi^(4m+2)) / (1 - xi^2)."""
        v = [0] * 5
        for j in range(2 * m + 1):
            v[(2 * j) % 5] += 1
        return Cyclotomic5.from_five(v)


CYC5 = Cyclotomic5Ring()
