"""t-core / t-quotient decomposition and n-vector coordinates.

The Littlewood decomposition phi1 splits the bead diagram of a partition by
content residue ("colour").  Each colour class is itself a bead diagram whose
charge c_i records how far its beads sit above the ground state; the charges
form the n-vector of the t-core, and the displaced beads of colour i encode
the quotient component.  The published quotient component is the conjugate of
the raw bead reading: growing component i by a part of size m corresponds to
one bead of colour i jumping up m rungs, i.e. attaching a border strip of
length t*m whose head has content n_i*t + i.

phi2 maps a t-core to its n-vector via residue-count differences
(r_0 - r_1, r_1 - r_2, ..., r_{t-1} - r_0); its inverse reassembles the bead
diagram from the charges alone.

For t = 5 the alpha change of variables trades a zero-sum n-vector with
n.(0,1,2,3,4) = 4 (mod 5) for an integer 5-tuple with sum 1; the quadratic
form Q(alpha) then gives the core weight as 5*Q(alpha) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator, NamedTuple, Sequence

from .partitions import (
    Partition,
    beta_contents,
    enumerate_partitions,
    is_t_core,
    residue_counts,
)


class CoreQuotient(NamedTuple):
    t: int
    core: Partition
    quotient: tuple[Partition, ...]

    def quotient_weight(self) -> int:
        return sum(q.weight for q in self.quotient)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "core": self.core.to_json(),
            "quotient": [q.to_json() for q in self.quotient],
        }


@dataclass(frozen=True)
class ColorWords:
    """Exposure words of the extended residue diagram.

    rows[i][k] is 'E' when colour i is exposed (a row of the extended diagram
    ends there) in region base_region + k, else 'N'.  Below the window every
    colour reads E, above it N.
    """

    t: int
    base_region: int
    rows: tuple[str, ...]

    def letter(self, color: int, region: int) -> str:
        k = region - self.base_region
        if k < 0:
            return "E"
        if k >= len(self.rows[color]):
            return "N"
        return self.rows[color][k]

    def last_exposed_region(self, color: int) -> int:
        row = self.rows[color]
        for k in range(len(row) - 1, -1, -1):
            if row[k] == "E":
                return self.base_region + k
        return self.base_region - 1


def words(p: Partition, t: int) -> ColorWords:
    """Exposure pattern of each colour over all non-constant regions."""
    if t < 2:
        raise ValueError("t must be at least 2")
    nu = len(p)
    beta = set(beta_contents(p))
    tail_top = -nu - 1

    def exposed(content: int) -> bool:
        return content <= tail_top or content in beta

    r_lo = -(nu // t) - 1
    r_hi = p.largest // t + 1
    rows = []
    for i in range(t):
        letters = []
        for region in range(r_lo, r_hi + 1):
            letters.append("E" if exposed((region - 1) * t + i) else "N")
        rows.append("".join(letters))
    return ColorWords(t, r_lo, tuple(rows))


def _charges_and_bead_parts(
    p: Partition, t: int
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Split the bead diagram by colour.

    Returns (charges, bead_parts); bead_parts[i] is the raw bead reading of
    colour i (conjugate of the published quotient component), as a plain
    nonincreasing tuple.
    """
    nu = len(p)
    tail_top = -nu - 1
    displaced: list[list[int]] = [[] for _ in range(t)]
    for b in beta_contents(p):
        displaced[b % t].append(b // t)
    charges = []
    bead_parts = []
    for i in range(t):
        q_tail = (tail_top - i) // t
        extras = displaced[i]  # strictly decreasing, all > q_tail
        c = q_tail + 1 + len(extras)
        lam = []
        for x, e in enumerate(extras, start=1):
            v = e + x - c
            if v <= 0:
                break
            lam.append(v)
        charges.append(c)
        bead_parts.append(tuple(lam))
    return tuple(charges), tuple(bead_parts)


def _partition_from_colors(
    t: int, charges: Sequence[int], bead_parts: Sequence[Sequence[int]]
) -> Partition:
    """Reassemble a partition from per-colour charges and bead readings."""
    if sum(charges) != 0:
        raise ValueError(f"charges must sum to zero, got {tuple(charges)}")
    if not bead_parts:
        bead_parts = [()] * t
    floor = min(
        (charges[i] - len(bead_parts[i]) - 1) * t + i for i in range(t)
    )
    contents: list[int] = []
    for i in range(t):
        c = charges[i]
        lam = bead_parts[i]
        for x, v in enumerate(lam, start=1):
            contents.append((v + c - x) * t + i)
        q = c - len(lam) - 1
        while q * t + i > floor:
            contents.append(q * t + i)
            q -= 1
    contents.sort(reverse=True)
    assert len(contents) == -floor - 1, "bead bookkeeping out of balance"
    parts = []
    for x, b in enumerate(contents, start=1):
        lam = b + x
        if lam <= 0:
            break
        parts.append(lam)
    return Partition(parts)


def phi1(p: Partition, t: int) -> CoreQuotient:
    """Littlewood decomposition of p into its t-core and t-quotient."""
    if t < 2:
        raise ValueError("t must be at least 2")
    charges, bead_parts = _charges_and_bead_parts(p, t)
    core = _partition_from_colors(t, charges, ())
    quotient = tuple(Partition(bp).conjugate() for bp in bead_parts)
    return CoreQuotient(t, core, quotient)


def phi1_inv(cq: CoreQuotient) -> Partition:
    """Inverse of phi1; rejects a core that still carries a t-hook."""
    t, core, quotient = cq
    if len(quotient) != t:
        raise ValueError(f"quotient must have {t} components")
    if not is_t_core(core, t):
        raise ValueError(f"{core!r} has a rim hook of length {t}")
    charges = phi2(core, t)
    bead_parts = tuple(tuple(q.conjugate()) for q in quotient)
    return _partition_from_colors(t, charges, bead_parts)


def quotient_profile(p: Partition, t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(n-vector of the t-core, part counts of the quotient components).

    Cheaper than :func:`phi1` when only the charges and part counts matter:
    the part count of the published component equals the largest part of the
    raw bead reading, and the charges are exactly the core's n-vector.
    """
    charges, bead_parts = _charges_and_bead_parts(p, t)
    return charges, tuple(bp[0] if bp else 0 for bp in bead_parts)


def quotient_part_counts(p: Partition, t: int) -> tuple[int, ...]:
    """Number of parts of each quotient component, without building the core."""
    return quotient_profile(p, t)[1]


def phi2(core: Partition, t: int) -> tuple[int, ...]:
    """n-vector of a t-core: consecutive residue-count differences."""
    if t < 2:
        raise ValueError("t must be at least 2")
    if not is_t_core(core, t):
        raise ValueError(f"{core!r} is not a {t}-core")
    r = residue_counts(core, t)
    return tuple(r[i] - r[(i + 1) % t] for i in range(t))


def phi2_inv(nvec: Sequence[int]) -> Partition:
    """The unique t-core with the given zero-sum n-vector (t = len(nvec))."""
    t = len(nvec)
    if t < 2:
        raise ValueError("an n-vector needs at least 2 coordinates")
    if sum(nvec) != 0:
        raise ValueError(f"n-vector must sum to zero, got {tuple(nvec)}")
    return _partition_from_colors(t, tuple(nvec), ())


def core_weight_from_vector(nvec: Sequence[int]) -> int:
    """Weight of the t-core with this n-vector: (t/2)||n||^2 + (0,1,..,t-1).n"""
    t = len(nvec)
    twice = t * sum(x * x for x in nvec) + 2 * sum(i * x for i, x in enumerate(nvec))
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


# -- alpha coordinates for 5-cores ------------------------------------------


def n_from_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    """n-vector of an integer 5-tuple with sum 1."""
    if len(alpha) != 5:
        raise ValueError("alpha-vector must have 5 coordinates")
    if sum(alpha) != 1:
        raise ValueError(f"alpha-vector must sum to 1, got {tuple(alpha)}")
    a0, a1, a2, a3, a4 = alpha
    return (a0 + a4, -a0 + a1 + a4, -a1 + a2, -a2 + a3 - a4, -a3 - a4)


def alpha_from_n(nvec: Sequence[int]) -> tuple[int, ...]:
    """Invert :func:`n_from_alpha`.

    Solvable in integers exactly when 4*n0 + 3*n1 + 2*n2 + n3 = 1 (mod 5),
    i.e. n.(0,1,2,3,4) = 4 (mod 5).
    """
    if len(nvec) != 5:
        raise ValueError("n-vector must have 5 coordinates")
    if sum(nvec) != 0:
        raise ValueError(f"n-vector must sum to zero, got {tuple(nvec)}")
    n0, n1, n2, n3, _ = nvec
    s5 = 4 * n0 + 3 * n1 + 2 * n2 + n3 - 1
    if s5 % 5 != 0:
        raise ValueError(
            f"n-vector {tuple(nvec)} violates the residue condition "
            "n.(0,1,2,3,4) = 4 (mod 5)"
        )
    s = s5 // 5
    return (n0 - s, n0 + n1 - 2 * s, n0 + n1 + n2 - 2 * s, n0 + n1 + n2 + n3 - s, s)


def q_alpha(alpha: Sequence[int]) -> int:
    """Quadratic form ||alpha||^2 minus the cyclic product sum.

    Equals (core weight + 1)/5 for the 5-core attached to alpha.
    """
    if len(alpha) != 5 or sum(alpha) != 1:
        raise ValueError(f"invalid alpha-vector {tuple(alpha)}")
    sq = sum(a * a for a in alpha)
    cyc = sum(alpha[i] * alpha[(i + 1) % 5] for i in range(5))
    return sq - cyc


def q3(n1: int, n2: int) -> int:
    """Weight of the 3-core with n-vector (-n1-n2, n1, n2)."""
    return 3 * (n1 * n1 + n1 * n2 + n2 * n2) + n1 + 2 * n2


def capital_phi(p: Partition) -> tuple[tuple[int, ...], tuple[Partition, ...]]:
    """Combined decomposition of a partition of weight 4 (mod 5).

    Returns (alpha, quotient) with |p| = 5*Q(alpha) - 1 + 5*sum of quotient
    weights.
    """
    if p.weight % 5 != 4:
        raise ValueError(f"weight {p.weight} is not 4 (mod 5)")
    cq = phi1(p, 5)
    alpha = alpha_from_n(phi2(cq.core, 5))
    return alpha, cq.quotient


def capital_phi_inv(
    alpha: Sequence[int], quotient: Sequence[Partition]
) -> Partition:
    core = phi2_inv(n_from_alpha(alpha))
    return phi1_inv(CoreQuotient(5, core, tuple(quotient)))


# -- counting t-cores ---------------------------------------------------------


def iter_core_vectors(t: int, max_weight: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (n-vector, weight) for every t-core of weight <= max_weight.

    Depth-first over the zero-sum lattice with per-coordinate pruning on the
    doubled weight t*||n||^2 + 2*(0,1,..,t-1).n.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    if max_weight < 0:
        return
    limit2 = 2 * max_weight
    mins = [min(t * x * x + 2 * i * x for x in (-1, 0, 1)) for i in range(t)]
    suffix = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mins[i]
    vec = [0] * t

    def rec(i: int, partial2: int, sigma: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if i == t - 1:
            x = -sigma
            total2 = partial2 + t * x * x + 2 * i * x
            if 0 <= total2 <= limit2:
                vec[i] = x
                yield tuple(vec), total2 // 2
            return
        # coordinate contributions may be negative, so the budget may be too;
        # infeasibility shows up as a negative discriminant
        budget = limit2 - partial2 - suffix[i + 1]
        disc = i * i + t * budget
        if disc < 0:
            return
        root = isqrt(disc)
        lo = -((i + root) // t)
        hi = (root - i) // t
        for x in range(lo, hi + 1):
            vec[i] = x
            yield from rec(i + 1, partial2 + t * x * x + 2 * i * x, sigma + x)

    yield from rec(0, 0, 0)


@lru_cache(maxsize=None)
def _core_weight_counts(t: int, limit: int) -> tuple[int, ...]:
    counts = [0] * (limit + 1)
    for _, w in iter_core_vectors(t, limit):
        counts[w] += 1
    return tuple(counts)


def count_t_cores(n: int, t: int) -> int:
    """Number of t-cores of weight n, by n-vector enumeration."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = ((n // 128) + 1) * 128
    return _core_weight_counts(t, limit)[n]


def count_t_cores_by_filter(n: int, t: int) -> int:
    """Oracle route: filter the full partition enumeration by the core test."""
    return sum(1 for p in enumerate_partitions(n) if is_t_core(p, t))
