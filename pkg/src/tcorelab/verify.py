"""Check registry: every counting identity, congruence and closed form the
package implements, bound to an executable verification.

Each check is deterministic and idempotent; reports serialize stably.  Where
an identity admits several computation routes (enumeration, n-vector sums,
series coefficients) the check runs them all and any disagreement is a hard
failure carrying a witness.  CHK-AB5JR is a counterexample search: the suite
treats "counterexample-found" as the expected (passing) outcome, because the
claimed congruence family genuinely fails.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Callable

from . import cores, stats, tables
from .cores import (
    CoreQuotient,
    alpha_from_n,
    core_weight_from_vector,
    count_t_cores_by_filter,
    iter_core_vectors,
    phi1,
    phi1_inv,
    phi2,
    phi2_inv,
    q3,
)
from .orbits import orbit_map, orbit_map_s, quadruple_shift_vector, theta_vector
from .partitions import Partition, add_cell, enumerate_partitions, is_t_core, rim_hook_removals
from .qseries import (
    Series,
    hexagonal_theta_sum,
    partition_count_series,
    poch_product,
    pochhammer_inf,
    theta_jtp,
    triangular_theta,
)
from .rings import CYC5, INT, LaurentRing

# ---------------------------------------------------------------------------
# reports and registry plumbing


@dataclass
class CheckReport:
    check_id: str
    params: dict
    status: str  # "pass" | "fail" | "counterexample-found"
    witness: dict | None = None
    elapsed: float = field(default=0.0, compare=False)

    def ok(self) -> bool:
        if self.check_id in EXPECTED_COUNTEREXAMPLE:
            return self.status == "counterexample-found"
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "witness": self.witness,
        }


@dataclass
class CheckDef:
    func: Callable[[dict], tuple[str, dict | None]]
    defaults: dict
    summary: str


REGISTRY: dict[str, CheckDef] = {}
EXPECTED_COUNTEREXAMPLE = {"CHK-AB5JR"}
_MEMO: dict[tuple, CheckReport] = {}


def register(check_id: str, summary: str, **defaults):
    def wrap(func):
        REGISTRY[check_id] = CheckDef(func, defaults, summary)
        return func

    return wrap


def run_check(check_id: str, **overrides) -> CheckReport:
    if check_id not in REGISTRY:
        raise ValueError(f"unknown check id {check_id!r}")
    definition = REGISTRY[check_id]
    params = dict(definition.defaults)
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in params:
            raise ValueError(f"check {check_id} takes no parameter {key!r}")
        params[key] = value
    key = (check_id, tuple(sorted(params.items())))
    if key in _MEMO:
        return _MEMO[key]
    start = time.perf_counter()
    status, witness = definition.func(params)
    report = CheckReport(check_id, params, status, witness,
                         elapsed=time.perf_counter() - start)
    _MEMO[key] = report
    return report


def run_all(**overrides) -> list[CheckReport]:
    return [run_check(check_id, **overrides.get(check_id, {}))
            for check_id in REGISTRY]


def clear_memo() -> None:
    _MEMO.clear()


# ---------------------------------------------------------------------------
# class counts and shared tallies

FILTERS: dict[str | None, Callable[[Partition], bool]] = {
    None: lambda p: True,
    "srank-0-mod-4": lambda p: stats.srank(p) % 4 == 0,
    "srank-2-mod-4": lambda p: stats.srank(p) % 4 == 2,
    "is-5-core": lambda p: is_t_core(p, 5),
    "no-repeated-even-parts": lambda p: not stats.has_repeated_even_part(p),
}


def class_counts(
    n: int, statistic: str, modulus: int, filter_name: str | None = None
) -> dict[int, int]:
    """Exhaustive residue tally of a named statistic over the partitions of n."""
    if statistic not in stats.STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}")
    if filter_name not in FILTERS:
        raise ValueError(f"unknown filter {filter_name!r}")
    fn = stats.STATISTICS[statistic]
    pred = FILTERS[filter_name]
    out = {r: 0 for r in range(modulus)}
    for p in enumerate_partitions(n):
        if pred(p):
            out[fn(p) % modulus] += 1
    return out


@lru_cache(maxsize=None)
def _srank_joint_tallies(n: int):
    """One pass over the partitions of n.

    Returns (stc, tqr, c5, totals): Counters keyed (srank mod 4, value) with
    exact St-crank / 2-quotient-rank values, the 5-core-crank residue tally
    (only when n = 4 mod 5), and per-srank-class totals.
    """
    stc: Counter = Counter()
    tqr: Counter = Counter()
    c5: Counter = Counter()
    totals: Counter = Counter()
    with_crank = n % 5 == 4
    for p in enumerate_partitions(n):
        s = stats.srank(p) % 4
        totals[s] += 1
        stc[(s, stats.st_crank(p))] += 1
        tqr[(s, stats.two_quotient_rank(p))] += 1
        if with_crank:
            c5[(s, stats.five_core_crank(p))] += 1
    return stc, tqr, c5, totals


@lru_cache(maxsize=None)
def _bgr_tqr_tally(n: int) -> dict[tuple[int, int], int]:
    """Counts of partitions of n by (BG-rank, 2-quotient-rank)."""
    tally: Counter = Counter()
    for p in enumerate_partitions(n):
        tally[(stats.bg_rank(p), stats.two_quotient_rank(p))] += 1
    return dict(tally)


@dataclass(frozen=True)
class FiveCoreTable:
    """Aggregated data over all 5-core n-vectors up to a weight limit."""

    limit: int
    count: dict
    by_srank: dict          # (weight, srank mod 4) -> count
    by_crank: dict          # (weight = 4 mod 5, c5) -> count
    by_srank_crank: dict    # (weight, srank mod 4, c5) -> count


@lru_cache(maxsize=None)
def five_core_table(limit: int = 524) -> FiveCoreTable:
    count: Counter = Counter()
    by_srank: Counter = Counter()
    by_crank: Counter = Counter()
    by_both: Counter = Counter()
    for vec, w in iter_core_vectors(5, limit):
        count[w] += 1
        s = stats.core_srank_mod4(5, vec)
        by_srank[(w, s)] += 1
        if w % 5 == 4:
            c = stats.five_core_crank_from_vector(vec)
            by_crank[(w, c)] += 1
            by_both[(w, s, c)] += 1
    return FiveCoreTable(limit, dict(count), dict(by_srank), dict(by_crank), dict(by_both))


@lru_cache(maxsize=None)
def _five_core_bg_counts(max_weight: int) -> dict[tuple[int, int], int]:
    """(weight, BG-rank) tally over 5-cores, built from actual partitions."""
    tally: Counter = Counter()
    for vec, w in iter_core_vectors(5, max_weight):
        tally[(w, stats.bg_rank(phi2_inv(vec)))] += 1
    return dict(tally)


def _alpha_form_counts(order: int) -> list[int]:
    """Number of integer 5-tuples with sum 1 and Q(alpha) = k, k < order."""
    counts = [0] * order
    bound = isqrt(2 * order) + 2
    rng = range(-bound, bound + 1)
    for a0 in rng:
        for a1 in rng:
            # Q >= ((a0-a1)^2)/2 prune is weak; rely on the inner bound
            for a2 in rng:
                for a3 in rng:
                    a4 = 1 - a0 - a1 - a2 - a3
                    if abs(a4) > bound:
                        continue
                    alpha = (a0, a1, a2, a3, a4)
                    twice_q = sum(
                        (alpha[i] - alpha[(i + 1) % 5]) ** 2 for i in range(5)
                    )
                    if twice_q % 2 == 0 and twice_q // 2 < order:
                        counts[twice_q // 2] += 1
    return counts


# ---------------------------------------------------------------------------
# Ramanujan congruences and classical cranks


def _progression_check(step: int, offset: int, max_n: int, modulus: int, order: int):
    series = partition_count_series(order)
    for n in range(offset, max_n + 1, step):
        total = sum(1 for _ in enumerate_partitions(n))
        if total != series.coeff(n):
            return "fail", {"n": n, "enumerated": total, "series": series.coeff(n)}
        if total % modulus:
            return "fail", {"n": n, "count": total, "modulus": modulus}
    for n in range(offset, order, step):
        if series.coeff(n) % modulus:
            return "fail", {"n": n, "series_coefficient": series.coeff(n)}
    return "pass", None


@register("CHK-RAM5", "p(5n+4) = 0 (mod 5): enumeration and series sift",
          max_n=49, order=200)
def _chk_ram5(params):
    return _progression_check(5, 4, params["max_n"], 5, params["order"])


@register("CHK-RAM7", "p(7n+5) = 0 (mod 7): enumeration and series sift",
          max_n=47, order=200)
def _chk_ram7(params):
    return _progression_check(7, 5, params["max_n"], 7, params["order"])


@register("CHK-RAM11", "p(11n+6) = 0 (mod 11): enumeration and series sift",
          max_n=50, order=200)
def _chk_ram11(params):
    return _progression_check(11, 6, params["max_n"], 11, params["order"])


def _equal_classes(n: int, statistic: str, modulus: int):
    counts = class_counts(n, statistic, modulus)
    total = sum(counts.values())
    if total % modulus:
        return {"n": n, "total": total}
    share = total // modulus
    for k, c in counts.items():
        if c != share:
            return {"n": n, "class": k, "count": c, "expected": share}
    return None


@register("CHK-DYSON", "rank mod 5 / mod 7 splits p(5n+4), p(7n+5) evenly",
          max_n5=49, max_n7=47)
def _chk_dyson(params):
    for n in range(4, params["max_n5"] + 1, 5):
        w = _equal_classes(n, "dyson-rank", 5)
        if w:
            return "fail", w
    for n in range(5, params["max_n7"] + 1, 7):
        w = _equal_classes(n, "dyson-rank", 7)
        if w:
            return "fail", w
    return "pass", None


@register("CHK-AG", "crank splits all three progressions evenly",
          max_n5=49, max_n7=47, max_n11=50)
def _chk_ag(params):
    jobs = [(5, 4, params["max_n5"]), (7, 5, params["max_n7"]), (11, 6, params["max_n11"])]
    for modulus, offset, top in jobs:
        for n in range(offset, top + 1, modulus):
            w = _equal_classes(n, "ag-crank", modulus)
            if w:
                return "fail", w
    return "pass", None


@register("CHK-CRANKGF", "crank generating function with the weight-1 anomaly",
          order=26)
def _chk_crankgf(params):
    order = params["order"]
    ring = LaurentRing(("x",))
    x = ring.monomial(x=1)
    xi = ring.monomial(x=-1)
    lhs = Series(ring, order)
    lhs.coeffs[0] = ring.one
    if order > 1:
        lhs.coeffs[1] = x + xi - ring.one
    for n in range(2, order):
        acc = ring.zero
        for p in enumerate_partitions(n):
            acc = acc + ring.monomial(x=stats.ag_crank(p))
        lhs.coeffs[n] = acc
    rhs = poch_product(ring, order, [(ring.one, 1, 1, 1), (x, 1, 1, -1), (xi, 1, 1, -1)])
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"q_power": k}
    return "pass", None


@register("CHK-GREF5", "crank mod 10 refines crank mod 2 on 5n+4", max_n=49)
def _chk_gref5(params):
    for n in range(4, params["max_n"] + 1, 5):
        mod10 = class_counts(n, "ag-crank", 10)
        mod2 = class_counts(n, "ag-crank", 2)
        for alpha in (0, 1):
            if mod2[alpha] % 5:
                return "fail", {"n": n, "alpha": alpha, "count": mod2[alpha]}
            share = mod2[alpha] // 5
            for k in range(5):
                if mod10[2 * k + alpha] != share:
                    return "fail", {"n": n, "alpha": alpha, "k": k,
                                    "count": mod10[2 * k + alpha], "expected": share}
    return "pass", None


# ---------------------------------------------------------------------------
# srank generating functions


@register("CHK-RSGF", "trivariate odd-parts generating function", order=20)
def _chk_rsgf(params):
    order = params["order"]
    ring = LaurentRing(("z", "y"))
    lhs = Series(ring, order)
    for n in range(order):
        acc = ring.zero
        for p in enumerate_partitions(n):
            acc = acc + ring.monomial(
                z=p.odd_part_count(), y=p.conjugate().odd_part_count()
            )
        lhs.coeffs[n] = acc
    rhs = poch_product(
        ring, order,
        [
            (ring.monomial(-1, z=1, y=1), 1, 2, 1),
            (ring.one, 4, 4, -1),
            (ring.monomial(z=2), 2, 4, -1),
            (ring.monomial(y=2), 2, 4, -1),
        ],
    )
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"q_power": k}
    return "pass", None


@register("CHK-P02PROD", "difference p0(n) - p2(n) has a product form", order=30)
def _chk_p02prod(params):
    order = params["order"]
    lhs = Series(INT, order)
    for n in range(order):
        diff = 0
        for p in enumerate_partitions(n):
            diff += 1 if stats.srank(p) % 4 == 0 else -1
        lhs.coeffs[n] = diff
    rhs = poch_product(INT, order, [(-1, 1, 2, 1), (1, 4, 4, -1), (-1, 2, 4, -2)])
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"q_power": k, "lhs": lhs.coeffs[k], "rhs": rhs.coeffs[k]}
    return "pass", None


@register("CHK-ANDREWS", "p0(5n+4), p2(5n+4) = 0 (mod 5); p2 = 0 (mod 10)",
          max_n=49)
def _chk_andrews(params):
    for n in range(4, params["max_n"] + 1, 5):
        _, _, _, totals = _srank_joint_tallies(n)
        p0, p2 = totals[0], totals[2]
        if p0 % 5 or p2 % 5 or p2 % 10:
            return "fail", {"n": n, "p0": p0, "p2": p2}
    return "pass", None


@register("CHK-SRANKPROD", "srank generating function on no-repeated-even-parts",
          order=25)
def _chk_srankprod(params):
    order = params["order"]
    ring = LaurentRing(("y",))
    lhs = Series(ring, order)
    for n in range(order):
        acc = ring.zero
        for p in enumerate_partitions(n):
            if not stats.has_repeated_even_part(p):
                acc = acc + ring.monomial(y=stats.srank(p))
        lhs.coeffs[n] = acc
    rhs = poch_product(
        ring, order,
        [(-1, 1, 2, 1), (ring.monomial(y=2), 2, 4, -1), (ring.monomial(y=-2), 2, 4, -1)],
    )
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"q_power": k}
    return "pass", None


def _lemma1_product(ring, order, x_pow, y2_elem, y2_inv_elem):
    """(q^4;q^4)(-q;q^2) / ((q^4 x, q^4/x, q^2 y^2 x, q^2/(y^2 x); q^4))."""
    x = ring.monomial(x=x_pow) if x_pow else ring.one
    xi = ring.monomial(x=-x_pow) if x_pow else ring.one
    return poch_product(
        ring, order,
        [
            (ring.one, 4, 4, 1),
            (ring.from_int(-1), 1, 2, 1),
            (x, 4, 4, -1),
            (xi, 4, 4, -1),
            (y2_elem * x, 2, 4, -1),
            (y2_inv_elem * xi, 2, 4, -1),
        ],
    )


@register("CHK-LEMMA1", "bivariate (St-crank, srank) product identity", order=20)
def _chk_lemma1(params):
    order = params["order"]
    ring = LaurentRing(("x", "y"))
    lhs = Series(ring, order)
    for n in range(order):
        acc = ring.zero
        for p in enumerate_partitions(n):
            acc = acc + ring.monomial(x=stats.st_crank(p), y=stats.srank(p))
        lhs.coeffs[n] = acc
    rhs = _lemma1_product(ring, order, 1, ring.monomial(y=2), ring.monomial(y=-2))
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"q_power": k}
    return "pass", None


def _g_at_xi(order: int, y_squared: int) -> Series:
    """The (St-crank, srank) product at x = xi, y^2 = +-1, over Z[xi]."""
    xi1 = CYC5.xi(1)
    xi4 = CYC5.xi(4)
    sign = CYC5.from_int(y_squared)
    return poch_product(
        CYC5, order,
        [
            (CYC5.one, 4, 4, 1),
            (CYC5.from_int(-1), 1, 2, 1),
            (xi1, 4, 4, -1),
            (xi4, 4, 4, -1),
            (sign * xi1, 2, 4, -1),
            (sign * xi4, 2, 4, -1),
        ],
    )


@register("CHK-COEFFZ", "coefficients of q^(5n+4) vanish at a fifth root of unity",
          order=60)
def _chk_coeffz(params):
    order = params["order"]
    for y_squared in (1, -1):
        series = _g_at_xi(order, y_squared)
        for n in range(4, order, 5):
            if series.coeffs[n] != CYC5.zero:
                return "fail", {"y_squared": y_squared, "q_power": n,
                                "coefficient": repr(series.coeffs[n])}
    # composite route: g(xi,1,q) * (q^10;q^10) equals the double theta sum
    # with the exact geometric quotient of (1 - xi^(4m+2)) by (1 - xi^2)
    lhs = _g_at_xi(order, 1) * pochhammer_inf(CYC5, CYC5.one, 10, 10, 1, order)
    rhs = Series(CYC5, order)
    m = 0
    while m * (m + 1) < order:
        term = CYC5.xi(-2 * m) * CYC5.geometric_xi2(m)
        if m % 2:
            term = -term
        k = 0
        while m * (m + 1) + k * (k + 1) // 2 < order:
            e = m * (m + 1) + k * (k + 1) // 2
            rhs.coeffs[e] = rhs.coeffs[e] + term
            k += 1
        m += 1
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"route": "composite", "q_power": k}
    # triple-product specialization at xi^2, order-2 arguments
    jt_lhs = poch_product(
        CYC5, order,
        [(CYC5.xi(2), 2, 2, 1), (CYC5.xi(3), 2, 2, 1), (CYC5.one, 2, 2, 1)],
    )
    jt_rhs = Series(CYC5, order)
    m = 0
    while m * (m + 1) < order:
        term = CYC5.xi(-2 * m) * CYC5.geometric_xi2(m)
        if m % 2:
            term = -term
        jt_rhs.coeffs[m * (m + 1)] = jt_rhs.coeffs[m * (m + 1)] + term
        m += 1
    if not jt_lhs.eq_upto(jt_rhs):
        k = next(i for i in range(order) if jt_lhs.coeffs[i] != jt_rhs.coeffs[i])
        return "fail", {"route": "triple-product", "q_power": k}
    return "pass", None


@register("CHK-THM1", "St-crank mod 5 splits p0(5n+4) and p2(5n+4) evenly",
          max_n=49)
def _chk_thm1(params):
    for n in range(4, params["max_n"] + 1, 5):
        stc, _, _, totals = _srank_joint_tallies(n)
        residues: Counter = Counter()
        for (s, value), c in stc.items():
            residues[(s, value % 5)] += c
        for i in (0, 2):
            if totals[i] % 5:
                return "fail", {"n": n, "srank_class": i, "total": totals[i]}
            share = totals[i] // 5
            for k in range(5):
                if residues.get((i, k), 0) != share:
                    return "fail", {"n": n, "srank_class": i, "class": k,
                                    "count": residues.get((i, k), 0),
                                    "expected": share}
    return "pass", None


# ---------------------------------------------------------------------------
# t-core counting


@register("CHK-TCOREGF", "t-core counts: series, n-vector and enumeration agree",
          order=200, enum_n=30, t_min=2, t_max=7)
def _chk_tcoregf(params):
    order = params["order"]
    for t in range(params["t_min"], params["t_max"] + 1):
        series = poch_product(INT, order, [(1, t, t, t), (1, 1, 1, -1)])
        vec_counts = [0] * order
        for vec, w in iter_core_vectors(t, order - 1):
            vec_counts[w] += 1
            bt = sum(i * x for i, x in enumerate(vec))
            if (w - bt) % t:
                return "fail", {"t": t, "vector": list(vec),
                                "reason": "weight residue mismatch"}
        for n in range(order):
            if series.coeff(n) != vec_counts[n]:
                return "fail", {"t": t, "n": n, "series": series.coeff(n),
                                "vectors": vec_counts[n]}
        for n in range(params["enum_n"] + 1):
            filtered = count_t_cores_by_filter(n, t)
            if filtered != vec_counts[n]:
                return "fail", {"t": t, "n": n, "filtered": filtered,
                                "vectors": vec_counts[n]}
    # 2-cores are exactly the staircases: a_2(n) = 1 iff n is triangular
    series2 = poch_product(INT, order, [(1, 2, 2, 2), (1, 1, 1, -1)])
    for n in range(order):
        k = isqrt(2 * n)
        triangular = k * (k + 1) // 2 == n
        if series2.coeff(n) != (1 if triangular else 0):
            return "fail", {"t": 2, "n": n, "reason": "staircase criterion"}
    return "pass", None


@register("CHK-THM2", "2-quotient-rank matches the St-crank distribution",
          max_n=49, joint_n=30)
def _chk_thm2(params):
    # full joint distributions agree within each srank class
    for n in range(params["joint_n"] + 1):
        stc, tqr, _, _ = _srank_joint_tallies(n)
        if stc != tqr:
            keys = set(stc) | set(tqr)
            bad = next(k for k in sorted(keys)
                       if stc.get(k, 0) != tqr.get(k, 0))
            return "fail", {"n": n, "srank_class": bad[0], "value": bad[1],
                            "st_crank_count": stc.get(bad, 0),
                            "two_quotient_rank_count": tqr.get(bad, 0)}
    # residue classes of the 2-quotient-rank split p_i(5n+4) evenly
    for n in range(4, params["max_n"] + 1, 5):
        _, tqr, _, totals = _srank_joint_tallies(n)
        residues: Counter = Counter()
        for (s, value), c in tqr.items():
            residues[(s, value % 5)] += c
        for i in (0, 2):
            share = totals[i] // 5
            for k in range(5):
                if residues.get((i, k), 0) != share:
                    return "fail", {"n": n, "srank_class": i, "class": k,
                                    "count": residues.get((i, k), 0),
                                    "expected": share}
    return "pass", None


@register("CHK-G2", "(2-quotient-rank, srank) product forms", order=25)
def _chk_g2(params):
    order = params["order"]
    # symbolic omega with omega^4 = 1
    ring = LaurentRing(("x", "w"), cyclic={"w": 4})
    lhs = Series(ring, order)
    tallies = []
    for n in range(order):
        acc = ring.zero
        row = []
        for p in enumerate_partitions(n):
            m = stats.two_quotient_rank(p)
            s = stats.srank(p)
            row.append((m, s))
            acc = acc + ring.monomial(x=m, w=s % 4)
        lhs.coeffs[n] = acc
        tallies.append(row)
    rhs = poch_product(ring, order, [(ring.one, 4, 4, 1), (ring.from_int(-1), 1, 2, 1)])
    d = 2
    while d < order:
        rhs = rhs.div_one_minus(ring.monomial(x=1, w=d % 4), d)
        rhs = rhs.div_one_minus(ring.monomial(x=-1, w=d % 4), d)
        d += 2
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"route": "symbolic", "q_power": k}
    # specializations omega^2 = +-1 against the (St-crank, srank) product
    xring = LaurentRing(("x",))
    for sign in (1, -1):
        spec = Series(xring, order)
        for n in range(order):
            acc = xring.zero
            for m, s in tallies[n]:
                acc = acc + xring.monomial(sign ** ((s // 2) % 2), x=m)
            spec.coeffs[n] = acc
        rhs2 = _lemma1_product(xring, order, 1, xring.from_int(sign), xring.from_int(sign))
        if not spec.eq_upto(rhs2):
            k = next(i for i in range(order) if spec.coeffs[i] != rhs2.coeffs[i])
            return "fail", {"route": f"omega^2={sign}", "q_power": k}
    return "pass", None


@register("CHK-G3", "3-quotient statistic reduces to the crank product",
          order=40, tally_order=20)
def _chk_g3(params):
    order = params["order"]
    ring = LaurentRing(("x",))
    x1 = ring.monomial(x=1)

    def crank_shape(n: int) -> Series:
        base = poch_product(
            ring, n,
            [(ring.one, 1, 1, 1), (ring.monomial(x=1), 1, 1, -1),
             (ring.monomial(x=-1), 1, 1, -1)],
        )
        return base.scaled(x1 + ring.one + ring.monomial(x=-1))

    # product identity for the shifted hexagonal theta (the displayed form
    # without the linear exponent has mismatched constant terms; the change
    # of variables produces n^2 + nm + m^2 + n + m)
    lhs = hexagonal_theta_sum(ring, order, lambda n, m: ring.monomial(x=n - m),
                              shifted=True)
    rhs = poch_product(
        ring, order,
        [(ring.one, 1, 1, 1), (ring.one, 3, 3, 1),
         (ring.monomial(x=3), 3, 3, 1), (ring.monomial(x=-3), 3, 3, 1),
         (ring.monomial(x=1), 1, 1, -1), (ring.monomial(x=-1), 1, 1, -1)],
    ).scaled(x1 + ring.one + ring.monomial(x=-1))
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"route": "hexagonal-theta", "q_power": k}

    # n-vector sum over 3-cores, divided by the quotient legs; the numerator
    # must also agree with the shifted hexagonal theta
    bound = isqrt(order) + 2
    numerator = Series(ring, order)
    for n1 in range(-bound, bound + 1):
        for n2 in range(-bound, bound + 1):
            w = q3(n1, n2)
            if 0 <= w < order:
                term = (ring.monomial(x=3 * n1) + ring.monomial(x=3 * n2 + 1)
                        + ring.monomial(x=-3 * n2 - 1))
                numerator.coeffs[w] = numerator.coeffs[w] + term
    if not numerator.eq_upto(lhs):
        k = next(i for i in range(order) if numerator.coeffs[i] != lhs.coeffs[i])
        return "fail", {"route": "numerator-vs-theta", "q_power": k}
    legs = poch_product(
        ring, order,
        [(ring.one, 3, 3, -1), (ring.monomial(x=3), 3, 3, -1),
         (ring.monomial(x=-3), 3, 3, -1)],
    )
    if not (numerator * legs).eq_upto(crank_shape(order)):
        return "fail", {"route": "n-vector-sum"}

    # direct tally over partitions
    tally_order = params["tally_order"]
    tally = Series(ring, tally_order)
    for n in range(tally_order):
        acc = ring.zero
        for p in enumerate_partitions(n):
            charges, counts = cores.quotient_profile(p, 3)
            n1, n2 = charges[1], charges[2]
            shift = 3 * (counts[1] - counts[2])
            acc = (acc + ring.monomial(x=3 * n1 + shift)
                   + ring.monomial(x=3 * n2 + 1 + shift)
                   + ring.monomial(x=-3 * n2 - 1 + shift))
        tally.coeffs[n] = acc
    if not tally.eq_upto(crank_shape(tally_order)):
        k = next(i for i in range(tally_order)
                 if tally.coeffs[i] != crank_shape(tally_order).coeffs[i])
        return "fail", {"route": "tally", "q_power": k}
    return "pass", None


# ---------------------------------------------------------------------------
# 5-cores, orbits and refinements


@register("CHK-5CORE", "5-core counting relations and alpha-form sums",
          order=60, psift_order=40, rel_n=104)
def _chk_5core(params):
    order = params["order"]
    table = five_core_table()
    # alpha-form sum equals the sifted 5-core counts, both by direct
    # enumeration of alpha space and through the product series
    alpha_counts = _alpha_form_counts(order)
    if alpha_counts[0] != 0:
        return "fail", {"route": "alpha-form", "reason": "Q(alpha)=0 attained"}
    for k in range(1, order):
        a5 = table.count.get(5 * k - 1, 0)
        if alpha_counts[k] != a5:
            return "fail", {"route": "alpha-form", "Q": k,
                            "alpha_count": alpha_counts[k], "a5": a5}
    gf_order = 5 * order
    core_gf = poch_product(INT, gf_order, [(1, 5, 5, 5), (1, 1, 1, -1)])
    sifted = core_gf.sift(5, 4)
    for n in range(min(order - 1, sifted.order)):
        if sifted.coeff(n) != table.count.get(5 * n + 4, 0):
            return "fail", {"route": "series-sift", "n": n}
    # p(5n+4) generating function through the alpha sum
    po = params["psift_order"]
    lhs = partition_count_series(5 * po).sift(5, 4).times_q(1)
    alpha_series = Series(INT, po, _alpha_form_counts(po))
    rhs = pochhammer_inf(INT, 1, 1, 1, -5, po) * alpha_series
    if not lhs.eq_upto(rhs, po):
        k = next(i for i in range(po) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"route": "p-sift", "q_power": k}
    # a5(5n+4) = 5 a5(n); crank classes are equal fifths
    for n in range(params["rel_n"] + 1):
        if table.count.get(5 * n + 4, 0) != 5 * table.count.get(n, 0):
            return "fail", {"route": "5corerel", "n": n}
    for w in range(4, table.limit + 1, 5):
        a5 = table.count.get(w, 0)
        if a5 % 5:
            return "fail", {"route": "5corecong", "weight": w, "count": a5}
        for j in range(5):
            if table.by_crank.get((w, j), 0) != a5 // 5:
                return "fail", {"route": "crank-classes", "weight": w, "class": j}
    # theta: explicit bijection onto crank-0 5-cores of 5n+4
    for n in range(21):
        images = set()
        for vec, w in iter_core_vectors(5, n):
            if w != n:
                continue
            img = theta_vector(vec)
            if core_weight_from_vector(img) != 5 * n + 4:
                return "fail", {"route": "theta-weight", "n": n, "vector": list(vec)}
            if stats.five_core_crank_from_vector(img) != 0:
                return "fail", {"route": "theta-crank", "n": n, "vector": list(vec)}
            images.add(img)
        if len(images) != table.count.get(n, 0):
            return "fail", {"route": "theta-injective", "n": n}
        if len(images) != table.by_crank.get((5 * n + 4, 0), 0):
            return "fail", {"route": "theta-surjective", "n": n}
    for n in range(params["rel_n"] + 1):
        if table.count.get(n, 0) != table.by_crank.get((5 * n + 4, 0), 0):
            return "fail", {"route": "5corerel2", "n": n}
    return "pass", None


@register("CHK-ORBIT", "orbit maps are weight-preserving bijections of order 5",
          max_n=49)
def _chk_orbit(params):
    for n in range(4, params["max_n"] + 1, 5):
        for shifted in (False, True):
            step = orbit_map_s if shifted else orbit_map
            mapping = {}
            for p in enumerate_partitions(n):
                q = step(p)
                if q.weight != n:
                    return "fail", {"n": n, "shifted": shifted,
                                    "partition": list(p), "image": list(q)}
                if (stats.five_core_crank(q) - stats.five_core_crank(p)) % 5 != 1:
                    return "fail", {"n": n, "shifted": shifted, "reason": "crank step",
                                    "partition": list(p)}
                if shifted and stats.srank(q) % 4 != stats.srank(p) % 4:
                    return "fail", {"n": n, "reason": "srank not preserved",
                                    "partition": list(p)}
                mapping[p] = q
            if set(mapping.values()) != set(mapping):
                return "fail", {"n": n, "shifted": shifted, "reason": "not a bijection"}
            total = len(mapping)
            if total % 5:
                return "fail", {"n": n, "reason": "p(n) not divisible by 5"}
            for p in mapping:
                q = p
                seen = []
                for _ in range(5):
                    q = mapping[q]
                    seen.append(q)
                if q != p or len(set(seen)) != 5:
                    return "fail", {"n": n, "shifted": shifted, "reason": "order",
                                    "partition": list(p)}
    return "pass", None


@register("CHK-THM3", "5-core crank mod 5 splits p0(5n+4) and p2(5n+4) evenly",
          max_n=49)
def _chk_thm3(params):
    for n in range(4, params["max_n"] + 1, 5):
        _, _, c5, totals = _srank_joint_tallies(n)
        for i in (0, 2):
            share = totals[i] // 5
            for j in range(5):
                if c5.get((i, j), 0) != share:
                    return "fail", {"n": n, "srank_class": i, "class": j,
                                    "count": c5.get((i, j), 0), "expected": share}
    # structural facts behind the weight-9 orbit table
    data = tables.table2_data(9)
    if len(data["orbits"]) != 6:
        return "fail", {"reason": "orbit count at 9", "found": len(data["orbits"])}
    first = data["orbits"][0]
    if not first["all_cores"] or len(first["members"]) != 5:
        return "fail", {"reason": "first orbit is not the 5-core orbit"}
    for ob in data["orbits"]:
        cranks = [stats.five_core_crank(m) for m in ob["members"]]
        if cranks != [0, 1, 2, 3, 4]:
            return "fail", {"reason": "crank columns", "found": cranks}
        sranks = {stats.srank(m) % 4 for m in ob["members"]}
        if len(sranks) != 1:
            return "fail", {"reason": "orbit srank not constant"}
    return "pass", None


@register("CHK-ELEGANT", "closed srank formulas for 5-cores and 5-quotients",
          max_n=29)
def _chk_elegant(params):
    for n in range(params["max_n"] + 1):
        for p in enumerate_partitions(n):
            cq = phi1(p, 5)
            nvec = phi2(cq.core, 5)
            s_core = stats.srank(cq.core)
            if s_core % 4 != stats.core_srank_mod4(5, nvec):
                return "fail", {"route": "core-cubic", "partition": list(p)}
            total = s_core + sum(stats.srank(q) for q in cq.quotient)
            total += 2 * sum(q.weight * (nvec[i] + i)
                             for i, q in enumerate(cq.quotient))
            if stats.srank(p) % 4 != total % 4:
                return "fail", {"route": "quotient-expansion", "partition": list(p)}
            if n % 5 == 4:
                alpha = alpha_from_n(nvec)
                cyc = sum(
                    alpha[i] * alpha[(i + 1) % 5] * (alpha[i] - alpha[(i + 1) % 5])
                    for i in range(5)
                )
                if s_core % 4 != cyc % 4:
                    return "fail", {"route": "alpha-core", "partition": list(p)}
                a = alpha
                cross = 2 * (
                    (a[0] + a[4]) * cq.quotient[0].weight
                    + (a[2] + a[3]) * cq.quotient[1].weight
                    + (a[1] + a[2]) * cq.quotient[2].weight
                    + (a[0] + a[1]) * cq.quotient[3].weight
                    + (a[3] + a[4]) * cq.quotient[4].weight
                )
                full = cyc + sum(stats.srank(q) for q in cq.quotient) + cross
                if stats.srank(p) % 4 != full % 4:
                    return "fail", {"route": "alpha-expansion", "partition": list(p)}
    return "pass", None


@register("CHK-REFINE", "srank-refined 5-core counting relations",
          refine_n=100, theta_n=104, invar_n=25)
def _chk_refine(params):
    table = five_core_table()
    for w in range(4, table.limit + 1, 5):
        for i in (0, 2):
            total = table.by_srank.get((w, i), 0)
            if total % 5:
                return "fail", {"route": "refine", "weight": w, "srank_class": i}
            for j in range(5):
                if table.by_srank_crank.get((w, i, j), 0) != total // 5:
                    return "fail", {"route": "refine", "weight": w,
                                    "srank_class": i, "crank_class": j}
    for n in range(params["theta_n"] + 1):
        for i in (0, 2):
            lhs = table.by_srank.get((n, i), 0)
            rhs = table.by_srank_crank.get((5 * n + 4, i, 0), 0)
            if lhs != rhs:
                return "fail", {"route": "refine2", "n": n, "srank_class": i,
                                "lhs": lhs, "rhs": rhs}
    for n in range(params["refine_n"] + 1):
        for i in (0, 2):
            if table.by_srank.get((5 * n + 4, i), 0) != 5 * table.by_srank.get((n, i), 0):
                return "fail", {"route": "refine3", "n": n, "srank_class": i}
    # theta preserves srank mod 4; the cubic difference identity holds exactly
    for vec, w in iter_core_vectors(5, params["theta_n"]):
        img = theta_vector(vec)
        if stats.core_srank_mod4(5, img) != stats.core_srank_mod4(5, vec):
            return "fail", {"route": "theta-srank", "vector": list(vec)}
    for vec, w in iter_core_vectors(5, params["invar_n"]):
        img = theta_vector(vec)
        diff = sum((vec[i] + i) ** 3 - (img[i] + i) ** 3 for i in range(5))
        n0, n1, n2, n3, n4 = vec
        middle = 2 * (
            n0 * n2 * (n0 + n2) + n1 * n3 * (n1 + n3) + n2 * n3 * (n2 + n3)
            + n1 * (n1 + 1) + n2 * (n2 + 1) + n3 * (n3 + 1)
        )
        if diff % 4 != middle % 4 or middle % 4 != 0:
            return "fail", {"route": "cubic-difference", "vector": list(vec),
                            "diff_mod4": diff % 4, "middle_mod4": middle % 4}
    return "pass", None


@register("CHK-A50", "srank-0 5-core counts by weight residue mod 4",
          max_arg=520, form4_n=100, map_n=25)
def _chk_a50(params):
    table = five_core_table()
    top = min(params["max_arg"], table.limit)
    for m in range(top + 1):
        a50 = table.by_srank.get((m, 0), 0)
        if m % 4 in (0, 1):
            if a50 != table.count.get(m, 0):
                return "fail", {"route": f"4n+{m % 4}", "weight": m}
        elif m % 4 == 2:
            if a50 != 0:
                return "fail", {"route": "4n+2", "weight": m, "count": a50}
    for n in range(params["form4_n"] + 1):
        if table.by_srank.get((4 * n + 3, 0), 0) != table.count.get(n, 0):
            return "fail", {"route": "4n+3", "n": n}
    # the doubling map is an explicit bijection onto the srank-0 class
    for n in range(params["map_n"] + 1):
        images = set()
        for vec, w in iter_core_vectors(5, n):
            if w != n:
                continue
            img = quadruple_shift_vector(vec)
            if core_weight_from_vector(img) != 4 * n + 3:
                return "fail", {"route": "map-weight", "n": n, "vector": list(vec)}
            if tuple(x % 2 for x in img) != (0, 1, 0, 1, 0):
                return "fail", {"route": "map-parity", "n": n, "vector": list(vec)}
            if stats.core_srank_mod4(5, img) != 0:
                return "fail", {"route": "map-srank", "n": n, "vector": list(vec)}
            images.add(img)
        if len(images) != table.count.get(n, 0):
            return "fail", {"route": "map-injective", "n": n}
        if len(images) != table.by_srank.get((4 * n + 3, 0), 0):
            return "fail", {"route": "map-surjective", "n": n}
    # parity criterion: srank-0 at weight 3 mod 4 means pattern (0,1,0,1,0)
    for vec, w in iter_core_vectors(5, top):
        if w % 4 != 3:
            continue
        pattern = tuple(x % 2 for x in vec)
        zero_class = stats.core_srank_mod4(5, vec) == 0
        if zero_class != (pattern == (0, 1, 0, 1, 0)):
            return "fail", {"route": "parity-criterion", "vector": list(vec)}
    return "pass", None


# ---------------------------------------------------------------------------
# srank of t-cores, quotients and strips


@register("CHK-THM4", "closed form for the srank of a t-core",
          max_weight=30, t_min=2, t_max=9, g_range=20)
def _chk_thm4(params):
    for t in range(params["t_min"], params["t_max"] + 1):
        for vec, w in iter_core_vectors(t, params["max_weight"]):
            core = phi2_inv(vec)
            if phi2(core, t) != vec:
                return "fail", {"t": t, "reason": "vector round trip",
                                "vector": list(vec)}
            if stats.srank(core) % 4 != stats.core_srank_mod4(t, vec):
                return "fail", {"t": t, "vector": list(vec), "core": list(core)}
        g = params["g_range"]
        for i in range(t):
            for n in range(-g, g + 1):
                v = stats.srank_charge_contribution(t, n, i)
                w = stats.srank_charge_contribution(t, -n, t - 1 - i)
                if v + w != 0 or v % 2 or (v - w) % 4:
                    return "fail", {"t": t, "n": n, "i": i, "reason": "cubic identity"}
    return "pass", None


@register("CHK-SRTQ", "srank from the core and quotient data alone",
          max_n=24, t_min=2, t_max=9)
def _chk_srtq(params):
    for n in range(params["max_n"] + 1):
        for p in enumerate_partitions(n):
            s = stats.srank(p) % 4
            for t in range(params["t_min"], params["t_max"] + 1):
                if stats.decomposition_srank_mod4(phi1(p, t)) != s:
                    return "fail", {"t": t, "partition": list(p)}
    return "pass", None


@register("CHK-STRIP", "srank increments under cell and border-strip attachment",
          max_n=18)
def _chk_strip(params):
    top = params["max_n"]
    for n in range(top + 1):
        for p in enumerate_partitions(n):
            s = stats.srank(p)
            # single cells at every addable corner
            for row in range(1, len(p) + 2):
                col = p.part(row) + 1
                if row > 1 and p.part(row - 1) < col:
                    continue
                grown = add_cell(p, (row, col))
                if (stats.srank(grown) - s - 2 * (row + col)) % 4:
                    return "fail", {"route": "cell", "partition": list(p),
                                    "cell": [row, col]}
            # strips of every length
            for length in range(1, n + 1):
                for removal in rim_hook_removals(p, length):
                    x, y = removal.head
                    base = stats.srank(removal.result)
                    if (s - base - (2 * length * (x + y) + length * length - length)) % 4:
                        return "fail", {"route": "strip", "partition": list(p),
                                        "length": length, "head": [x, y]}
                    # reduced forms for strips of length divisible by t
                    for t in range(2, 10):
                        if length % t:
                            continue
                        lam = length // t
                        if t % 2 == 0:
                            a = 0 if t % 4 == 0 else 1
                            expected = 2 * a * lam
                        else:
                            a = 0 if t % 4 == 1 else 1
                            expected = 2 * lam * (x + y + a) + lam * lam - lam
                        if (s - base - expected) % 4:
                            return "fail", {"route": "strip-reduced", "t": t,
                                            "partition": list(p), "length": length}
    # head parity when a strip grows one quotient component
    for t in (3, 5):
        for n in range(top + 1):
            for base in enumerate_partitions(n):
                cq = phi1(base, t)
                nvec = phi2(cq.core, t)
                for i in range(t):
                    if cq.quotient[i]:
                        continue
                    lam = 1
                    while n + t * lam <= top:
                        quotient = list(cq.quotient)
                        quotient[i] = Partition((lam,))
                        grown = phi1_inv(CoreQuotient(t, cq.core, tuple(quotient)))
                        hit = [r for r in rim_hook_removals(grown, t * lam)
                               if r.result == base]
                        if len(hit) != 1:
                            return "fail", {"route": "word-strip", "t": t,
                                            "partition": list(base), "slot": i}
                        x, y = hit[0].head
                        if (x + y - nvec[i] - i) % 2:
                            return "fail", {"route": "head-parity", "t": t,
                                            "partition": list(base), "slot": i,
                                            "head": [x, y]}
                        lam += 1
    return "pass", None


@register("CHK-BGRALT", "BG-rank equals the 2-core charge and the residue gap",
          max_n=25)
def _chk_bgralt(params):
    from .partitions import residue_counts

    for n in range(params["max_n"] + 1):
        for p in enumerate_partitions(n):
            j = stats.bg_rank(p)
            r = residue_counts(p, 2)
            core2 = cores.phi1(p, 2).core
            n0 = phi2(core2, 2)[0]
            if j != r[0] - r[1] or j != n0:
                return "fail", {"partition": list(p), "bg": j,
                                "residue_gap": r[0] - r[1], "charge": n0}
            if (stats.srank(p) - (n - j * (2 * j - 1))) % 4:
                return "fail", {"route": "srank-from-bg", "partition": list(p)}
    return "pass", None


# ---------------------------------------------------------------------------
# BG-rank families


@register("CHK-FJ", "(BG-rank, 2-quotient-rank) product forms", order=25, xi_order=40)
def _chk_fj(params):
    order = params["order"]
    ring = LaurentRing(("x",))
    attained = sorted({j for n in range(order) for (j, _) in _bgr_tqr_tally(n)})
    for j in attained:
        shift = (2 * j - 1) * j
        if shift >= order:
            continue
        lhs = Series(ring, order)
        for n in range(order):
            acc = ring.zero
            for (jj, m), c in _bgr_tqr_tally(n).items():
                if jj == j:
                    acc = acc + ring.monomial(c, x=m)
            lhs.coeffs[n] = acc
        rhs = poch_product(
            ring, order,
            [(ring.monomial(x=1), 2, 2, -1), (ring.monomial(x=-1), 2, 2, -1)],
        ).times_q(shift)
        if not lhs.eq_upto(rhs):
            k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
            return "fail", {"j": j, "q_power": k}
    # cyclotomic specialization: product versus the exact divided theta form
    xi_order = params["xi_order"]
    lhs = poch_product(
        CYC5, xi_order,
        [(CYC5.xi(1), 2, 2, -1), (CYC5.xi(4), 2, 2, -1)],
    )
    rhs = Series(CYC5, xi_order)
    n = 0
    while n * n + n < xi_order:
        term = CYC5.xi(-2 * n) * CYC5.geometric_xi2(n)
        if n % 2:
            term = -term
        rhs.coeffs[n * n + n] = rhs.coeffs[n * n + n] + term
        n += 1
    rhs = rhs * pochhammer_inf(CYC5, CYC5.one, 10, 10, -1, xi_order)
    if not lhs.eq_upto(rhs):
        k = next(i for i in range(xi_order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"route": "cyclotomic", "q_power": k}
    return "pass", None


_THM5_CASES = {
    0: lambda j: j % 5 in (1, 2),
    1: lambda j: j % 5 not in (1, 2),
    2: lambda j: j % 5 not in (0, 3),
    3: lambda j: j % 5 in (0, 3),
    4: lambda j: True,
}


@register("CHK-THM5", "BG-rank classes split by 2-quotient-rank mod 5", max_n=45)
def _chk_thm5(params):
    for n in range(params["max_n"] + 1):
        tally = _bgr_tqr_tally(n)
        case = _THM5_CASES[n % 5]
        totals: Counter = Counter()
        residues: Counter = Counter()
        for (j, m), c in tally.items():
            totals[j] += c
            residues[(j, m % 5)] += c
        for j, total in totals.items():
            if not case(j):
                continue
            if total % 5:
                return "fail", {"n": n, "j": j, "total": total}
            for k in range(5):
                if residues.get((j, k), 0) != total // 5:
                    return "fail", {"n": n, "j": j, "class": k,
                                    "count": residues.get((j, k), 0)}
    return "pass", None


@register("CHK-COR5", "BG-rank refined congruences mod 5", max_n=45)
def _chk_cor5(params):
    for n in range(params["max_n"] + 1):
        tally = _bgr_tqr_tally(n)
        case = _THM5_CASES[n % 5]
        totals: Counter = Counter()
        for (j, _), c in tally.items():
            totals[j] += c
        for j, total in totals.items():
            if case(j) and total % 5:
                return "fail", {"n": n, "j": j, "count": total}
    return "pass", None


def _scan_bg_counterexample(max_weight: int):
    counts = _five_core_bg_counts(max_weight)
    n = 0
    while True:
        base = 5 * n
        if base > max_weight:
            return None
        for r in range(4):
            weight = base + r
            if weight > max_weight:
                break
            attained = sorted(j for (w, j) in counts if w == weight)
            for j in attained:
                c = counts[(weight, j)]
                if c % 5:
                    return {"n": n, "r": r, "j": j, "weight": weight, "count": c}
        n += 1


@register("CHK-AB5JR", "5-core BG-rank classes on 5n+r, r<4: congruence fails",
          max_weight=60)
def _chk_ab5jr(params):
    witness = _scan_bg_counterexample(params["max_weight"])
    if witness is None:
        return "fail", {"searched_up_to": params["max_weight"],
                        "reason": "no counterexample found"}
    return "counterexample-found", witness


@register("CHK-AB5J4", "5-core BG-rank classes on 5n+4 are 0 mod 5",
          max_weight=104)
def _chk_ab5j4(params):
    counts = _five_core_bg_counts(params["max_weight"])
    for (w, j), c in sorted(counts.items()):
        if w % 5 == 4 and c % 5:
            return "fail", {"weight": w, "j": j, "count": c}
    return "pass", None


@register("CHK-JTPA", "triple-product specialization: sum of triangular powers",
          order=1000)
def _chk_jtpa(params):
    order = params["order"]
    lhs = poch_product(INT, order, [(1, 4, 4, 1), (-1, 1, 2, 1)])
    if not lhs.eq_upto(triangular_theta(INT, order)):
        return "fail", {"route": "triangular"}
    mid = poch_product(INT, order, [(1, 4, 4, 1), (-1, 3, 4, 1), (-1, 1, 4, 1)])
    if not lhs.eq_upto(mid):
        return "fail", {"route": "regrouped-product"}
    return "pass", None


@register("CHK-RAMBEST", "closed product for the p(5n+4) generating function",
          order=30)
def _chk_rambest(params):
    order = params["order"]
    lhs = partition_count_series(5 * order + 5).sift(5, 4)
    rhs = poch_product(INT, order, [(1, 5, 5, 5), (1, 1, 1, -6)]).scaled(5)
    if not lhs.eq_upto(rhs, order):
        k = next(i for i in range(order) if lhs.coeffs[i] != rhs.coeffs[i])
        return "fail", {"q_power": k, "lhs": lhs.coeffs[k], "rhs": rhs.coeffs[k]}
    return "pass", None


@register("CHK-JTP", "Jacobi triple product at z = 1, -1 and symbolic z",
          order=100)
def _chk_jtp(params):
    order = params["order"]
    for z in (1, -1):
        lhs = theta_jtp(INT, order, z, z)
        rhs = poch_product(INT, order, [(1, 2, 2, 1), (-z, 1, 2, 1), (-z, 1, 2, 1)])
        if not lhs.eq_upto(rhs):
            return "fail", {"z": z}
    ring = LaurentRing(("z",))
    z = ring.monomial(z=1)
    zi = ring.monomial(z=-1)
    lhs = theta_jtp(ring, order, z, zi)
    rhs = poch_product(ring, order, [(ring.one, 2, 2, 1), (-z, 1, 2, 1), (-zi, 1, 2, 1)])
    if not lhs.eq_upto(rhs):
        return "fail", {"z": "symbolic"}
    return "pass", None


def search_counterexample(family: str, max_weight: int = 60) -> CheckReport:
    """Scan a claim family for its smallest violation."""
    if family != "ab5jr":
        raise ValueError(f"unknown counterexample family {family!r}")
    return run_check("CHK-AB5JR", max_weight=max_weight)
