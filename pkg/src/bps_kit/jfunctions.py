"""Cover series, I/J-function coefficients, and the GV-weighted right side.

Two scalar series drive everything: the degree-r cover coefficients

    a(r, q^r) = (r-1)/(1-q^r) + 1/(1-q^r)^2,
    b(r, q^r) = (r^2-1)/(1-q^r) + 3/(1-q^r)^2 - 2/(1-q^r)^3,

both proper rational functions regular at q = 0.  The localization-style
I-coefficient at Novikov degree r lives in the rank-6 ring and has poles
at q = 0; splitting each coordinate into Laurent polynomial + proper
part must land exactly on the J-coefficient

    (1-Pt)^2 (1+(1-P)) a(r,q^r) + (1-Pt)^2 (1-P) b(r,q^r),

which is what :func:`split_check` verifies.  With the compactifying
factor (1-Pt)^2 removed the same combination lives in the rank-2 ring
(:func:`j_x_coefficient`), and :func:`jmgs_rhs` assembles the analogous
double sum for an arbitrary genus-zero invariant table, the conjectural
quantum K-theoretic side of the story.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .kring import KElem, X_RING, Y_RING, gen_p, gen_t, ring_one
from .series import QRationalFunction, QSeries, polar_split, q_power
from .transform import InvariantTable, KIND_GV, TableBoundError, TableKindError

__all__ = [
    "a_series",
    "b_series",
    "i_coefficient",
    "j_y_coefficient",
    "j_x_coefficient",
    "x_element_from_cover_data",
    "NovikovExpansion",
    "i_expansion",
    "j_expansion",
    "split_check",
    "SplitCheckReport",
    "SplitCheckResult",
    "DivisorPairing",
    "JmgsTerm",
    "JmgsRhs",
    "jmgs_rhs",
]


def _one_minus_q_to(r: int) -> QRationalFunction:
    return QRationalFunction([1] + [0] * (r - 1) + [-1])


def a_series(r: int) -> QRationalFunction:
    """Divisor-direction cover coefficient of degree r; a(r, 0) = r."""
    if r < 1:
        raise ValueError("cover degree must be positive")
    u = _one_minus_q_to(r)
    return (r - 1) / u + 1 / u**2


def b_series(r: int) -> QRationalFunction:
    """Structure-sheaf cover coefficient of degree r; b(r, 0) = r^2."""
    if r < 1:
        raise ValueError("cover degree must be positive")
    u = _one_minus_q_to(r)
    return (r * r - 1) / u + 3 / u**2 - 2 / u**3


def i_coefficient(r: int) -> KElem:
    """Novikov-degree-r coefficient of the localization series, rank-6 ring.

    The telescoping products of (1 - Pt q^m) over (1 - P q^m) cancel
    against the (1-Pt)^2 prefactor (see absorption_check), leaving

        (1-Pt)^2 / ((Pt)^{2r} q^{r(r-1)} (1 - P q^r)^2).

    Both ring inversions go through the generic linear solve; Pt is
    invertible because 1 - Pt is nilpotent.
    """
    if r < 1:
        raise ValueError("Novikov degree must be positive")
    one = ring_one(Y_RING)
    p = gen_p(Y_RING)
    t = gen_t(Y_RING)
    pt_inv = (p * t).inverse()
    n2 = (one - p * t) ** 2
    factor_inv = (one - p * q_power(r)).inverse()
    return n2 * pt_inv ** (2 * r) * factor_inv ** 2 * q_power(-r * (r - 1))


def j_y_coefficient(r: int) -> KElem:
    """Novikov-degree-r coefficient of the cover-summed series, rank-6 ring."""
    one = ring_one(Y_RING)
    p = gen_p(Y_RING)
    t = gen_t(Y_RING)
    n2 = (one - p * t) ** 2
    return n2 * (one + (one - p)) * a_series(r) + n2 * (one - p) * b_series(r)


def j_x_coefficient(r: int) -> KElem:
    """Same combination with the (1-Pt)^2 factor removed, rank-2 ring."""
    return x_element_from_cover_data(a_series(r), b_series(r))


def x_element_from_cover_data(
    divisor_coeff: QRationalFunction, structure_coeff: QRationalFunction
) -> KElem:
    """Assemble (1+(1-P)) * divisor + (1-P) * structure in the rank-2 ring.

    This is the fixed dictionary between abstract divisor/structure
    symbols and rank-2 ring classes used by the delta cross-check.
    """
    one = ring_one(X_RING)
    p = gen_p(X_RING)
    return (one + (one - p)) * divisor_coeff + (one - p) * structure_coeff


def _as_qrf(c) -> QRationalFunction:
    if isinstance(c, QRationalFunction):
        return c
    return QRationalFunction.constant(c)


@dataclass(frozen=True)
class NovikovExpansion:
    """Ring-valued coefficients indexed by positive Novikov degree.

    All stored elements must live in one ring; degrees run from 1 to
    degree_max (missing degrees are zero).
    """

    degree_max: int
    terms: Mapping[int, KElem]

    def __post_init__(self):
        if self.degree_max < 1:
            raise ValueError("degree_max must be at least 1")
        rings = {el.ring.name for el in self.terms.values()}
        if len(rings) > 1:
            raise ValueError(f"mixed rings in one expansion: {sorted(rings)}")
        for r in self.terms:
            if not 1 <= r <= self.degree_max:
                raise ValueError(f"degree {r} outside [1, {self.degree_max}]")
        object.__setattr__(self, "terms", dict(self.terms))

    def sorted_terms(self):
        return sorted(self.terms.items())


def i_expansion(r_max: int) -> NovikovExpansion:
    """All localization coefficients up to Novikov degree r_max."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    return NovikovExpansion(r_max, {r: i_coefficient(r) for r in range(1, r_max + 1)})


def j_expansion(which: str, r_max: int) -> NovikovExpansion:
    """Cover-summed coefficients up to degree r_max; which is "X" or "Y"."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    if which == "X":
        build = j_x_coefficient
    elif which == "Y":
        build = j_y_coefficient
    else:
        raise ValueError(f"unknown ring selector {which!r}")
    return NovikovExpansion(r_max, {r: build(r) for r in range(1, r_max + 1)})


@dataclass(frozen=True)
class SplitCheckResult:
    r: int
    passed: bool
    residuals: tuple[QRationalFunction, ...]  # proper part minus expected, per coordinate


@dataclass(frozen=True)
class SplitCheckReport:
    results: tuple[SplitCheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(res.passed for res in self.results)


def split_check(r_max: int) -> SplitCheckReport:
    """Coordinatewise: proper part of i_coefficient(r) == j_y_coefficient(r).

    Any pole-location or truncation error from the split propagates;
    a clean report only ever means the identity was actually checked.
    """
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    results = []
    for r in range(1, r_max + 1):
        i_el = i_coefficient(r)
        j_el = j_y_coefficient(r)
        residuals = []
        for idx in range(Y_RING.rank):
            sp = polar_split(_as_qrf(i_el.coords[idx]))
            residuals.append(sp.proper - _as_qrf(j_el.coords[idx]))
        passed = all(res.is_zero for res in residuals)
        results.append(SplitCheckResult(r, passed, tuple(residuals)))
    return SplitCheckReport(tuple(results))


# ---------------------------------------------------------------------------
# the GV-weighted right-hand side for arbitrary genus-zero tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DivisorPairing:
    """Integer pairing vectors: the j-th divisor pairs with degree d as dot(vectors[j], d)."""

    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "vectors", tuple(tuple(int(x) for x in v) for v in self.vectors)
        )

    @property
    def rank(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0


@dataclass(frozen=True)
class JmgsTerm:
    """Data attached to one total Novikov degree.

    divisor_exact[j] multiplies the j-th divisor-direction symbol, and
    structure_exact multiplies the structure-sheaf symbol; expansions
    repeat the same data as truncated q-series for display.
    """

    divisor_exact: tuple[QRationalFunction, ...]
    divisor_expansion: tuple[QSeries, ...]
    structure_exact: QRationalFunction
    structure_expansion: QSeries


@dataclass(frozen=True)
class JmgsRhs:
    """The assembled right-hand side: 1 + sum over total degrees of terms."""

    lattice_rank: int
    r_max: int
    q_order: int
    terms: Mapping[tuple[int, ...], JmgsTerm]
    constant: Fraction = Fraction(1)

    def sorted_degrees(self):
        return sorted(self.terms, key=lambda d: (sum(d), d))


def jmgs_rhs(
    gv: InvariantTable, pairing: DivisorPairing, r_max: int, q_order: int
) -> JmgsRhs:
    """Assemble the double sum over (degree d, cover degree r), grouped by r*d.

    Each nonzero genus-zero invariant GV_d contributes
    GV_d * dot(v_j, d) * a(r, q^r) in the j-th divisor direction and
    GV_d * b(r, q^r) in the structure direction, at total degree r*d.
    """
    if gv.kind != KIND_GV:
        raise TableKindError(f"expected a {KIND_GV} table, got {gv.kind}")
    if any(g > 0 for (g, _) in gv.entries):
        raise TableBoundError("the right-hand side uses genus-zero invariants only")
    if pairing.rank != gv.lattice_rank:
        raise TableBoundError(
            f"pairing rank {pairing.rank} != table rank {gv.lattice_rank}"
        )
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    n_div = len(pairing.vectors)
    buckets: dict[tuple[int, ...], list] = {}
    for (g, d), value in sorted(gv.entries.items(), key=lambda kv: kv[0]):
        for r in range(1, r_max + 1):
            total = tuple(r * x for x in d)
            slot = buckets.setdefault(
                total,
                [[QRationalFunction.constant(0)] * n_div, QRationalFunction.constant(0)],
            )
            a_r = a_series(r)
            b_r = b_series(r)
            for j, vec in enumerate(pairing.vectors):
                weight = sum(x * y for x, y in zip(vec, d))
                if weight:
                    slot[0][j] = slot[0][j] + a_r * (value * weight)
            slot[1] = slot[1] + b_r * value
    terms = {}
    for total, (div_parts, structure) in buckets.items():
        terms[total] = JmgsTerm(
            divisor_exact=tuple(div_parts),
            divisor_expansion=tuple(p.expand(q_order) for p in div_parts),
            structure_exact=structure,
            structure_expansion=structure.expand(q_order),
        )
    return JmgsRhs(gv.lattice_rank, r_max, q_order, terms)
