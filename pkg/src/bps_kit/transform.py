"""The genus-filtered transform between Gromov-Witten and Gopakumar-Vafa tables.

A table holds rational invariants indexed by (genus, degree vector); the
forward map evaluates the classical resummation over multiple covers

    sum_{g,beta} GW q^beta lam^(2g-2)
        = sum_{g,k,beta} GV (1/k) (2 sin(k lam / 2))^(2g-2) q^(k beta),

and the inverse map solves it triangularly: the diagonal coefficient is
1 because (2 sin(lam/2))^(2g-2) starts with lam^(2g-2), every other
contribution comes from a strictly smaller degree vector or a strictly
smaller genus.  On genus-zero rank-1 tables the inverse specializes to
the Mobius-inverted divisor sum GV_d = sum_{e|d} mu(e)/e^3 GW_{d/e}.

All arithmetic is exact.  Degree vectors live in the nonnegative orthant
of a rank-r lattice; k | beta means every component divisible by k.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .series import LAMBDA, LaurentSeries, _as_fraction

__all__ = [
    "KIND_GW",
    "KIND_GV",
    "InvariantTable",
    "IntegralityReport",
    "TableKindError",
    "TableBoundError",
    "sin_power_series",
    "gw_to_gv",
    "gv_to_gw",
    "mobius",
    "gw_to_gv_genus0_mobius",
    "check_integrality",
    "degree_vectors",
    "genus_zero_slice",
]

KIND_GW = "GW"
KIND_GV = "GV"


class TableKindError(ValueError):
    """Raised when an operation receives a table of the wrong kind."""


class TableBoundError(ValueError):
    """Raised when an entry violates the declared table bounds."""


def _total(deg: tuple[int, ...]) -> int:
    return sum(deg)


def degree_vectors(degree_max: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All nonzero vectors 0 <= v <= degree_max, ordered by (total, lex)."""
    ranges = [range(d + 1) for d in degree_max]
    vecs = [v for v in itertools.product(*ranges) if any(v)]
    vecs.sort(key=lambda v: (sum(v), v))
    return vecs


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(math.isqrt(n)) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


@dataclass(frozen=True)
class InvariantTable:
    """Invariants indexed by (genus, degree vector), with declared bounds.

    Missing entries are exact zeros.  Entries must satisfy g <= genus_max,
    beta <= degree_max componentwise and beta != 0.
    """

    kind: str
    lattice_rank: int
    genus_max: int
    degree_max: tuple[int, ...]
    entries: Mapping[tuple[int, tuple[int, ...]], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in (KIND_GW, KIND_GV):
            raise TableKindError(f"unknown table kind {self.kind!r}")
        if self.lattice_rank < 1:
            raise TableBoundError("lattice rank must be positive")
        if self.genus_max < 0:
            raise TableBoundError("genus bound must be nonnegative")
        dmax = tuple(int(d) for d in self.degree_max)
        if len(dmax) != self.lattice_rank or any(d < 0 for d in dmax):
            raise TableBoundError(
                f"degree_max {self.degree_max} incompatible with rank {self.lattice_rank}"
            )
        clean: dict[tuple[int, tuple[int, ...]], Fraction] = {}
        for (g, deg), value in self.entries.items():
            deg = tuple(int(d) for d in deg)
            v = _as_fraction(value)
            if g < 0 or g > self.genus_max:
                raise TableBoundError(f"entry genus {g} outside [0, {self.genus_max}]")
            if len(deg) != self.lattice_rank:
                raise TableBoundError(f"degree {deg} has wrong rank")
            if not any(deg):
                raise TableBoundError("degree vector must be nonzero")
            if any(d < 0 for d in deg) or any(d > m for d, m in zip(deg, dmax)):
                raise TableBoundError(f"degree {deg} outside bounds {dmax}")
            if v != 0:
                clean[(g, deg)] = v
        object.__setattr__(self, "degree_max", dmax)
        object.__setattr__(self, "entries", clean)

    def value(self, genus: int, degree: tuple[int, ...]) -> Fraction:
        degree = tuple(degree)
        if genus < 0 or genus > self.genus_max:
            raise TableBoundError(f"genus {genus} outside table bounds")
        if any(d < 0 for d in degree) or any(
            d > m for d, m in zip(degree, self.degree_max)
        ):
            raise TableBoundError(f"degree {degree} outside table bounds")
        return self.entries.get((genus, degree), Fraction(0))

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1]))


@dataclass(frozen=True)
class IntegralityReport:
    is_integral: bool
    violations: tuple[tuple[int, tuple[int, ...], Fraction], ...]


def sin_power_series(k: int, genus: int, order: int) -> LaurentSeries:
    """Expansion of (2 sin(k*lam/2))**(2g-2) at lam = 0, exact.

    Only even exponents appear; the lowest term is k^(2g-2) lam^(2g-2).
    The genus-zero case inverts the squared sine series.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if order <= -2:
        raise ValueError("order must exceed -2")
    if genus == 1:
        return LaurentSeries.one(LAMBDA, order)
    slack = order + 8
    sine = LaurentSeries.from_terms(
        LAMBDA,
        {
            j: Fraction(2 * (-1) ** (j // 2) * k**j, 2**j * math.factorial(j))
            for j in range(1, slack, 2)
        },
        slack,
    )
    square = sine * sine
    if genus == 0:
        return square.inverse(order)
    return (square ** (genus - 1)).truncate(order)


@lru_cache(maxsize=None)
def _lambda_coefficients(genus_max: int) -> tuple[tuple[Fraction, ...], ...]:
    """table[g][h] = [lam^(2h-2)] (2 sin(lam/2))**(2g-2) for g, h <= genus_max."""
    order = 2 * genus_max - 1
    out = []
    for g in range(genus_max + 1):
        series = sin_power_series(1, g, order)
        out.append(
            tuple(series.coefficient(2 * h - 2) for h in range(genus_max + 1))
        )
    return tuple(out)


def _cover_coefficient(coeffs, k: int, g: int, h: int) -> Fraction:
    # [lam^(2h-2)] of (1/k)(2 sin(k lam/2))^(2g-2) = k^(2h-3) * base coefficient
    base = coeffs[g][h]
    if base == 0:
        return Fraction(0)
    e = 2 * h - 3
    return base * (Fraction(k) ** e)


def gv_to_gw(table: InvariantTable) -> InvariantTable:
    """Forward evaluation of the multiple-cover resummation, within bounds."""
    if table.kind != KIND_GV:
        raise TableKindError(f"expected a {KIND_GV} table, got {table.kind}")
    coeffs = _lambda_coefficients(table.genus_max)
    entries: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for gamma in degree_vectors(table.degree_max):
        shared = math.gcd(*gamma)
        for k in _divisors(shared):
            beta = tuple(d // k for d in gamma)
            for g in range(table.genus_max + 1):
                v = table.entries.get((g, beta))
                if not v:
                    continue
                for h in range(table.genus_max + 1):
                    c = _cover_coefficient(coeffs, k, g, h)
                    if c:
                        key = (h, gamma)
                        entries[key] = entries.get(key, Fraction(0)) + v * c
    return InvariantTable(
        KIND_GW, table.lattice_rank, table.genus_max, table.degree_max, entries
    )


def gw_to_gv(table: InvariantTable) -> InvariantTable:
    """Invert the resummation by a triangular solve.

    Degree vectors are visited in increasing total degree (lex to break
    ties), genus ascending within each degree; at each cell everything
    except the diagonal (k = 1, same genus, unit coefficient) is already
    known and gets subtracted.
    """
    if table.kind != KIND_GW:
        raise TableKindError(f"expected a {KIND_GW} table, got {table.kind}")
    coeffs = _lambda_coefficients(table.genus_max)
    solved: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for gamma in degree_vectors(table.degree_max):
        shared = math.gcd(*gamma)
        for h in range(table.genus_max + 1):
            acc = table.entries.get((h, gamma), Fraction(0))
            for k in _divisors(shared):
                beta = tuple(d // k for d in gamma)
                for g in range(table.genus_max + 1):
                    if k == 1 and g == h:
                        continue
                    v = solved.get((g, beta))
                    if not v:
                        continue
                    c = _cover_coefficient(coeffs, k, g, h)
                    if c:
                        acc -= v * c
            if acc:
                solved[(h, gamma)] = acc
    return InvariantTable(
        KIND_GV, table.lattice_rank, table.genus_max, table.degree_max, solved
    )


def mobius(n: int) -> int:
    """Mobius function via trial-division factorization."""
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    if n == 1:
        return 1
    primes = 0
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            primes += 1
        p += 1
    if n > 1:
        primes += 1
    return -1 if primes % 2 else 1


def gw_to_gv_genus0_mobius(table: InvariantTable) -> InvariantTable:
    """Genus-zero rank-1 inversion via the divisor sum with Mobius weights."""
    if table.kind != KIND_GW:
        raise TableKindError(f"expected a {KIND_GW} table, got {table.kind}")
    if table.lattice_rank != 1:
        raise TableBoundError("the Mobius path requires a rank-1 table")
    if table.genus_max != 0:
        raise TableBoundError("the Mobius path requires a genus-zero table")
    dmax = table.degree_max[0]
    entries: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for d in range(1, dmax + 1):
        total = Fraction(0)
        for e in _divisors(d):
            mu = mobius(e)
            if mu:
                total += Fraction(mu, e**3) * table.entries.get(
                    (0, (d // e,)), Fraction(0)
                )
        if total:
            entries[(0, (d,))] = total
    return InvariantTable(KIND_GV, 1, 0, table.degree_max, entries)


def check_integrality(table: InvariantTable) -> IntegralityReport:
    """List every entry whose value is not an integer."""
    if table.kind != KIND_GV:
        raise TableKindError(f"expected a {KIND_GV} table, got {table.kind}")
    violations = tuple(
        (g, deg, v)
        for (g, deg), v in table.sorted_items()
        if v.denominator != 1
    )
    return IntegralityReport(is_integral=not violations, violations=violations)


def genus_zero_slice(table: InvariantTable) -> InvariantTable:
    """Restrict a table to its genus-zero entries (genus_max becomes 0)."""
    entries = {
        (g, deg): v for (g, deg), v in table.entries.items() if g == 0
    }
    return InvariantTable(
        table.kind, table.lattice_rank, 0, table.degree_max, entries
    )
