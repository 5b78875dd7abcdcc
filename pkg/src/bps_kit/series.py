"""Exact series and rational-function arithmetic over the rationals.

Everything in this module is built on :class:`fractions.Fraction`; no
floating point appears anywhere.  Three value types are provided:

* :class:`LaurentSeries` -- a truncated Laurent series in one formal
  variable.  The truncation order travels with the value, binary
  operations truncate to the weakest participant, and reading a
  coefficient at or above the truncation order raises
  :class:`TruncationError` instead of silently returning zero.
* :class:`QSeries` -- a truncated power series in q starting at exponent
  zero (the expansion target of rational functions regular at q = 0).
* :class:`QRationalFunction` -- an exact rational function in q, stored
  gcd-reduced with a monic denominator so that structural equality is
  mathematical equality.

:func:`polar_split` decomposes a rational function whose poles lie only
at q = 0 and at roots of unity into a Laurent polynomial plus a proper
part (numerator degree < denominator degree) regular at q = 0.  That
decomposition is unique and both pieces are returned exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

__all__ = [
    "LaurentSeries",
    "QSeries",
    "QRationalFunction",
    "PolarSplit",
    "polar_split",
    "laurent_polynomial_to_qrf",
    "q_power",
    "TruncationError",
    "VariableMismatchError",
    "PoleAtZeroError",
    "PoleLocationError",
    "LAMBDA",
    "QVAR",
]

LAMBDA = "lambda"
QVAR = "q"

_SYMBOL = {"lambda": "λ", "q": "q"}


class TruncationError(ValueError):
    """Raised when a coefficient at or beyond the truncation order is read."""


class VariableMismatchError(ValueError):
    """Raised when combining series in different formal variables."""


class PoleAtZeroError(ZeroDivisionError):
    """Raised when expanding a rational function with a pole at q = 0."""


class PoleLocationError(ValueError):
    """Raised when a rational function has a pole away from 0 and roots of unity."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


# ---------------------------------------------------------------------------
# dense polynomial helpers (ascending coefficient tuples, trimmed, () = 0)
# ---------------------------------------------------------------------------


def _ptrim(p: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim(
        (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    )


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    """Exact polynomial division with remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        if r[-1] == 0:
            r.pop()
            continue
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] = c
        for i, cb in enumerate(b):
            r[k + i] -= c * cb
        r.pop()
    return _ptrim(q), _ptrim(r)


def _clear_denominators(p) -> tuple[int, ...]:
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return tuple(int(c * lcm) for c in p)


def _int_primitive(p: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for c in p:
        g = math.gcd(g, abs(c))
    if g <= 1:
        return p
    return tuple(c // g for c in p)


def _int_prem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # pseudo-remainder; result differs from the true remainder by content only
    out = list(a)
    db = len(b) - 1
    lb = b[-1]
    while out and len(out) - 1 >= db:
        la = out[-1]
        if la == 0:
            out.pop()
            continue
        shift = len(out) - 1 - db
        out = [lb * c for c in out]
        for i, cb in enumerate(b):
            out[shift + i] -= la * cb
        out.pop()
        while out and out[-1] == 0:
            out.pop()
    return tuple(out)


def _monic(p):
    if not p:
        return ()
    lead = p[-1]
    if lead == 1:
        return tuple(p)
    return tuple(c / lead for c in p)


def _poly_gcd_monic(a, b):
    """Monic gcd over the rationals via a primitive pseudo-remainder sequence.

    Clearing denominators and dividing out integer content at every step
    keeps coefficient growth under control, which matters once the ring
    solves start producing degree ~50 numerators.
    """
    if not a:
        return _monic(b)
    if not b:
        return _monic(a)
    A = _int_primitive(_clear_denominators(a))
    B = _int_primitive(_clear_denominators(b))
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _int_prem(A, B)
        A, B = B, _int_primitive(R)
    return _monic(tuple(Fraction(c) for c in A))


def _poly_taylor(num, den, order: int) -> list[Fraction]:
    """First `order` Taylor coefficients of num/den at 0 (den[0] != 0)."""
    d0 = den[0]
    out: list[Fraction] = []
    for m in range(order):
        s = num[m] if m < len(num) else Fraction(0)
        for k in range(1, min(m, len(den) - 1) + 1):
            s -= den[k] * out[m - k]
        out.append(s / d0)
    return out


def _poly_str(p, var: str = "q") -> str:
    if not p:
        return "0"
    return _terms_str(((e, c) for e, c in enumerate(p) if c != 0), var)


def _terms_str(terms, var: str) -> str:
    sym = _SYMBOL.get(var, var)
    parts: list[str] = []
    for e, c in terms:
        if e == 0:
            body = str(c if c > 0 else -c)
        else:
            tok = sym if e == 1 else f"{sym}^{e}"
            mag = c if c > 0 else -c
            body = tok if mag == 1 else f"{mag}·{tok}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# truncated Laurent series
# ---------------------------------------------------------------------------


class LaurentSeries:
    """Truncated Laurent series with exact rational coefficients.

    Coefficients are stored densely from ``min_exp`` up to (excluding)
    ``trunc_order``.  Stored zeros are genuine zeros; exponents at or
    above ``trunc_order`` are unknown and reading them is an error.
    Instances are immutable; leading zeros are stripped on construction
    so ``min_exp`` is always the valuation (or equals ``trunc_order``
    for the zero series).
    """

    __slots__ = ("var", "min_exp", "coeffs", "trunc_order")

    def __init__(self, var: str, min_exp: int, coeffs, trunc_order: int):
        vals = [_as_fraction(c) for c in coeffs]
        if min_exp + len(vals) > trunc_order:
            extra = vals[trunc_order - min_exp :]
            if any(extra):
                raise TruncationError(
                    "nonzero coefficients supplied at or beyond the truncation order"
                )
            vals = vals[: trunc_order - min_exp]
        while vals and vals[0] == 0:
            vals.pop(0)
            min_exp += 1
        if not vals:
            min_exp = trunc_order
        vals.extend([Fraction(0)] * (trunc_order - min_exp - len(vals)))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", tuple(vals))
        object.__setattr__(self, "trunc_order", trunc_order)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    @classmethod
    def from_terms(cls, var: str, terms: Mapping[int, object], trunc_order: int) -> "LaurentSeries":
        if not terms:
            return cls(var, trunc_order, (), trunc_order)
        lo = min(terms)
        coeffs = [Fraction(0)] * (max(max(terms) + 1, trunc_order) - lo)
        for e, c in terms.items():
            coeffs[e - lo] = _as_fraction(c)
        return cls(var, lo, coeffs, trunc_order)

    @classmethod
    def one(cls, var: str, trunc_order: int) -> "LaurentSeries":
        return cls.from_terms(var, {0: 1}, trunc_order)

    @classmethod
    def zero(cls, var: str, trunc_order: int) -> "LaurentSeries":
        return cls(var, trunc_order, (), trunc_order)

    def coefficient(self, exponent: int) -> Fraction:
        """Coefficient at `exponent`; a hard error past the truncation order."""
        if exponent >= self.trunc_order:
            raise TruncationError(
                f"coefficient of exponent {exponent} is beyond truncation "
                f"order {self.trunc_order}"
            )
        if exponent < self.min_exp:
            return Fraction(0)
        return self.coeffs[exponent - self.min_exp]

    def terms(self):
        """Yield (exponent, coefficient) pairs for nonzero stored terms."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.min_exp + i, c

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.trunc_order:
            raise TruncationError(
                f"cannot extend truncation from {self.trunc_order} to {order}"
            )
        return LaurentSeries(self.var, self.min_exp, self.coeffs[: max(order - self.min_exp, 0)], order)

    def _check_var(self, other: "LaurentSeries"):
        if self.var != other.var:
            raise VariableMismatchError(
                f"cannot combine series in {self.var!r} and {other.var!r}"
            )

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check_var(other)
        trunc = min(self.trunc_order, other.trunc_order)
        terms: dict[int, Fraction] = {}
        for e, c in self.terms():
            if e < trunc:
                terms[e] = terms.get(e, Fraction(0)) + c
        for e, c in other.terms():
            if e < trunc:
                terms[e] = terms.get(e, Fraction(0)) + c
        return LaurentSeries.from_terms(self.var, terms, trunc)

    def __neg__(self):
        return LaurentSeries(self.var, self.min_exp, [-c for c in self.coeffs], self.trunc_order)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return LaurentSeries(
                self.var, self.min_exp, [c * v for v in self.coeffs], self.trunc_order
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check_var(other)
        trunc = min(
            self.trunc_order + other.min_exp, other.trunc_order + self.min_exp
        )
        lo = self.min_exp + other.min_exp
        out = [Fraction(0)] * max(trunc - lo, 0)
        for i, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            ea = self.min_exp + i
            for j, cb in enumerate(other.coeffs):
                e = ea + other.min_exp + j
                if e >= trunc:
                    break
                if cb != 0:
                    out[e - lo] += ca * cb
        return LaurentSeries(self.var, lo, out, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers must use nonnegative integer exponents")
        if n == 0:
            return LaurentSeries.one(self.var, self.trunc_order)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def inverse(self, order: int) -> "LaurentSeries":
        """Multiplicative inverse, truncated at (excluding) `order`.

        Requires a nonzero leading coefficient.  The known coefficients
        of ``self`` only determine the inverse up to exponent
        ``trunc_order - 2*min_exp``; asking for more raises
        :class:`TruncationError` rather than inventing terms.
        """
        if self.is_zero:
            raise ZeroDivisionError("cannot invert the zero series")
        v = self.min_exp
        lead = self.coeffs[0]
        max_order = self.trunc_order - 2 * v
        if order > max_order:
            raise TruncationError(
                f"inverse is only determined to order {max_order}, requested {order}"
            )
        n = order + v  # number of output coefficients, starting at exponent -v
        if n <= 0:
            return LaurentSeries.zero(self.var, order)
        out = [Fraction(0)] * n
        out[0] = 1 / lead
        for m in range(1, n):
            s = Fraction(0)
            for k in range(1, m + 1):
                a_k = self.coeffs[k] if k < len(self.coeffs) else Fraction(0)
                if a_k != 0:
                    s += a_k * out[m - k]
            out[m] = -s / lead
        return LaurentSeries(self.var, -v, out, order)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.var == other.var
            and self.min_exp == other.min_exp
            and self.trunc_order == other.trunc_order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.min_exp, self.coeffs, self.trunc_order))

    def __str__(self):
        if self.is_zero:
            return "0"
        return _terms_str(self.terms(), self.var)

    def __repr__(self):
        return (
            f"LaurentSeries({self.var!r}, {self!s}, "
            f"trunc_order={self.trunc_order})"
        )


# ---------------------------------------------------------------------------
# truncated power series in q
# ---------------------------------------------------------------------------


class QSeries:
    """Power series in q from exponent 0 with an explicit truncation order."""

    __slots__ = ("coeffs", "trunc_order")

    def __init__(self, coeffs, trunc_order: int):
        if trunc_order < 0:
            raise ValueError("truncation order must be nonnegative")
        vals = [_as_fraction(c) for c in coeffs]
        if len(vals) > trunc_order:
            if any(vals[trunc_order:]):
                raise TruncationError(
                    "nonzero coefficients supplied at or beyond the truncation order"
                )
            vals = vals[:trunc_order]
        vals.extend([Fraction(0)] * (trunc_order - len(vals)))
        object.__setattr__(self, "coeffs", tuple(vals))
        object.__setattr__(self, "trunc_order", trunc_order)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    def coefficient(self, exponent: int) -> Fraction:
        if exponent >= self.trunc_order:
            raise TruncationError(
                f"coefficient of exponent {exponent} is beyond truncation "
                f"order {self.trunc_order}"
            )
        if exponent < 0:
            return Fraction(0)
        return self.coeffs[exponent]

    __getitem__ = coefficient

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc_order, other.trunc_order)
        return QSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(trunc)], trunc
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return QSeries([c * v for v in self.coeffs], self.trunc_order)
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc_order, other.trunc_order)
        out = [Fraction(0)] * trunc
        for i, ca in enumerate(self.coeffs[:trunc]):
            if ca == 0:
                continue
            for j in range(min(trunc - i, other.trunc_order)):
                cb = other.coeffs[j]
                if cb != 0:
                    out[i + j] += ca * cb
        return QSeries(out, trunc)

    __rmul__ = __mul__

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (other * -1)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.trunc_order == other.trunc_order

    def __hash__(self):
        return hash((self.coeffs, self.trunc_order))

    def __str__(self):
        if not any(self.coeffs):
            return "0"
        return _terms_str(((e, c) for e, c in enumerate(self.coeffs) if c != 0), QVAR)

    def __repr__(self):
        return f"QSeries({self!s}, trunc_order={self.trunc_order})"


# ---------------------------------------------------------------------------
# exact rational functions in q
# ---------------------------------------------------------------------------


class QRationalFunction:
    """Rational function in q over the rationals, in canonical form.

    Stored with gcd(numerator, denominator) = 1 and a monic denominator,
    so two instances are equal iff they are mathematically equal.  The
    zero function has an empty numerator tuple.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        n = _ptrim(_as_fraction(c) for c in num)
        d = _ptrim(_as_fraction(c) for c in den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not n:
            d = (Fraction(1),)
        else:
            g = _poly_gcd_monic(n, d)
            if len(g) > 1:
                n, _ = _pdivmod(n, g)
                d, _ = _pdivmod(d, g)
            lead = d[-1]
            if lead != 1:
                n = tuple(c / lead for c in n)
                d = tuple(c / lead for c in d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("QRationalFunction is immutable")

    @classmethod
    def constant(cls, c) -> "QRationalFunction":
        c = _as_fraction(c)
        return cls((c,) if c else ())

    @staticmethod
    def _coerce(x):
        if isinstance(x, QRationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return QRationalFunction.constant(x)
        return None

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_polynomial(self) -> bool:
        return self.den == (Fraction(1),)

    @property
    def is_proper(self) -> bool:
        """True iff the function vanishes as q goes to infinity."""
        return self.num_degree < self.den_degree

    @property
    def regular_at_zero(self) -> bool:
        return self.den[0] != 0

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRationalFunction(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return QRationalFunction(_pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRationalFunction(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return QRationalFunction(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (QRationalFunction.constant(1) / self) ** (-n)
        result = QRationalFunction.constant(1)
        base = self
        e = n
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, x) -> Fraction:
        x = _as_fraction(x)
        n = Fraction(0)
        for c in reversed(self.num):
            n = n * x + c
        d = Fraction(0)
        for c in reversed(self.den):
            d = d * x + c
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {x}")
        return n / d

    def expand(self, order: int) -> QSeries:
        """Taylor expansion at q = 0, exact, up to (excluding) `order`."""
        if order < 0:
            raise ValueError("expansion order must be nonnegative")
        if not self.regular_at_zero:
            raise PoleAtZeroError("cannot expand: pole at q = 0")
        return QSeries(_poly_taylor(self.num, self.den, order), order)

    def __str__(self):
        if self.is_zero:
            return "0"
        num, den = self.num, self.den
        first = next(c for c in den if c != 0)
        if first < 0:
            # display with a positive lowest denominator coefficient; the
            # stored form stays monic
            num = _pneg(num)
            den = _pneg(den)
        ns = _poly_str(num)
        if self.is_polynomial:
            return ns
        return f"({ns}) / ({_poly_str(den)})"

    def __repr__(self):
        return f"QRationalFunction({self!s})"


def q_power(n: int) -> QRationalFunction:
    """The monomial q**n as a rational function; n may be negative."""
    if n >= 0:
        return QRationalFunction((Fraction(0),) * n + (Fraction(1),))
    return QRationalFunction((Fraction(1),), (Fraction(0),) * (-n) + (Fraction(1),))


# ---------------------------------------------------------------------------
# split into Laurent polynomial + proper part regular at 0
# ---------------------------------------------------------------------------


class PolarSplit(NamedTuple):
    """Result of :func:`polar_split`: f = laurent + proper, exactly.

    ``laurent`` maps exponents to coefficients (a Laurent polynomial in
    q); ``proper`` has numerator degree < denominator degree and no pole
    at q = 0.
    """

    laurent: dict[int, Fraction]
    proper: QRationalFunction


_CYCLOTOMIC_CACHE: dict[int, tuple[Fraction, ...]] = {}


def _cyclotomic(d: int) -> tuple[Fraction, ...]:
    if d in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[d]
    # q^d - 1 divided by the cyclotomic polynomials of proper divisors
    p: tuple[Fraction, ...] = (Fraction(-1),) + (Fraction(0),) * (d - 1) + (Fraction(1),)
    for e in range(1, d):
        if d % e == 0:
            p, r = _pdivmod(p, _cyclotomic(e))
            assert not r
    _CYCLOTOMIC_CACHE[d] = p
    return p


def _euler_phi(d: int) -> int:
    out = d
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


def _check_roots_of_unity(poly) -> None:
    """Raise PoleLocationError unless every root of `poly` is a root of unity."""
    w = _monic(poly)
    deg0 = len(w) - 1
    if deg0 <= 0:
        return
    d = 1
    # phi(d) >= sqrt(d/2), so no cyclotomic factor can hide past 2*deg^2
    while len(w) > 1 and d <= 2 * deg0 * deg0 + 1:
        if _euler_phi(d) <= len(w) - 1:
            cyc = _cyclotomic(d)
            while len(w) > 1:
                quo, rem = _pdivmod(w, cyc)
                if rem:
                    break
                w = quo
        d += 1
    if len(w) > 1:
        raise PoleLocationError(
            "denominator has a pole away from q = 0 and roots of unity"
        )


def polar_split(f: QRationalFunction) -> PolarSplit:
    """Split f into a Laurent polynomial plus a proper part regular at 0.

    The poles of f must lie at q = 0 or at roots of unity.  The two
    constraints (Laurent polynomial; proper and regular at 0) pin the
    decomposition uniquely: the difference of two candidates would be a
    Laurent polynomial vanishing at infinity and regular at 0, hence 0.
    """
    # strip the q-power from the denominator
    k = 0
    den = f.den
    while den and den[0] == 0:
        den = den[1:]
        k += 1
    _check_roots_of_unity(den)

    laurent: dict[int, Fraction] = {}
    rest = f
    if k > 0:
        principal = _poly_taylor(f.num, den, k)
        for i, c in enumerate(principal):
            if c != 0:
                laurent[i - k] = c
        rest = f - QRationalFunction(principal, (Fraction(0),) * k + (Fraction(1),))
    if rest.is_zero:
        return PolarSplit(laurent, rest)
    quo, rem = _pdivmod(rest.num, rest.den)
    for e, c in enumerate(quo):
        if c != 0:
            laurent[e] = laurent.get(e, Fraction(0)) + c
    proper = QRationalFunction(rem, rest.den)
    return PolarSplit({e: c for e, c in laurent.items() if c != 0}, proper)


def laurent_polynomial_to_qrf(terms: Mapping[int, object]) -> QRationalFunction:
    """Rebuild a rational function from Laurent-polynomial coefficients."""
    out = QRationalFunction.constant(0)
    for e, c in terms.items():
        out = out + q_power(e) * _as_fraction(c)
    return out
