"""Exact truncated power series and factored rational functions.

Every coefficient in this module is a plain Python integer (or an exact
:class:`fractions.Fraction` where a ratio is genuinely called for), so no
computation here rounds or overflows.  Two layers live side by side:

* :class:`TruncatedSeries` holds the first ``order + 1`` coefficients of a
  formal power series.  Binary operations insist that both operands share
  the same order rather than silently truncating to the shorter one.

* :class:`RationalFunction` is an integer :class:`Polynomial` divided by a
  product of factors ``(1 - t^m)`` kept as a multiset of exponents in a
  :class:`FactoredDenominator`.  Keeping the denominator factored makes
  sums cheap (pad with the missing factors), products trivial (merge the
  multisets) and expansion a sequence of prefix recurrences; the factors
  are only ever multiplied out to decide semantic equality.

The partition generating function ``1/prod(1 - t^m)`` over all ``m >= 1``
is an infinite product, so it is deliberately *not* a
:class:`RationalFunction`; :func:`euler_partition_series` expands it
truncated, and products like ``Q(t) * P(t)`` are formed at the series
level (see :func:`expand_with_partition_series`).
"""

from fractions import Fraction
from functools import lru_cache

from .errors import OrderMismatchError, SelfCheckError


class TruncatedSeries:
    """A power series known exactly up to and including degree ``order``.

    The coefficient tuple always has length ``order + 1``; shorter input
    is padded with zeros.  Instances are immutable.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients, order=None):
        coefficients = tuple(int(c) for c in coefficients)
        if order is None:
            if not coefficients:
                raise ValueError("an empty coefficient sequence needs an explicit order")
            order = len(coefficients) - 1
        order = int(order)
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coefficients) > order + 1:
            raise ValueError(
                "got %d coefficients for order %d" % (len(coefficients), order)
            )
        if len(coefficients) < order + 1:
            coefficients = coefficients + (0,) * (order + 1 - len(coefficients))
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order):
        return cls((), order)

    @classmethod
    def one(cls, order):
        return cls((1,), order)

    def coefficient(self, n):
        """The coefficient of ``t^n``; ``n`` must not exceed the order."""
        if not 0 <= n <= self.order:
            raise IndexError("coefficient %d of a series of order %d" % (n, self.order))
        return self.coefficients[n]

    def _require_same_order(self, other):
        if self.order != other.order:
            raise OrderMismatchError(
                "series orders differ: %d vs %d" % (self.order, other.order)
            )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(a * other for a in self.coefficients))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        a, b = self.coefficients, other.coefficients
        out = [0] * (self.order + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(self.order + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        """Long division; the divisor's constant term must be 1 or -1."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        unit = other.coefficients[0]
        if unit not in (1, -1):
            raise ValueError(
                "series division needs a divisor with constant term 1 or -1, got %r"
                % (unit,)
            )
        tail = [(i, c) for i, c in enumerate(other.coefficients) if i and c]
        out = []
        for n in range(self.order + 1):
            acc = self.coefficients[n]
            for i, c in tail:
                if i > n:
                    break
                acc -= c * out[n - i]
            out.append(acc * unit)
        return TruncatedSeries(out)

    def __repr__(self):
        coeffs = list(self.coefficients)
        if len(coeffs) > 10:
            head = ", ".join(str(c) for c in coeffs[:10])
            return "TruncatedSeries([%s, ...], order=%d)" % (head, self.order)
        return "TruncatedSeries(%r)" % (coeffs,)


class Polynomial:
    """A dense integer polynomial with no trailing zero coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        if isinstance(coefficients, int):
            coefficients = (coefficients,)
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, coefficient, exponent):
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        if coefficient == 0:
            return cls()
        return cls((0,) * exponent + (int(coefficient),))

    @property
    def degree(self):
        """Degree of the polynomial; the zero polynomial reports -1."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def is_zero(self):
        return not self.coefficients

    def coefficient(self, n):
        if n < 0:
            raise IndexError("negative exponent %d" % (n,))
        if n >= len(self.coefficients):
            return 0
        return self.coefficients[n]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coefficients))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    if b:
                        out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def substitute_power(self, s):
        """The polynomial in ``t^s``, i.e. the substitution ``t -> t^s``."""
        s = int(s)
        if s < 1:
            raise ValueError("substitution power must be >= 1")
        if self.is_zero:
            return Polynomial()
        out = [0] * (self.degree * s + 1)
        for i, c in enumerate(self.coefficients):
            out[i * s] = c
        return Polynomial(out)

    def truncated(self, order):
        """The polynomial read as a series of the given order."""
        return TruncatedSeries(self.coefficients[: order + 1], order)

    def __repr__(self):
        return "Polynomial(%r)" % (list(self.coefficients),)


class FactoredDenominator:
    """A finite multiset of factors ``(1 - t^m)`` with all ``m >= 1``.

    The empty multiset stands for the constant 1.  The expansion of the
    product always has constant coefficient 1, so these are exactly the
    denominators that admit integer long division.
    """

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        factors = tuple(sorted(int(m) for m in factors))
        if factors and factors[0] < 1:
            raise ValueError("every factor exponent must be >= 1")
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("FactoredDenominator is immutable")

    @property
    def degree(self):
        return sum(self.factors)

    @property
    def leading_coefficient(self):
        return -1 if len(self.factors) % 2 else 1

    def multiplicity(self, m):
        return self.factors.count(m)

    def as_polynomial(self):
        poly = Polynomial((1,))
        for m in self.factors:
            poly = poly * Polynomial((1,) + (0,) * (m - 1) + (-1,))
        assert poly.coefficient(0) == 1
        return poly

    def union_max(self, other):
        """Smallest multiset containing both, by per-exponent maximum."""
        merged = []
        for m in sorted(set(self.factors) | set(other.factors)):
            merged.extend([m] * max(self.multiplicity(m), other.multiplicity(m)))
        return FactoredDenominator(merged)

    def remove(self, other):
        """Multiset difference; ``other`` must be contained in ``self``."""
        remaining = list(self.factors)
        for m in other.factors:
            try:
                remaining.remove(m)
            except ValueError:
                raise ValueError(
                    "factor (1 - t^%d) is not present to remove" % (m,)
                ) from None
        return FactoredDenominator(remaining)

    def substitute_power(self, s):
        s = int(s)
        if s < 1:
            raise ValueError("substitution power must be >= 1")
        return FactoredDenominator(tuple(m * s for m in self.factors))

    def __mul__(self, other):
        if not isinstance(other, FactoredDenominator):
            return NotImplemented
        return FactoredDenominator(self.factors + other.factors)

    def __eq__(self, other):
        if not isinstance(other, FactoredDenominator):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "FactoredDenominator(%r)" % (list(self.factors),)


class RationalFunction:
    """An integer polynomial over a product of factors ``(1 - t^m)``.

    Equality is semantic: two instances compare equal when they agree as
    rational functions, decided by cross-multiplying the factored
    denominators.  Because of that the class is unhashable.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=()):
        if not isinstance(numerator, Polynomial):
            numerator = Polynomial(numerator)
        if not isinstance(denominator, FactoredDenominator):
            denominator = FactoredDenominator(denominator)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def geometric(cls, m):
        """The function ``t^m / (1 - t^m)``, the sum over positive multiples of m."""
        m = int(m)
        if m < 1:
            raise ValueError("geometric exponent must be >= 1")
        return cls(Polynomial.monomial(1, m), FactoredDenominator((m,)))

    @property
    def is_zero(self):
        return self.numerator.is_zero

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        den = self.denominator.union_max(other.denominator)
        a = self.numerator * den.remove(self.denominator).as_polynomial()
        b = other.numerator * den.remove(other.denominator).as_polynomial()
        return RationalFunction(a + b, den)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Polynomial)):
            return RationalFunction(self.numerator * other, self.denominator)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Polynomial)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.numerator * other.denominator.as_polynomial()
            == other.numerator * self.denominator.as_polynomial()
        )

    __hash__ = None

    def expand(self, order):
        """The series expansion truncated at the given order.

        Each factor ``1/(1 - t^m)`` is applied as the prefix recurrence
        ``c[i] += c[i - m]``, so expansion never forms the expanded
        denominator polynomial.
        """
        coeffs = list(self.numerator.coefficients[: order + 1])
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        for m in self.denominator.factors:
            for i in range(m, order + 1):
                coeffs[i] += coeffs[i - m]
        return TruncatedSeries(coeffs)

    def asymptotics(self):
        """The pair (total degree, leading coefficient ratio).

        The total degree is ``deg(numerator) - deg(denominator)`` and the
        leading coefficient is the exact ratio of leading coefficients,
        which describes the dominant scale as ``t`` grows formally.  The
        zero function has no such scale and raises ``ValueError``.
        """
        if self.is_zero:
            raise ValueError("the zero function has no asymptotic scale")
        degree = self.numerator.degree - self.denominator.degree
        lead = Fraction(
            self.numerator.leading_coefficient, self.denominator.leading_coefficient
        )
        return degree, lead

    def substitute_power(self, s):
        """The rational function in ``t^s``."""
        return RationalFunction(
            self.numerator.substitute_power(s), self.denominator.substitute_power(s)
        )

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.numerator, self.denominator)


def geometric_series(m, order):
    """Expansion of ``t^m / (1 - t^m)``: 1 at positive multiples of m."""
    m = int(m)
    if m < 1:
        raise ValueError("geometric exponent must be >= 1")
    return TruncatedSeries(
        tuple(1 if n and n % m == 0 else 0 for n in range(order + 1))
    )


def pentagonal_series(order):
    """The series ``sum_j (-1)^j t^(j(3j +- 1)/2)`` over all ``j >= 0``.

    By Euler's pentagonal number theorem this is the product
    ``prod_m (1 - t^m)``, i.e. the reciprocal of the partition series.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    j = 1
    while j * (3 * j - 1) // 2 <= order:
        sign = -1 if j % 2 else 1
        for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if g <= order:
                coeffs[g] = sign
        j += 1
    return TruncatedSeries(coeffs)


@lru_cache(maxsize=64)
def euler_partition_series(order):
    """The partition generating function ``prod_m 1/(1 - t^m)`` truncated.

    The primary route inverts the pentagonal series by long division; an
    independent cross-check expands the product directly, one factor
    ``1/(1 - t^m)`` at a time.  The two must agree coefficient by
    coefficient or a :class:`SelfCheckError` is raised.
    """
    order = int(order)
    if order < 0:
        raise ValueError("order must be >= 0")
    primary = TruncatedSeries.one(order) / pentagonal_series(order)

    check = [0] * (order + 1)
    check[0] = 1
    for m in range(1, order + 1):
        for i in range(m, order + 1):
            check[i] += check[i - m]
    if primary != TruncatedSeries(check):
        raise SelfCheckError(
            "pentagonal reciprocal and product expansion disagree at order %d" % order
        )
    return primary


def expand_with_partition_series(rational, order):
    """Expand ``rational * P(t)`` where P is the partition series.

    Identities in this package usually state a generating function as a
    rational multiplier times the infinite product P(t); this composes
    the two explicitly at the series level.
    """
    return rational.expand(order) * euler_partition_series(order)
