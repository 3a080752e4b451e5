"""
Exact big-integer combinatorics and dyadic-rational arithmetic.

Every expansion coefficient of a complete k-uniform hypergraph stabilizer is an
integer divided by a power of two, so DyadicRational is the only number type
the toolkit needs. Python ints are unbounded, which covers C(N-1, s) far past
the 64-bit range.
"""

import logging
import math
import numbers
import operator
import re

from .exceptions import IdentityViolation

logger = logging.getLogger(__name__)

_DYADIC_RE = re.compile(r'^\s*(?P<num>[-+]?\d+)\s*(?:/\s*2\^(?P<exp>\d+))?\s*$')


def _trailing_zeros(value):
    return (value & -value).bit_length() - 1


def _operator_fallbacks(monomorphic_operator, fallback_operator):
    """Build forward and reverse dunder methods accepting DyadicRational or int."""

    def forward(a, b):
        if isinstance(b, DyadicRational):
            return monomorphic_operator(a, b)
        if isinstance(b, int):
            return monomorphic_operator(a, DyadicRational(b))
        if isinstance(b, numbers.Number):
            return fallback_operator(a.to_fraction(), b)
        return NotImplemented
    forward.__name__ = '__' + fallback_operator.__name__ + '__'

    def reverse(b, a):
        if isinstance(a, int):
            return monomorphic_operator(DyadicRational(a), b)
        if isinstance(a, numbers.Number):
            return fallback_operator(a, b.to_fraction())
        return NotImplemented
    reverse.__name__ = '__r' + fallback_operator.__name__ + '__'

    return forward, reverse


class DyadicRational:
    """
    Exact value numerator / 2**exponent.

    Always normalized: the numerator is odd, or zero with exponent 0.
    Instances are immutable and hashable; values equal to an int hash like it.
    """

    __slots__ = ('_numerator', '_exponent')

    def __new__(cls, numerator=0, exponent=0):
        if not isinstance(numerator, int) or not isinstance(exponent, int):
            raise TypeError('numerator and exponent must be integers')
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        elif exponent:
            shift = min(_trailing_zeros(numerator), exponent)
            numerator >>= shift
            exponent -= shift
        self = super().__new__(cls)
        self._numerator = numerator
        self._exponent = exponent
        return self

    @classmethod
    def from_string(cls, text):
        """Parse the "p/2^q" rendering (or a bare integer)."""
        match = _DYADIC_RE.match(text)
        if match is None:
            raise ValueError(f'Invalid dyadic rational literal: {text!r}')
        return cls(int(match.group('num')), int(match.group('exp') or 0))

    @property
    def numerator(self):
        return self._numerator

    @property
    def exponent(self):
        return self._exponent

    def to_fraction(self):
        from fractions import Fraction
        return Fraction(self._numerator, 1 << self._exponent)

    def scaled(self, power):
        """Return self * 2**power (power may be negative)."""
        return DyadicRational(self._numerator, self._exponent - power)

    def numerator_at(self, exponent):
        """Numerator of self over the common denominator 2**exponent."""
        if exponent < self._exponent:
            raise ValueError(f'{self} is not representable over 2^{exponent}')
        return self._numerator << (exponent - self._exponent)

    def sign(self):
        return (self._numerator > 0) - (self._numerator < 0)

    def is_integer(self):
        return self._exponent == 0

    def __repr__(self):
        return f'{self.__class__.__name__}({self._numerator}, {self._exponent})'

    def __str__(self):
        if self._exponent == 0:
            return str(self._numerator)
        return f'{self._numerator}/2^{self._exponent}'

    # Arithmetic

    def _add(a, b):
        e = max(a._exponent, b._exponent)
        return DyadicRational(a.numerator_at(e) + b.numerator_at(e), e)

    def _sub(a, b):
        e = max(a._exponent, b._exponent)
        return DyadicRational(a.numerator_at(e) - b.numerator_at(e), e)

    def _mul(a, b):
        return DyadicRational(a._numerator * b._numerator, a._exponent + b._exponent)

    __add__, __radd__ = _operator_fallbacks(_add, operator.add)
    __sub__, __rsub__ = _operator_fallbacks(_sub, operator.sub)
    __mul__, __rmul__ = _operator_fallbacks(_mul, operator.mul)

    def __neg__(self):
        return DyadicRational(-self._numerator, self._exponent)

    def __pos__(self):
        return self

    def __abs__(self):
        return DyadicRational(abs(self._numerator), self._exponent)

    def __bool__(self):
        return self._numerator != 0

    # Comparison

    def _cmp_key(self, other):
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return None
        e = max(self._exponent, other._exponent)
        return self.numerator_at(e), other.numerator_at(e)

    def __eq__(self, other):
        if isinstance(other, (DyadicRational, int)):
            pair = self._cmp_key(other)
            return pair[0] == pair[1]
        if isinstance(other, numbers.Number):
            return self.to_fraction() == other
        return NotImplemented

    def _richcmp(self, other, op):
        pair = self._cmp_key(other)
        if pair is None:
            if isinstance(other, numbers.Number):
                return op(self.to_fraction(), other)
            return NotImplemented
        return op(*pair)

    def __lt__(self, other):
        return self._richcmp(other, operator.lt)

    def __le__(self, other):
        return self._richcmp(other, operator.le)

    def __gt__(self, other):
        return self._richcmp(other, operator.gt)

    def __ge__(self, other):
        return self._richcmp(other, operator.ge)

    def __hash__(self):
        if self._exponent == 0:
            return hash(self._numerator)
        return hash(self.to_fraction())

    def __reduce__(self):
        return (self.__class__, (self._numerator, self._exponent))


ZERO = DyadicRational(0)
ONE = DyadicRational(1)


def dyadic_sum(values):
    """Exact sum over one common denominator."""
    values = list(values)
    if not values:
        return ZERO
    e = max(v.exponent for v in values)
    return DyadicRational(sum(v.numerator_at(e) for v in values), e)


def binom(n, k):
    """C(n, k) as an exact integer, 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f'binom requires n >= 0, got {n}')
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_parity(s, k):
    """C(s, k) mod 2, read off the bits of s and k."""
    if k < 0 or k > s:
        return 0
    return int((k & s) == k)


def sign_power(exponent):
    """(-1)**exponent for any integer exponent."""
    return -1 if exponent & 1 else 1


def alt_binom_identity(m, r):
    """
    Check sum_{j=r}^{m} (-1)^j C(m+1, j) C(j, r) == (-1)^m C(m+1, r).

    The left side is a direct sum. Returns (lhs, rhs) and raises
    IdentityViolation if they differ.
    """
    if not 0 <= r <= m:
        raise ValueError(f'alt_binom_identity requires 0 <= r <= m, got m={m}, r={r}')
    lhs = sum(sign_power(j) * binom(m + 1, j) * binom(j, r) for j in range(r, m + 1))
    rhs = sign_power(m) * binom(m + 1, r)
    if lhs != rhs:
        logger.error(f"Alternating binomial identity failed at m={m}, r={r}: {lhs} != {rhs}")
        raise IdentityViolation(f'alternating binomial identity fails at m={m}, r={r}: {lhs} != {rhs}')
    return lhs, rhs
