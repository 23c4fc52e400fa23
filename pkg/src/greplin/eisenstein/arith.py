# Copyright 2026 The eisenstein Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact arithmetic: the field Q(sqrt 3), its quadratic extensions, and the integral quadratic space.

Rationals are plain fractions.Fraction values. SqrtThree holds r + s*sqrt(3) and Surd holds
x + y*sqrt(delta) with x, y in Q(sqrt 3); both compare exactly. Values from different
quadratic extensions are compared with mpmath interval arithmetic instead.
"""

from fractions import Fraction
from greplin.eisenstein import util

import collections
import functools
import logging
import math
import threading

import mpmath
import six

log = logging.getLogger(__name__)

DIGITS = (1, 2, 3, 4, 5)

DEFAULT_PRECISION_BITS = 128

# Interval refinement gives up once the enclosure of a difference is this narrow.
INTERVAL_CUTOFF_BITS = 1024

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                 83, 89, 97)

# mpmath keeps its working precision on the shared context objects.
_PRECISION_LOCK = threading.RLock()

INTERVAL_FALLBACKS = util.Counter()



class EisensteinError(ValueError):
  """Base class for the errors raised by this package."""



class MixedFieldError(EisensteinError):
  """Two surds live in different quadratic extensions of Q(sqrt 3)."""



class IndistinguishableError(EisensteinError):
  """Interval refinement could not separate two values."""



class SelfCheckError(EisensteinError):
  """The constant matrices are inconsistent."""



def _sign(value):
  """Sign of a rational as -1, 0 or 1."""
  return (value > 0) - (value < 0)


def _asFraction(value):
  """Returns value as a Fraction for ints and Fractions, None for anything else."""
  if isinstance(value, Fraction):
    return value
  if isinstance(value, six.integer_types) and not isinstance(value, bool):
    return Fraction(value)
  return None


def _exactIntSqrt(n):
  """Returns m with m*m == n, or None."""
  if n < 0:
    return None
  m = math.isqrt(n)
  return m if m * m == n else None


def rationalSqrt(q):
  """Returns the rational square root of q, or None if q is not a rational square."""
  q = Fraction(q)
  numerator = _exactIntSqrt(q.numerator)
  denominator = _exactIntSqrt(q.denominator)
  if numerator is None or denominator is None:
    return None
  return Fraction(numerator, denominator)



@functools.total_ordering
class SqrtThree(object):
  """An element r + s*sqrt(3) of the real field Q(sqrt 3)."""

  __slots__ = ('r', 's')

  def __init__(self, r=0, s=0):
    self.r = Fraction(r)
    self.s = Fraction(s)


  @classmethod
  def coerce(cls, value):
    """Converts ints and Fractions, returning None for unsupported types."""
    if isinstance(value, SqrtThree):
      return value
    q = _asFraction(value)
    if q is None:
      return None
    return cls(q, 0)


  def isRational(self):
    """True if the sqrt(3) coefficient vanishes."""
    return self.s == 0


  def isInteger(self):
    """True for rational integers."""
    return self.s == 0 and self.r.denominator == 1


  def isSqrtThreeMultiple(self):
    """True for integer multiples of sqrt(3)."""
    return self.r == 0 and self.s.denominator == 1


  def norm(self):
    """The field norm r^2 - 3s^2."""
    return self.r * self.r - 3 * self.s * self.s


  def conjugate(self):
    """The Galois conjugate r - s*sqrt(3)."""
    return SqrtThree(self.r, -self.s)


  def inverse(self):
    """Multiplicative inverse through the conjugate."""
    norm = self.norm()
    if norm == 0:
      raise ZeroDivisionError('division by zero in Q(sqrt 3)')
    return SqrtThree(self.r / norm, -self.s / norm)


  def sign(self):
    """Exact sign as -1, 0 or 1."""
    signR = _sign(self.r)
    signS = _sign(self.s)
    if signS == 0:
      return signR
    if signR == 0 or signR == signS:
      return signS
    return signR * _sign(self.norm())


  def __add__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return SqrtThree(self.r + other.r, self.s + other.s)

  __radd__ = __add__


  def __neg__(self):
    return SqrtThree(-self.r, -self.s)


  def __pos__(self):
    return self


  def __abs__(self):
    return -self if self.sign() < 0 else self


  def __sub__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return SqrtThree(self.r - other.r, self.s - other.s)


  def __rsub__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return other - self


  def __mul__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return SqrtThree(self.r * other.r + 3 * self.s * other.s, self.r * other.s + self.s * other.r)

  __rmul__ = __mul__


  def __truediv__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return self * other.inverse()


  def __rtruediv__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return other * self.inverse()

  __div__ = __truediv__
  __rdiv__ = __rtruediv__


  def __eq__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return self.r == other.r and self.s == other.s


  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result


  def __lt__(self, other):
    other = SqrtThree.coerce(other)
    if other is None:
      return NotImplemented
    return (self - other).sign() < 0


  def __hash__(self):
    if self.s == 0:
      return hash(self.r)
    return hash((self.r, self.s))


  def __float__(self):
    return float(self.r) + float(self.s) * math.sqrt(3)


  def __repr__(self):
    return 'SqrtThree(%r, %r)' % (self.r, self.s)


  def __str__(self):
    return _formatSqrtThree(self)



def _formatCoefficient(q):
  """Formats a rational coefficient, bracketing proper fractions."""
  if q.denominator == 1:
    return str(q)
  return '(%s)' % q


def _formatSqrtThree(value):
  """Formats r + s*sqrt(3) in the usual written form."""
  parts = []
  if value.r != 0:
    parts.append(str(value.r))
  if value.s != 0:
    magnitude = abs(value.s)
    term = u'√3' if magnitude == 1 else _formatCoefficient(magnitude) + u'√3'
    if parts:
      parts.append(('- ' if value.s < 0 else '+ ') + term)
    else:
      parts.append(('-' if value.s < 0 else '') + term)
  return ' '.join(parts) or '0'


SQRT3 = SqrtThree(0, 1)



def _canonicalRadicand(y, delta):
  """Rescales y*sqrt(delta) so that delta is an integer free of small squares and of the factor 3."""
  if delta.denominator != 1:
    y = y / delta.denominator
    delta = Fraction(delta.numerator * delta.denominator)
  n = delta.numerator
  for prime in _SMALL_PRIMES:
    square = prime * prime
    while n % square == 0:
      n //= square
      y = y * prime
  if n % 3 == 0:
    n //= 3
    y = y * SQRT3
  return y, n



@functools.total_ordering
class Surd(object):
  """A real number x + y*sqrt(delta) with x, y in Q(sqrt 3) and sqrt(delta) >= 0.

  On construction the radical collapses into x whenever delta is a rational square or three
  times one, so a surd with y != 0 is irrational over Q(sqrt 3).
  """

  __slots__ = ('x', 'y', 'delta')

  def __init__(self, x=0, y=0, delta=0):
    x = SqrtThree.coerce(x)
    y = SqrtThree.coerce(y)
    if x is None or y is None:
      raise TypeError('Surd coefficients must be rational or SqrtThree values')
    delta = Fraction(delta)
    if delta < 0:
      raise ValueError('Surd radicand must be nonnegative, got %s' % delta)

    if y == 0 or delta == 0:
      self.x, self.y, self.delta = x, SqrtThree(), Fraction(0)
      return
    y, n = _canonicalRadicand(y, delta)
    root = _exactIntSqrt(n)
    if root is not None:
      self.x, self.y, self.delta = x + y * root, SqrtThree(), Fraction(0)
    else:
      self.x, self.y, self.delta = x, y, Fraction(n)


  @classmethod
  def _raw(cls, x, y, delta):
    """Builds a surd whose radicand is already canonical."""
    result = cls.__new__(cls)
    if y == 0:
      result.x, result.y, result.delta = x, SqrtThree(), Fraction(0)
    else:
      result.x, result.y, result.delta = x, y, delta
    return result


  @classmethod
  def coerce(cls, value):
    """Converts ints, Fractions and SqrtThree values, returning None for anything else."""
    if isinstance(value, Surd):
      return value
    value = SqrtThree.coerce(value)
    if value is None:
      return None
    return cls._raw(value, SqrtThree(), Fraction(0))


  def isSqrtThree(self):
    """True if the value lies in Q(sqrt 3)."""
    return self.y == 0


  def isRational(self):
    """True if the value is rational."""
    return self.y == 0 and self.x.isRational()


  def conjugate(self):
    """The conjugate x - y*sqrt(delta)."""
    return Surd._raw(self.x, -self.y, self.delta)


  def sign(self):
    """Exact sign as -1, 0 or 1, from nested sign tests over Q(sqrt 3)."""
    signX = self.x.sign()
    signY = self.y.sign()
    if signY == 0:
      return signX
    if signX == 0 or signX == signY:
      return signY
    return signX * (self.x * self.x - self.y * self.y * self.delta).sign()


  def __add__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    delta, x1, y1, x2, y2 = _align(self, other)
    return Surd._raw(x1 + x2, y1 + y2, delta)

  __radd__ = __add__


  def __neg__(self):
    return Surd._raw(-self.x, -self.y, self.delta)


  def __pos__(self):
    return self


  def __abs__(self):
    return -self if self.sign() < 0 else self


  def __sub__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    delta, x1, y1, x2, y2 = _align(self, other)
    return Surd._raw(x1 - x2, y1 - y2, delta)


  def __rsub__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    return other - self


  def __mul__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    delta, x1, y1, x2, y2 = _align(self, other)
    return Surd._raw(x1 * x2 + y1 * y2 * delta, x1 * y2 + x2 * y1, delta)

  __rmul__ = __mul__


  def inverse(self):
    """Multiplicative inverse through the conjugate."""
    denominator = self.x * self.x - self.y * self.y * self.delta
    if denominator == 0:
      raise ZeroDivisionError('division by zero surd')
    factor = denominator.inverse()
    return Surd._raw(self.x * factor, -self.y * factor, self.delta)


  def __truediv__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    return self * other.inverse()


  def __rtruediv__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    return other * self.inverse()

  __div__ = __truediv__
  __rdiv__ = __rtruediv__


  def __eq__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    try:
      return (self - other).sign() == 0
    except MixedFieldError:
      # Normalized surds from different extensions are irrational over each other's field.
      return False


  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result


  def __lt__(self, other):
    other = Surd.coerce(other)
    if other is None:
      return NotImplemented
    return compareValues(self, other) < 0


  def __hash__(self):
    # Equal surds share x: rebasing onto another radicand only rescales y.
    return hash(self.x)


  def __float__(self):
    return float(self.x) + float(self.y) * math.sqrt(float(self.delta))


  def __repr__(self):
    return 'Surd(%r, %r, %r)' % (self.x, self.y, self.delta)


  def __str__(self):
    if self.y == 0:
      return str(self.x)
    y, delta = self.y, self.delta
    if y.r == 0:
      # s*sqrt(3)*sqrt(delta) reads better as s*sqrt(3*delta).
      y, delta = SqrtThree(y.s), delta * 3
    radical = u'√%s' % delta
    negative = False
    if y.isRational():
      magnitude = abs(y.r)
      term = radical if magnitude == 1 else _formatCoefficient(magnitude) + radical
      negative = y.r < 0
    else:
      term = '(%s)%s' % (y, radical)
    if self.x == 0:
      return ('-' if negative else '') + term
    x = str(self.x) if self.x.isRational() else '(%s)' % self.x
    return '%s %s %s' % (x, '-' if negative else '+', term)



def _align(a, b):
  """Expresses two surds over a common radical.

  Returns (delta, xa, ya, xb, yb). Raises MixedFieldError when the radicands generate
  different extensions.
  """
  if b.delta == 0 or a.delta == b.delta:
    return a.delta, a.x, a.y, b.x, b.y
  if a.delta == 0:
    return b.delta, a.x, a.y, b.x, b.y
  product = a.delta * b.delta
  root = rationalSqrt(product)
  if root is not None:
    return b.delta, a.x, a.y * (root / b.delta), b.x, b.y
  root = rationalSqrt(product / 3)
  if root is not None:
    return b.delta, a.x, a.y * SqrtThree(0, root / b.delta), b.x, b.y
  raise MixedFieldError('sqrt(%s) and sqrt(%s) generate different fields' % (a.delta, b.delta))


def sameField(a, b):
  """True if two values can be combined exactly."""
  try:
    _align(Surd.coerce(a), Surd.coerce(b))
    return True
  except MixedFieldError:
    return False


def sqrtOf(q):
  """The nonnegative square root of a nonnegative rational, as a Surd."""
  return Surd(0, 1, q)


def surdSign(value):
  """Exact sign of an int, Fraction, SqrtThree or Surd."""
  value = Surd.coerce(value)
  if value is None:
    raise TypeError('cannot take the exact sign of %r' % (value,))
  return value.sign()



def _ivRational(q):
  """Interval enclosure of a Fraction in the current interval precision."""
  return mpmath.iv.mpf(q.numerator) / mpmath.iv.mpf(q.denominator)


def _ivValue(value):
  """Interval enclosure of a Surd in the current interval precision."""
  root3 = mpmath.iv.sqrt(mpmath.iv.mpf(3))
  x = _ivRational(value.x.r) + _ivRational(value.x.s) * root3
  if value.y == 0:
    return x
  y = _ivRational(value.y.r) + _ivRational(value.y.s) * root3
  return x + y * mpmath.iv.sqrt(_ivRational(value.delta))


def toInterval(value, bits=DEFAULT_PRECISION_BITS):
  """Returns an mpmath interval enclosing value, computed with the given precision."""
  value = Surd.coerce(value)
  with _PRECISION_LOCK:
    saved = mpmath.iv.prec
    mpmath.iv.prec = bits
    try:
      return _ivValue(value)
    finally:
      mpmath.iv.prec = saved


def _coefficientBits(value):
  """Bit length of the largest numerator or denominator in a Surd."""
  parts = (value.x.r, value.x.s, value.y.r, value.y.s, value.delta)
  return max(max(abs(q.numerator).bit_length(), q.denominator.bit_length()) for q in parts)


def _mpValue(value):
  """x + y*sqrt(delta) in the current mpmath precision."""
  root3 = mpmath.sqrt(3)
  x = mpmath.mpf(value.x.r.numerator) / value.x.r.denominator
  x += mpmath.mpf(value.x.s.numerator) / value.x.s.denominator * root3
  if value.y != 0:
    y = mpmath.mpf(value.y.r.numerator) / value.y.r.denominator
    y += mpmath.mpf(value.y.s.numerator) / value.y.s.denominator * root3
    x += y * mpmath.sqrt(mpmath.mpf(value.delta.numerator) / value.delta.denominator)
  return x


def toMpf(value, bits=DEFAULT_PRECISION_BITS):
  """Returns an mpmath floating point approximation of value.

  Large coefficients can cancel almost completely, so the working precision grows with
  their size and doubles until the approximation has the exact sign.
  """
  value = Surd.coerce(value)
  sign = value.sign()
  if sign == 0:
    return mpmath.mpf(0)
  working = bits + 8 * _coefficientBits(value) + 64
  with _PRECISION_LOCK:
    while True:
      with mpmath.workprec(working):
        approximation = _mpValue(value)
      if mpmath.sign(approximation) == sign:
        break
      log.debug('Approximation of %s lost its sign at %d bits, doubling', value, working)
      working *= 2
    with mpmath.workprec(bits):
      return +approximation


def compareValues(a, b, precisionBits=DEFAULT_PRECISION_BITS):
  """Compares two exact values, returning -1, 0 or 1.

  Values sharing a field are compared exactly. Otherwise the difference is enclosed in
  intervals of doubling precision until the enclosure excludes zero.
  """
  a = Surd.coerce(a)
  b = Surd.coerce(b)
  if a is None or b is None:
    raise TypeError('cannot compare %r with %r' % (a, b))
  try:
    return (a - b).sign()
  except MixedFieldError:
    pass

  INTERVAL_FALLBACKS.increment()
  bits = max(precisionBits, 64)
  with _PRECISION_LOCK:
    saved = mpmath.iv.prec
    try:
      while True:
        mpmath.iv.prec = bits
        difference = _ivValue(a) - _ivValue(b)
        if (difference > 0) is True:
          return 1
        if (difference < 0) is True:
          return -1
        if (difference.delta < mpmath.iv.mpf(2) ** -INTERVAL_CUTOFF_BITS) is True:
          raise IndistinguishableError('%s and %s agree to 2^-%d' % (a, b, INTERVAL_CUTOFF_BITS))
        log.debug('Interval comparison undecided at %d bits, doubling', bits)
        bits *= 2
    finally:
      mpmath.iv.prec = saved


def toDecimal(value, places=10, precisionBits=DEFAULT_PRECISION_BITS, roundDown=False):
  """Renders an exact value rounded half-up to the given number of decimal places.

  With roundDown the value is rounded toward minus infinity instead, which for positive values
  keeps the digits the way printed tables show them. The mpmath estimate only seeds the search;
  the final digit is settled by exact comparisons.
  """
  value = Surd.coerce(value)
  scaled = value * (10 ** places)
  estimate = int(mpmath.floor(toMpf(scaled, precisionBits)))
  offset = Fraction(0) if roundDown else Fraction(1, 2)
  while (scaled - (estimate + 1 - offset)).sign() >= 0:
    estimate += 1
  while (scaled - (estimate - offset)).sign() < 0:
    estimate -= 1

  sign = '-' if estimate < 0 else ''
  digits = str(abs(estimate)).rjust(places + 1, '0')
  if not places:
    return sign + digits
  return '%s%s.%s' % (sign, digits[:-places], digits[-places:])



class IntVec3(collections.namedtuple('IntVec3', 'x1 x2 x3')):
  """An integral vector of the quadratic space."""

  __slots__ = ()

  def isPositive(self):
    """True if the last coordinate is positive."""
    return self.x3 > 0


  def primitive(self):
    """The primitive positive multiple of this vector."""
    divisor = math.gcd(math.gcd(self.x1, self.x2), self.x3)
    if divisor == 0:
      return self
    if self.x3 < 0:
      divisor = -divisor
    return IntVec3(self.x1 // divisor, self.x2 // divisor, self.x3 // divisor)


  def normalized(self):
    """The rational coordinates scaled so that the last one is 1."""
    assert self.x3 != 0
    return (Fraction(self.x1, self.x3), Fraction(self.x2, self.x3), Fraction(1))



class Mat3Z(object):
  """A 3x3 integer matrix, row-major."""

  __slots__ = ('rows',)

  def __init__(self, rows):
    self.rows = tuple(tuple(int(entry) for entry in row) for row in rows)
    assert len(self.rows) == 3 and all(len(row) == 3 for row in self.rows)


  def __mul__(self, other):
    if isinstance(other, Mat3Z):
      columns = list(zip(*other.rows))
      return Mat3Z([[sum(a * b for a, b in zip(row, column)) for column in columns]
                    for row in self.rows])
    if isinstance(other, tuple) and len(other) == 3:
      return IntVec3(*[sum(a * b for a, b in zip(row, other)) for row in self.rows])
    return NotImplemented


  def det(self):
    """The determinant."""
    (a, b, c), (d, e, f), (g, h, i) = self.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


  def transpose(self):
    """The transposed matrix."""
    return Mat3Z(zip(*self.rows))


  def __eq__(self, other):
    if not isinstance(other, Mat3Z):
      return NotImplemented
    return self.rows == other.rows


  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result


  def __hash__(self):
    return hash(self.rows)


  def __repr__(self):
    return 'Mat3Z(%r)' % (self.rows,)



class Mat2S(object):
  """A 2x2 matrix (a, b; c, d) over Q(sqrt 3), acting on [0, inf] as a Mobius map."""

  __slots__ = ('a', 'b', 'c', 'd')

  def __init__(self, a, b, c, d):
    self.a, self.b, self.c, self.d = [_sqrtThreeEntry(entry) for entry in (a, b, c, d)]


  def __mul__(self, other):
    if not isinstance(other, Mat2S):
      return NotImplemented
    return Mat2S(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                 self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)


  def det(self):
    """The determinant."""
    return self.a * self.d - self.b * self.c


  def trace(self):
    """The trace."""
    return self.a + self.d


  def discriminant(self):
    """Trace squared minus four times the determinant."""
    return self.trace() * self.trace() - 4 * self.det()


  def transpose(self):
    """The transposed matrix."""
    return Mat2S(self.a, self.c, self.b, self.d)


  def swapped(self):
    """The conjugate J N J = (d, c; b, a) by the antidiagonal involution."""
    return Mat2S(self.d, self.c, self.b, self.a)


  def inverse(self):
    """The matrix inverse."""
    det = self.det()
    return Mat2S(self.d / det, -self.b / det, -self.c / det, self.a / det)


  def hasParityPattern(self):
    """True if the diagonal is integral, the off-diagonal is sqrt(3) times integers and det is +-1."""
    return (self.a.isInteger() and self.d.isInteger() and self.b.isSqrtThreeMultiple() and
            self.c.isSqrtThreeMultiple() and self.det() in (1, -1))


  def __eq__(self, other):
    if not isinstance(other, Mat2S):
      return NotImplemented
    return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)


  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result


  def __hash__(self):
    return hash((self.a, self.b, self.c, self.d))


  def __repr__(self):
    return 'Mat2S(%s, %s; %s, %s)' % (self.a, self.b, self.c, self.d)


def _sqrtThreeEntry(value):
  """Coerces a matrix entry into Q(sqrt 3)."""
  entry = SqrtThree.coerce(value)
  if entry is None:
    raise TypeError('matrix entries must lie in Q(sqrt 3), got %r' % (value,))
  return entry


def root3(n):
  """n*sqrt(3) as a SqrtThree."""
  return SqrtThree(0, n)



def quadraticForm(v):
  """Q(x) = x1^2 + x1 x2 + x2^2 - x3^2."""
  x1, x2, x3 = v
  return x1 * x1 + x1 * x2 + x2 * x2 - x3 * x3


def pairing(x, y):
  """The symmetric bilinear pairing of the quadratic form.

  Integral vectors give exact Fractions (integers or half integers); vectors with Surd
  coordinates give Surds.
  """
  x1, x2, x3 = x
  y1, y2, y3 = y
  return x1 * y1 + (x1 * y2 + x2 * y1) * Fraction(1, 2) + x2 * y2 - x3 * y3


def hatDigit(digit):
  """The digit involution swapping 1 and 5 and fixing 2, 3, 4."""
  return {1: 5, 5: 1}.get(digit, digit)


def veeDigit(digit):
  """The digit involution d -> 6 - d, induced by swapping coordinates."""
  return 6 - digit


def lucasCd(k):
  """Returns (c_k, d_k) with c_0 = 1, d_0 = 2 and (c, d) -> (5c - d, 9c - 2d)."""
  if k < 0:
    raise ValueError('Lucas index must be nonnegative, got %d' % k)
  c, d = 1, 2
  for _ in range(k):
    c, d = 5 * c - d, 9 * c - 2 * d
  assert 9 * c * c - 7 * c * d + d * d == (-1) ** (k + 1)
  return c, d


def lucasU(n):
  """U_1 = 1, U_2 = 3, U_{n+1} = 3 U_n + U_{n-1}; c_k equals U_{k+1}."""
  if n < 1:
    raise ValueError('Lucas index must be positive, got %d' % n)
  previous, current = 0, 1
  for _ in range(n - 1):
    previous, current = current, 3 * current + previous
  return current



IDENTITY3 = Mat3Z([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

H = Mat3Z([[-4, -3, 4], [-3, -4, 4], [-6, -6, 7]])

U = {
  1: Mat3Z([[0, -1, 0], [1, 1, 0], [0, 0, 1]]),
  2: Mat3Z([[-1, -1, 0], [0, 1, 0], [0, 0, 1]]),
  3: Mat3Z([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
  4: Mat3Z([[1, 0, 0], [-1, -1, 0], [0, 0, 1]]),
  5: Mat3Z([[1, 1, 0], [-1, 0, 0], [0, 0, 1]]),
}

M = {
  1: Mat3Z([[-3, 1, 4], [-4, -1, 4], [-6, 0, 7]]),
  2: Mat3Z([[4, 1, 4], [3, -1, 4], [6, 0, 7]]),
  3: Mat3Z([[4, 3, 4], [3, 4, 4], [6, 6, 7]]),
  4: Mat3Z([[-1, 3, 4], [1, 4, 4], [0, 6, 7]]),
  5: Mat3Z([[-1, -4, 4], [1, -3, 4], [0, -6, 7]]),
}

M_INVERSE = {
  1: Mat3Z([[-7, -7, 8], [4, 3, -4], [-6, -6, 7]]),
  2: Mat3Z([[7, 7, -8], [-3, -4, 4], [-6, -6, 7]]),
  3: Mat3Z([[4, 3, -4], [3, 4, -4], [-6, -6, 7]]),
  4: Mat3Z([[-4, -3, 4], [7, 7, -8], [-6, -6, 7]]),
  5: Mat3Z([[3, 4, -4], [-7, -7, 8], [-6, -6, 7]]),
}

IDENTITY2 = Mat2S(1, 0, 0, 1)

N = {
  1: Mat2S(1, root3(1), 0, 1),
  2: Mat2S(2, root3(1), root3(1), 1),
  3: Mat2S(2, root3(1), root3(1), 2),
  4: Mat2S(1, root3(1), root3(1), 2),
  5: Mat2S(1, 0, root3(1), 1),
}

# The base, height and diagonal vectors of the quadratic space.
U_10 = IntVec3(1, 0, 1)
U_01 = IntVec3(0, 1, 1)
V_Q = IntVec3(0, 0, 1)



def checkConstants():
  """Re-derives the constant matrices from H and U_d, raising SelfCheckError on any mismatch."""
  problems = []
  if H * H != IDENTITY3:
    problems.append('H*H != I')
  for digit in DIGITS:
    if H * U[digit] != M[digit]:
      problems.append('M_%d != H*U_%d' % (digit, digit))
    if M[digit] * M_INVERSE[digit] != IDENTITY3:
      problems.append('M_%d * M_%d^-1 != I' % (digit, digit))
    if U[hatDigit(digit)] * U[digit] != IDENTITY3:
      problems.append('U_hat(%d) != U_%d^-1' % (digit, digit))
    if U[hatDigit(digit)] * H != M_INVERSE[digit]:
      problems.append('M_%d^-1 != U_hat(%d)*H' % (digit, digit))
    expectedDet = 1 if digit in (1, 3, 5) else -1
    if M[digit].det() != expectedDet:
      problems.append('det M_%d != %d' % (digit, expectedDet))
    if N[digit].det() != expectedDet:
      problems.append('det N_%d != %d' % (digit, expectedDet))
  if problems:
    raise SelfCheckError('constant matrices failed self-check: %s' % ', '.join(problems))
  log.debug('Constant matrices passed self-check')


checkConstants()
