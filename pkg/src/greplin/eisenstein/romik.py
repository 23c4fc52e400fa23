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

"""The digit dynamical system on the arc x^2 + xy + y^2 = 1, x, y >= 0, and its conjugate on [0, inf].

Rational points of the arc are Eisenstein triples (a, b, c) with a^2 + ab + b^2 = c^2. Every
point has an expansion in digits 1..5; the five branches of the map are the inverses of the
integral matrices M_d acting on triples, and on the line [0, inf] they become the Mobius
maps of the matrices N_d.
"""

from fractions import Fraction
from greplin.eisenstein import arith, util
from greplin.eisenstein.arith import DIGITS, IntVec3, SQRT3, SqrtThree, Surd

import collections
import functools
import logging
import math
import re

log = logging.getLogger(__name__)



class NotOnCurveError(arith.EisensteinError):
  """A triple does not describe a first-sextant point of the curve."""



class InvalidDigitError(arith.EisensteinError):
  """A digit that the point does not carry."""



class NonTerminationError(arith.EisensteinError):
  """A rational expansion did not reach a terminal point in time."""



class DegenerateWordError(arith.EisensteinError):
  """A Mobius evaluation produced 0/0."""



class ParseError(arith.EisensteinError):
  """Malformed point, word or stream text."""



class CirclePoint(object):
  """A rational point (a/c, b/c) of the arc, stored as its primitive Eisenstein triple."""

  __slots__ = ('a', 'b', 'c')

  def __init__(self, a, b, c):
    a, b, c = int(a), int(b), int(c)
    divisor = math.gcd(math.gcd(a, b), c)
    if divisor == 0:
      raise NotOnCurveError('the zero vector is not a point')
    if c < 0:
      divisor = -divisor
    a, b, c = a // divisor, b // divisor, c // divisor
    if a < 0 or b < 0 or a * a + a * b + b * b != c * c:
      raise NotOnCurveError('(%d, %d, %d) is not a first-sextant point of x^2 + xy + y^2 = 1' % (a, b, c))
    self.a, self.b, self.c = a, b, c


  @classmethod
  def fromVector(cls, vector):
    """The point represented by an integral vector."""
    return cls(*vector)


  @classmethod
  def fromCoordinates(cls, x, y):
    """The point with rational coordinates (x, y)."""
    x, y = Fraction(x), Fraction(y)
    c = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
    return cls(x * c, y * c, c)


  @property
  def x(self):
    """The first coordinate a/c."""
    return Fraction(self.a, self.c)


  @property
  def y(self):
    """The second coordinate b/c."""
    return Fraction(self.b, self.c)


  def vector(self):
    """The primitive positive vector (a, b, c)."""
    return IntVec3(self.a, self.b, self.c)


  def swapped(self):
    """The mirror image (b, a, c)."""
    return CirclePoint(self.b, self.a, self.c)


  def key(self):
    """Sort key: height first, then a."""
    return (self.c, self.a)


  def __iter__(self):
    return iter((self.a, self.b, self.c))


  def __eq__(self, other):
    if not isinstance(other, CirclePoint):
      return NotImplemented
    return (self.a, self.b, self.c) == (other.a, other.b, other.c)


  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result


  def __hash__(self):
    return hash((self.a, self.b, self.c))


  def __repr__(self):
    return 'CirclePoint(%d, %d, %d)' % (self.a, self.b, self.c)


  def __str__(self):
    return '(%s, %s)' % (self.x, self.y)


POINT_10 = CirclePoint(1, 0, 1)
POINT_01 = CirclePoint(0, 1, 1)

# Every other triple descends from exactly one of these under left multiplication by M_d.
TREE_ROOTS = (CirclePoint(8, 7, 13), CirclePoint(3, 5, 7), CirclePoint(5, 3, 7), CirclePoint(7, 8, 13))



def _checkedWord(digits):
  """Validates a digit sequence and returns it as a tuple."""
  word = tuple(int(d) for d in digits)
  for digit in word:
    if digit not in DIGITS:
      raise ParseError('digit %d is outside 1..5' % digit)
  return word


def isReduced(word):
  """True if the word avoids the digits 1 and 5."""
  return all(digit not in (1, 5) for digit in word)


def primitiveRoot(word):
  """The shortest word whose power is word."""
  length = len(word)
  for size in range(1, length + 1):
    if length % size == 0 and word[:size] * (length // size) == word:
      return word[:size]
  return word


def veeWord(word):
  """Applies d -> 6 - d digit by digit."""
  return tuple(arith.veeDigit(digit) for digit in word)


def hatWord(word):
  """Swaps the digits 1 and 5."""
  return tuple(arith.hatDigit(digit) for digit in word)



class DigitStream(object):
  """An eventually periodic digit sequence: preperiod followed by the period repeated forever.

  The period is kept primitive and the preperiod as short as possible, so equal streams have
  equal representations.
  """

  __slots__ = ('preperiod', 'period')

  def __init__(self, preperiod=(), period=(1,)):
    preperiod = _checkedWord(preperiod)
    period = _checkedWord(period)
    if not period:
      raise ParseError('the period of a digit stream must be nonempty')
    period = primitiveRoot(period)
    while preperiod and preperiod[-1] == period[-1]:
      preperiod = preperiod[:-1]
      period = period[-1:] + period[:-1]
    self.preperiod = preperiod
    self.period = period


  def digitAt(self, index):
    """The digit at a zero-based position."""
    if index < len(self.preperiod):
      return self.preperiod[index]
    return self.period[(index - len(self.preperiod)) % len(self.period)]


  def prefix(self, length):
    """The first length digits."""
    return tuple(self.digitAt(index) for index in range(length))


  def shift(self, steps=1):
    """The stream of the point T^steps(P)."""
    if steps <= len(self.preperiod):
      return DigitStream(self.preperiod[steps:], self.period)
    offset = (steps - len(self.preperiod)) % len(self.period)
    return DigitStream((), self.period[offset:] + self.period[:offset])


  def vee(self):
    """The stream of the mirrored point."""
    return DigitStream(veeWord(self.preperiod), veeWord(self.period))


  def hat(self):
    """The stream with digits 1 and 5 swapped."""
    return DigitStream(hatWord(self.preperiod), hatWord(self.period))


  def isRational(self):
    """True for the terminal tails 1^inf and 5^inf."""
    return self.period in ((1,), (5,))


  def isPurelyPeriodic(self):
    """True if there is no preperiod."""
    return not self.preperiod


  def isReduced(self):
    """True if the stream avoids the digits 1 and 5."""
    return isReduced(self.preperiod) and isReduced(self.period)


  def toText(self):
    """The ASCII form accepted by parseStream."""
    head = ''.join(str(d) for d in self.preperiod)
    if len(self.period) == 1:
      return '%s%dinf' % (head, self.period[0])
    return '%s(%s)inf' % (head, ''.join(str(d) for d in self.period))


  def __eq__(self, other):
    if not isinstance(other, DigitStream):
      return NotImplemented
    return (self.preperiod, self.period) == (other.preperiod, other.period)


  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result


  def __hash__(self):
    return hash((self.preperiod, self.period))


  def __repr__(self):
    return 'DigitStream(%r, %r)' % (self.preperiod, self.period)


  def __str__(self):
    if len(self.period) == 1:
      tail = u'%d^∞' % self.period[0]
    else:
      tail = u'(%s)^∞' % ','.join(str(d) for d in self.period)
    return u'[%s]' % ','.join([str(d) for d in self.preperiod] + [tail])


STREAM_PATTERN = re.compile(r'^([1-5]*)(?:\(([1-5]+)\)|([1-5]))inf$')


def parseStream(text):
  """Parses '3inf', '34inf', '(223)inf', '12(15)inf' or the written form '[1,2,1^∞]'."""
  cleaned = text.strip().replace(u'^∞', 'inf').replace(u'∞', 'inf').replace('^inf', 'inf')
  cleaned = re.sub(r'[\s,\[\]]', '', cleaned)
  match = STREAM_PATTERN.match(cleaned)
  if not match:
    raise ParseError('cannot parse digit stream %r' % text)
  head, longPeriod, shortPeriod = match.groups()
  return DigitStream(head, longPeriod or shortPeriod)


def parseWord(text):
  """Parses a finite digit word such as '224' or '2,2,4'."""
  cleaned = re.sub(r'[\s,\[\]]', '', text)
  if not re.match(r'^[1-5]*$', cleaned):
    raise ParseError('cannot parse digit word %r' % text)
  return tuple(int(d) for d in cleaned)


def parsePoint(text, second=None):
  """Parses 'a/c,b/c' (or two separate coordinates) into a CirclePoint."""
  if second is None:
    parts = [part for part in re.split(r'[\s,]+', text.strip()) if part]
  else:
    parts = [text, second]
  if len(parts) != 2:
    raise ParseError('a point needs two coordinates, got %r' % text)
  try:
    x, y = Fraction(parts[0]), Fraction(parts[1])
  except (ValueError, ZeroDivisionError):
    raise ParseError('cannot parse point %r' % text)
  return CirclePoint.fromCoordinates(x, y)


def parseTarget(text):
  """A digit stream if the text mentions infinity, a rational point otherwise."""
  if 'inf' in text or u'∞' in text:
    return parseStream(text)
  return parsePoint(text)



def digitsOf(point):
  """The one or two digits of a rational point, from integer comparisons of a against c."""
  a, c = point.a, point.c
  digits = []
  if 7 * a >= 5 * c:
    digits.append(1)
  if 13 * a >= 8 * c and 7 * a <= 5 * c:
    digits.append(2)
  if 13 * a >= 7 * c and 13 * a <= 8 * c:
    digits.append(3)
  if 7 * a >= 3 * c and 13 * a <= 7 * c:
    digits.append(4)
  if 7 * a <= 3 * c:
    digits.append(5)
  return tuple(digits)


def romikStep(point, digit):
  """Applies the branch of the map belonging to digit."""
  if digit not in digitsOf(point):
    raise InvalidDigitError('%r does not carry digit %d' % (point, digit))
  return CirclePoint.fromVector(arith.M_INVERSE[digit] * point.vector())


def expandRational(point, maxSteps=10000):
  """Expands a rational point into its digit streams.

  Returns (stream, alternative). The two fixed points (1,0) and (0,1) have a single
  expansion and alternative None; every other rational point ends at an ambiguous point and
  has two.
  """
  prefix = []
  current = point
  for _ in range(maxSteps + 1):
    if current == POINT_10:
      return DigitStream(prefix, (1,)), None
    if current == POINT_01:
      return DigitStream(prefix, (5,)), None
    digits = digitsOf(current)
    if len(digits) == 2:
      streams = []
      for digit in digits:
        terminal = romikStep(current, digit)
        tail = 1 if terminal == POINT_10 else 5
        streams.append(DigitStream(prefix + [digit], (tail,)))
      return streams[0], streams[1]
    prefix.append(digits[0])
    current = romikStep(current, digits[0])
  raise NonTerminationError('%r did not terminate within %d steps' % (point, maxSteps))


@functools.lru_cache(maxsize=8192)
def _berggrenMatrix(word):
  """Cached product of the M_d matrices."""
  product = arith.IDENTITY3
  for digit in word:
    product = product * arith.M[digit]
  return product


def berggrenMatrix(word):
  """The product M_{d1} ... M_{dk} of the integral matrices."""
  return _berggrenMatrix(tuple(word))


def cylinderBoundaries(word):
  """The two rational endpoints of the cylinder set of word: images of (1,0) and (0,1)."""
  matrix = berggrenMatrix(word)
  return (CirclePoint.fromVector(matrix * arith.U_10), CirclePoint.fromVector(matrix * arith.U_01))


def berggrenSign(word):
  """det(M_{d1} ... M_{dk}); +1 when the map P -> [word, P] preserves order."""
  return berggrenMatrix(word).det()


def _expandSubtree(root, maxC):
  """Breadth-first expansion of one tree below maxC."""
  found = []
  queue = collections.deque([root.vector()])
  while queue:
    vector = queue.popleft()
    found.append(CirclePoint.fromVector(vector))
    for digit in DIGITS:
      child = arith.M[digit] * vector
      if child.x3 <= maxC:
        queue.append(child)
  return found


def enumerateTriples(maxC, threads=1):
  """Every Eisenstein triple with c <= maxC, sorted by (c, a)."""
  if maxC < 1:
    raise ValueError('maxC must be at least 1, got %d' % maxC)
  roots = [root for root in TREE_ROOTS if root.c <= maxC]
  subtrees = util.parallelMap(functools.partial(_expandSubtree, maxC=maxC), roots, threads)
  triples = [POINT_10, POINT_01]
  for subtree in subtrees:
    triples.extend(subtree)
  triples.sort(key=CirclePoint.key)
  log.info('Enumerated %d triples up to height %d', len(triples), maxC)
  return triples


def sieveTriples(maxC):
  """Brute-force search over all (a, c) pairs; the oracle for enumerateTriples."""
  found = []
  for c in range(1, maxC + 1):
    for a in range(c + 1):
      discriminant = 4 * c * c - 3 * a * a
      root = math.isqrt(discriminant)
      if root * root != discriminant or (root - a) % 2 or root < a:
        continue
      b = (root - a) // 2
      if math.gcd(math.gcd(a, b), c) == 1:
        found.append(CirclePoint(a, b, c))
  found.sort(key=CirclePoint.key)
  return found



class _Infinity(object):
  """The point at infinity of [0, inf]."""

  __slots__ = ()

  def __eq__(self, other):
    return other is self


  def __ne__(self, other):
    return other is not self


  def __hash__(self):
    return hash('eisenstein-infinity')


  def __float__(self):
    return float('inf')


  def __repr__(self):
    return 'INFINITY'


  def __str__(self):
    return u'∞'


INFINITY = _Infinity()


def compareNorms(first, second):
  """Compares two points of [0, inf], returning -1, 0 or 1."""
  if first is INFINITY or second is INFINITY:
    return (first is INFINITY) - (second is INFINITY)
  return arith.compareValues(first, second)


def mobius(matrix, t):
  """Applies t -> (a t + b) / (c t + d) on [0, inf]."""
  if t is INFINITY:
    if matrix.c == 0:
      return INFINITY
    return Surd.coerce(matrix.a / matrix.c)
  t = Surd.coerce(t)
  numerator = t * matrix.a + matrix.b
  denominator = t * matrix.c + matrix.d
  if denominator == 0:
    if numerator == 0:
      raise DegenerateWordError('0/0 evaluating %r at %s' % (matrix, t))
    return INFINITY
  return numerator / denominator


@functools.lru_cache(maxsize=8192)
def _wordMatrix(word):
  """Cached product of the N_d matrices."""
  product = arith.IDENTITY2
  for digit in word:
    product = product * arith.N[digit]
  return product


def wordMatrix(word):
  """N_w = N_{d1} ... N_{dk}; the empty word gives the identity."""
  return _wordMatrix(tuple(word))


def cylinderInterval(word):
  """The image of [0, inf] under N_w as (low, high): every stream starting with word lands in it."""
  matrix = wordMatrix(word)
  first = mobius(matrix, Surd(0))
  second = mobius(matrix, INFINITY)
  if compareNorms(first, second) <= 0:
    return first, second
  return second, first


def _periodFixedPoint(matrix):
  """The fixed point (a - d + sqrt(disc)) / 2c of N in [0, inf]."""
  if matrix.c == 0:
    return INFINITY
  discriminant = matrix.discriminant()
  assert discriminant.isRational()
  return (Surd(0, 1, discriminant.r) + (matrix.a - matrix.d)) / (2 * matrix.c)


def normOfStream(stream):
  """The stereographic coordinate of an eventually periodic point."""
  fixed = _periodFixedPoint(wordMatrix(stream.period))
  return mobius(wordMatrix(stream.preperiod), fixed)


def stereoNorm(point):
  """The stereographic coordinate sqrt(3)(a + b - c) / (2c - 2a - b) of a rational point."""
  denominator = 2 * point.c - 2 * point.a - point.b
  if denominator == 0:
    return INFINITY
  return Surd(SqrtThree(0, Fraction(point.a + point.b - point.c, denominator)))


def stereoNormOf(alpha, beta):
  """The stereographic coordinate of a point given by exact coordinates."""
  alpha, beta = Surd.coerce(alpha), Surd.coerce(beta)
  denominator = 2 - 2 * alpha - beta
  if denominator == 0:
    return INFINITY
  return (alpha + beta - 1) * SQRT3 / denominator


def pointOfNorm(t):
  """Inverts the projection: with u = 2t + sqrt(3) = cot(theta/2), returns (alpha, beta)."""
  if t is INFINITY:
    return Surd(1), Surd(0)
  u = Surd.coerce(t) * 2 + SQRT3
  uSquared = u * u
  denominator = uSquared + 1
  alpha = (uSquared - 1 - u * 2 / SQRT3) / denominator
  beta = u * 4 / (denominator * SQRT3)
  return alpha, beta


def pointOfStream(stream):
  """Exact coordinates of the point with the given expansion."""
  return pointOfNorm(normOfStream(stream))


def normOf(point):
  """The stereographic coordinate of a CirclePoint, DigitStream or an already projected value."""
  if isinstance(point, CirclePoint):
    return stereoNorm(point)
  if isinstance(point, DigitStream):
    return normOfStream(point)
  return point


_LINE_BREAKPOINTS = ((1, Surd(SQRT3)), (2, Surd(2 / SQRT3)), (3, Surd(SQRT3 / 2)), (4, Surd(1 / SQRT3)))

N_INVERSE = dict((digit, arith.N[digit].inverse()) for digit in DIGITS)


def lineDigit(t):
  """The digit of t in [0, inf]; at a breakpoint the smaller digit."""
  if t is INFINITY:
    return 1
  for digit, lower in _LINE_BREAKPOINTS:
    if compareNorms(t, lower) >= 0:
      return digit
  return 5


def lineStep(t):
  """The conjugate map on [0, inf]: N_d^-1 on the branch of digit d."""
  return mobius(N_INVERSE[lineDigit(t)], t)


def orderPoints(first, second):
  """Compares two first-sextant points along the arc from (1,0) to (0,1).

  Returns -1 if first precedes second, 0 if equal, 1 otherwise. The projection reverses
  the order, so the comparison runs on the coordinates swapped.
  """
  return compareNorms(normOf(second), normOf(first))


def commonPrefixOrder(word, firstDigit, secondDigit):
  """Order of points [word, firstDigit, ...] and [word, secondDigit, ...] interior to their cylinders.

  Decided from det N_w alone: an orientation-preserving prefix keeps the digit order
  (smaller digit first), a reversing one flips it.
  """
  if firstDigit == secondDigit:
    return 0
  det = wordMatrix(word).det()
  order = -1 if firstDigit < secondDigit else 1
  return order if det == 1 else -order


def theta(point):
  """The angle of a point in radians, from cos = alpha + beta/2 and sin = (sqrt(3)/2) beta."""
  if isinstance(point, CirclePoint):
    alpha, beta = float(point.x), float(point.y)
  else:
    alpha, beta = [float(value) for value in point]
  return math.atan2(math.sqrt(3) / 2 * beta, alpha + beta / 2)


def mirrored(value):
  """The coordinate of the mirror point: 1/t, with 0 and inf exchanged."""
  if value is INFINITY:
    return Surd(0)
  if value == 0:
    return INFINITY
  return 1 / Surd.coerce(value)
