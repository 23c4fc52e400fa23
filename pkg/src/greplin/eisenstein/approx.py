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

"""Approximation of points of the arc by rational points.

For a target P and a rational approximant Z = (a, b, c) the approximation constant is
delta(P; Z) = sqrt(-2c <p, z>) with p the normalized vector of P. This module evaluates it
exactly, through Perron's formula, and through exhaustive scans that serve as oracles.
"""

from fractions import Fraction
from greplin.eisenstein import arith, romik, util
from greplin.eisenstein.romik import CirclePoint, DigitStream

import collections
import functools
import logging
import math

import mpmath

log = logging.getLogger(__name__)



class SamePointError(arith.EisensteinError):
  """The approximant equals the target."""



class IndexOutOfRangeError(arith.EisensteinError):
  """A section index below one."""



class RationalTargetError(arith.EisensteinError):
  """An operation that needs an irrational target got a rational one."""



class InsufficientDepthError(arith.EisensteinError):
  """Too few boundary points below the height limit."""



class NotEisensteinPairError(arith.EisensteinError):
  """a^2 + ab + b^2 is not a perfect square."""



class ApproxRecord(collections.namedtuple('ApproxRecord', 'target approximant height deltaSq boundary')):
  """One approximant of a target.

  boundary is the smallest k such that the approximant bounds the cylinder of the first k
  digits of the target, or None.
  """

  __slots__ = ()

  def delta(self):
    """delta(P; Z) as a float."""
    return _floatSqrt(self.deltaSq)



class PerronRecord(collections.namedtuple('PerronRecord', 'k epsSq denominator deltaSq delta')):
  """Perron's formula at section k: deltaSq = epsSq / denominator^2, delta its float root."""

  __slots__ = ()



class PairScanResult(collections.namedtuple('PairScanResult', 'estimate witness rational')):
  """Minimum ray distance over a window of pairs."""

  __slots__ = ()


U = arith.U_10

# Floating coordinates only satisfy the curve equation up to rounding.
COORDINATE_TOLERANCE = mpmath.mpf('1e-12')


def _floatSqrt(value):
  """Square root of an exact nonnegative value as a float."""
  return float(mpmath.sqrt(arith.toMpf(value)))


def height(point):
  """Ht(Z) = c, which is also -<z, (0, 0, 1)>."""
  assert point.c == -arith.pairing(point.vector(), arith.V_Q)
  return point.c


def _targetVector(target):
  """The normalized vector (alpha, beta, 1) of a CirclePoint or DigitStream."""
  if isinstance(target, CirclePoint):
    return (target.x, target.y, Fraction(1))
  alpha, beta = romik.pointOfStream(target)
  return (alpha, beta, arith.Surd(1))


def _deltaSqFunction(target):
  """Returns Z -> -2c <p, z> with the coordinates of the target folded in once."""
  alpha, beta, _ = _targetVector(target)
  first = alpha + beta * Fraction(1, 2)
  second = alpha * Fraction(1, 2) + beta

  def evaluate(point):
    """delta^2 for one approximant."""
    value = (first * point.a + second * point.b - point.c) * (-2 * point.c)
    if value == 0:
      raise SamePointError('%s is the target itself' % (point,))
    return value

  return evaluate


def deltaSq(target, approximant):
  """delta^2(P; Z) = -2c <p, z>, exact."""
  return _deltaSqFunction(target)(approximant)


def _requireIrrational(target):
  """Rejects rational streams and points."""
  if isinstance(target, CirclePoint) or target.isRational():
    raise RationalTargetError('%s is rational' % (target,))


def boundaryPoints(target, maxC):
  """(k, Z_k^(1,0), Z_k^(0,1)) for k = 1, 2, ... while some boundary height is at most maxC."""
  _requireIrrational(target)
  points = []
  matrix = arith.IDENTITY3
  k = 0
  while True:
    k += 1
    matrix = matrix * arith.M[target.digitAt(k - 1)]
    first = CirclePoint.fromVector(matrix * arith.U_10)
    second = CirclePoint.fromVector(matrix * arith.U_01)
    if min(first.c, second.c) > maxC:
      return points
    points.append((k, first, second))


def _epsSq(alpha, beta, approximant):
  """eps_k^2 = <p, u> / <z_k / Ht(Z_k), u> with u = (1, 0, 1)."""
  numerator = arith.pairing((alpha, beta, 1), U)
  denominator = arith.pairing(approximant.vector(), U) / Fraction(approximant.c)
  if denominator == 0:
    raise romik.DegenerateWordError('the section approximant is (1, 0) itself')
  return numerator / denominator


def _pastStream(target, k):
  """P''_k = [d_k, ..., d_1, 1^inf]."""
  return DigitStream(target.prefix(k)[::-1], (1,))


def perronDelta(target, k):
  """delta(P; Z_k^(1,0)) through Perron's formula, split into past and future of the expansion."""
  if k < 1:
    raise IndexOutOfRangeError('section index must be at least 1, got %d' % k)
  _requireIrrational(target)
  word = target.prefix(k)
  approximant = romik.cylinderBoundaries(word)[0]
  alpha, beta = romik.pointOfStream(target)
  epsSq = _epsSq(alpha, beta, approximant)

  past = _pastStream(target, k).hat().vee()
  pastNorm = romik.normOfStream(past)
  if pastNorm is romik.INFINITY:
    raise romik.DegenerateWordError('the past of section %d projects to infinity' % k)
  denominator = pastNorm + romik.normOfStream(target.shift(k))
  value = epsSq / (denominator * denominator)
  return PerronRecord(k, epsSq, denominator, value, _floatSqrt(value))


def perronCorollaryTerms(target, k):
  """The two terms 1/(||(P''^)^v|| + ||P'||) and 1/(||P''^|| + ||P'^v||) at section k, as exact values."""
  if k < 1:
    raise IndexOutOfRangeError('section index must be at least 1, got %d' % k)
  _requireIrrational(target)
  pastHat = _pastStream(target, k).hat()
  future = target.shift(k)
  terms = []
  for past, present in ((pastHat.vee(), future), (pastHat, future.vee())):
    pastNorm = romik.normOfStream(past)
    if pastNorm is romik.INFINITY:
      terms.append(arith.Surd(0))
    else:
      terms.append(1 / (pastNorm + romik.normOfStream(present)))
  return tuple(terms)


def _boundaryIndex(target, maxC):
  """Maps each boundary point of height at most maxC to its smallest section index."""
  index = {}
  if isinstance(target, DigitStream) and not target.isRational():
    for k, first, second in boundaryPoints(target, maxC):
      for point in (first, second):
        index.setdefault(point, k)
  return index


def _sortRecords(records):
  """Sorts records by exact deltaSq."""
  return sorted(records, key=functools.cmp_to_key(lambda x, y: arith.compareValues(x.deltaSq, y.deltaSq)))


def bestApproxScan(target, maxC, threads=1):
  """Records for every triple of height at most maxC, sorted by exact deltaSq."""
  if maxC < 1:
    raise ValueError('maxC must be at least 1, got %d' % maxC)
  evaluate = _deltaSqFunction(target)
  boundaries = _boundaryIndex(target, maxC)
  triples = romik.enumerateTriples(maxC, threads)

  def scanChunk(chunk):
    """Records for one slice of the triples."""
    records = []
    for point in chunk:
      try:
        value = evaluate(point)
      except SamePointError:
        continue
      records.append(ApproxRecord(target, point, point.c, value, boundaries.get(point)))
    return records

  size = max(1, len(triples) // max(1, threads))
  chunks = [triples[start:start + size] for start in range(0, len(triples), size)]
  records = []
  for chunk in util.parallelMap(scanChunk, chunks, threads):
    records.extend(chunk)
  log.info('Scanned %d approximants of %s', len(records), target)
  return _sortRecords(records)


def deltaLiminfEstimate(target, maxC):
  """Estimates delta(P) as the smallest delta(P; Z) over boundary points with heights in [sqrt(maxC), maxC].

  Returns (estimate, witnesses), the witnesses sorted by deltaSq.
  """
  _requireIrrational(target)
  lowest = math.isqrt(maxC)
  evaluate = _deltaSqFunction(target)
  seen = set()
  records = []
  for k, first, second in boundaryPoints(target, maxC):
    for point in (first, second):
      if point in seen or not lowest <= point.c <= maxC:
        continue
      seen.add(point)
      records.append(ApproxRecord(target, point, point.c, evaluate(point), k))
  if len(records) < 3:
    raise InsufficientDepthError('only %d boundary points of %s have heights in [%d, %d]'
                                 % (len(records), target, lowest, maxC))
  records = _sortRecords(records)
  return records[0].delta(), records


def interiorHeightHolds(word, point):
  """True if Ht(Z) is at least both boundary heights of the cylinder of word, for Z in that cylinder."""
  word = tuple(word)
  if not any(stream is not None and stream.prefix(len(word)) == word
             for stream in romik.expandRational(point)):
    raise romik.InvalidDigitError('%s does not lie in the cylinder of %s' % (point, word))
  first, second = romik.cylinderBoundaries(word)
  return height(point) >= max(first.c, second.c)


def sharedDepth(target, point):
  """The length of the longest prefix of target shared by an expansion of point."""
  depth = 0
  for stream in romik.expandRational(point):
    if stream is None:
      continue
    length = 0
    while stream.digitAt(length) == target.digitAt(length):
      length += 1
    depth = max(depth, length)
  return depth


def boundaryDominates(target, record):
  """True if the record is a boundary point, or a boundary of the deepest cylinder of target holding
  its approximant (or of the next cylinder down) comes at least as close."""
  if record.boundary is not None:
    return True
  depth = sharedDepth(target, record.approximant)
  candidates = romik.cylinderBoundaries(target.prefix(depth)) + romik.cylinderBoundaries(target.prefix(depth + 1))
  return any(arith.compareValues(deltaSq(target, point), record.deltaSq) <= 0 for point in candidates)



class RayTarget(object):
  """A direction z = alpha + beta*omega with alpha^2 + alpha*beta + beta^2 = 1, alpha, beta >= 0.

  The coordinates are mpmath values at the given precision; point holds the exact rational
  point when there is one.
  """

  __slots__ = ('alpha', 'beta', 'point', 'precisionBits')

  def __init__(self, alpha, beta, point=None, precisionBits=arith.DEFAULT_PRECISION_BITS):
    self.precisionBits = precisionBits
    self.point = point
    with mpmath.workprec(precisionBits):
      self.alpha = _mpfOf(alpha, precisionBits)
      self.beta = _mpfOf(beta, precisionBits)
      residue = self.alpha * self.alpha + self.alpha * self.beta + self.beta * self.beta - 1
      if self.alpha < 0 or self.beta < 0 or abs(residue) > COORDINATE_TOLERANCE:
        raise romik.NotOnCurveError('(%s, %s) is not a first-sextant point of the curve'
                                    % (mpmath.nstr(self.alpha, 12), mpmath.nstr(self.beta, 12)))


  @classmethod
  def fromStream(cls, stream, precisionBits=arith.DEFAULT_PRECISION_BITS):
    """The direction of the point with the given expansion."""
    alpha, beta = romik.pointOfStream(stream)
    point = None
    if stream.isRational():
      point = CirclePoint.fromCoordinates(Fraction(alpha.x.r), Fraction(beta.x.r))
    return cls(alpha, beta, point, precisionBits)


  @classmethod
  def fromPoint(cls, point, precisionBits=arith.DEFAULT_PRECISION_BITS):
    """The direction of a rational point."""
    return cls(point.x, point.y, point, precisionBits)


  @classmethod
  def fromCoordinates(cls, alpha, beta, precisionBits=arith.DEFAULT_PRECISION_BITS):
    """The direction through exact or floating coordinates."""
    point = None
    if isinstance(alpha, (int, Fraction)) and isinstance(beta, (int, Fraction)):
      point = CirclePoint.fromCoordinates(alpha, beta)
    return cls(alpha, beta, point, precisionBits)


  def __repr__(self):
    return 'RayTarget(%s, %s)' % (mpmath.nstr(self.alpha, 15), mpmath.nstr(self.beta, 15))


def _mpfOf(value, precisionBits):
  """mpmath value of an exact or floating coordinate."""
  if isinstance(value, (float, mpmath.mpf)):
    return mpmath.mpf(value)
  return arith.toMpf(value, precisionBits)


def _rayDistance(target, a, b):
  """Distance from a + b*omega to the half-line through the target."""
  with mpmath.workprec(target.precisionBits):
    half = mpmath.mpf(1) / 2
    root = mpmath.sqrt(3) / 2
    x, y = a + b * half, b * root
    dx, dy = target.alpha + target.beta * half, target.beta * root
    if x * dx + y * dy <= 0:
      return mpmath.sqrt(x * x + y * y)
    return abs(x * dy - y * dx)


def rayDistance(target, pair, requireEisenstein=True):
  """The Euclidean distance from a + b*omega to the half-line through the target, as a float."""
  a, b = [int(value) for value in pair]
  if a < 0 or b < 0:
    raise ValueError('pair coordinates must be nonnegative, got (%d, %d)' % (a, b))
  norm = a * a + a * b + b * b
  if requireEisenstein and math.isqrt(norm) ** 2 != norm:
    raise NotEisensteinPairError('(%d, %d) is not an Eisenstein pair: a^2 + ab + b^2 = %d' % (a, b, norm))
  return float(_rayDistance(target, a, b))


def pairScan(target, maxNorm, threads=1):
  """Smallest ray distance over primitive Eisenstein pairs with |a + b*omega| in [sqrt(maxNorm), maxNorm]."""
  triples = romik.enumerateTriples(maxNorm, threads)
  if target.point is not None and target.point in set(triples):
    return PairScanResult(0.0, target.point, True)
  lowest = math.isqrt(maxNorm)
  best, witness = None, None
  for point in triples:
    if point.c < lowest:
      continue
    distance = _rayDistance(target, point.a, point.b)
    if best is None or distance < best:
      best, witness = distance, point
  if witness is None:
    raise InsufficientDepthError('no pairs with norms in [%d, %d]' % (lowest, maxNorm))
  return PairScanResult(float(best), witness, False)


PlotPoint = collections.namedtuple('PlotPoint', 'a b c x y')

PairPlot = collections.namedtuple('PairPlot', 'maxNorm direction points')


def pairPlot(target, maxNorm, threads=1):
  """Eisenstein pairs a + b*omega with norm at most maxNorm placed in the plane, with the ray direction."""
  root = math.sqrt(3) / 2
  points = tuple(PlotPoint(point.a, point.b, point.c, point.a + point.b / 2.0, point.b * root)
                 for point in romik.enumerateTriples(maxNorm, threads))
  alpha, beta = float(target.alpha), float(target.beta)
  return PairPlot(maxNorm, (alpha + beta / 2.0, beta * root), points)
