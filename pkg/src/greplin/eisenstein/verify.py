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

"""Self-checks run by 'eisenstein verify'.

Each check raises CheckFailedError with a description of the first mismatch, or returns a
short summary of what it covered. The default suite runs in seconds; the deep suite adds
the brute-force boundary scan and the period 6 characterization.
"""

from fractions import Fraction
from greplin.eisenstein import approx, arith, formats, romik, spectrum
from greplin.eisenstein.arith import SQRT3, Surd
from greplin.eisenstein.romik import DigitStream

import collections
import logging
import math
import random

log = logging.getLogger(__name__)



class CheckFailedError(arith.EisensteinError):
  """A verification check found a mismatch."""



CheckResult = formats.registerRecord(collections.namedtuple('CheckResult', 'name passed detail'))

SpectrumRow = formats.registerRecord(collections.namedtuple('SpectrumRow', 'k deltaSq delta decimal printed'))

EXPECTED_DELTA_SQ = (Fraction(1, 4), Fraction(3, 13), Fraction(25, 133), Fraction(11881, 63364),
                     Fraction(1413721, 7539844))

# Reference digits of delta_1 .. delta_5 are usually quoted cut off, not rounded.
PRINTED_DECIMALS = ('0.5000000000', '0.4803844614', '0.4335549847', '0.4330172576', '0.4330127401')

EXPECTED_DECIMALS = ('0.5000000000', '0.4803844614', '0.4335549848', '0.4330172577', '0.4330127402')

THREES = DigitStream((), (3,))


def _require(condition, message, *args):
  """Raises CheckFailedError unless condition holds."""
  if not condition:
    raise CheckFailedError(message % args)


def _randomStreams(count, maxPreperiod, maxPeriod, seed=42):
  """Reproducible reduced streams."""
  generator = random.Random(seed)
  streams = []
  for _ in range(count):
    preperiod = [generator.choice((2, 3, 4)) for _ in range(generator.randint(0, maxPreperiod))]
    period = [generator.choice((2, 3, 4)) for _ in range(generator.randint(1, maxPeriod))]
    streams.append(DigitStream(preperiod, period))
  return streams


def spectrumTable(count=5, places=10):
  """delta_1 .. delta_count, exact, correctly rounded and cut off at places."""
  rows = []
  for k in range(1, count + 1):
    deltaSq = spectrum.deltaKSq(k)
    delta = arith.sqrtOf(deltaSq)
    rows.append(SpectrumRow(k, deltaSq, delta, formats.decimal(delta, places),
                            arith.toDecimal(delta, places, roundDown=True)))
  return rows


def checkConstants(threads=1):
  """The matrix constants re-derive from H and U_d."""
  try:
    arith.checkConstants()
  except arith.SelfCheckError as e:
    raise CheckFailedError(str(e))
  return 'H, M_d, U_d and N_d consistent'


def checkDeltaTable(threads=1):
  """The first five spectrum values, exact, rounded and as printed."""
  rows = spectrumTable(len(EXPECTED_DELTA_SQ))
  for row, exact, rounded, printed in zip(rows, EXPECTED_DELTA_SQ, EXPECTED_DECIMALS, PRINTED_DECIMALS):
    _require(row.deltaSq == exact, 'delta_%d^2 = %s, expected %s', row.k, row.deltaSq, exact)
    _require(row.decimal == rounded, 'delta_%d = %s, expected %s', row.k, row.decimal, rounded)
    _require(row.printed == printed, 'delta_%d printed as %s, expected %s', row.k, row.printed, printed)
  return 'delta_1 .. delta_5 match'


def checkAccumulation(threads=1, count=15):
  """delta_k decreases to sqrt(3)/4."""
  limit = Surd(SQRT3 / 4)
  tolerance = Fraction(1, 10 ** 9)
  for k in range(1, count):
    _require(spectrum.deltaKSq(k + 1) < spectrum.deltaKSq(k), 'delta_%d does not decrease', k)
  for k in range(10, count + 1):
    gap = abs(arith.sqrtOf(spectrum.deltaKSq(k)) - limit)
    _require(arith.compareValues(gap, tolerance) < 0, 'delta_%d is %s from sqrt(3)/4', k, formats.decimal(gap, 12))
  return 'decreasing through k = %d, within 1e-9 of sqrt(3)/4 from k = 10' % count


def checkTreeSieve(threads=1, maxC=2000):
  """The Berggren forest and the brute-force sieve agree."""
  tree = romik.enumerateTriples(maxC, threads)
  sieve = romik.sieveTriples(maxC)
  _require(len(tree) == len(sieve), 'tree has %d triples, sieve %d', len(tree), len(sieve))
  _require(tree == sieve, 'tree and sieve differ below %d', maxC)
  return '%d triples up to %d' % (len(tree), maxC)


def checkPerron(threads=1, count=50):
  """Perron's formula against the direct evaluation for periodic reduced streams."""
  for target in _randomStreams(count, 0, 4):
    for k in range(1, 13):
      approximant = romik.cylinderBoundaries(target.prefix(k))[0]
      expected = approx.deltaSq(target, approximant)
      _require(approx.perronDelta(target, k).deltaSq == expected, 'Perron mismatch for %s at k = %d', target, k)
  return '%d streams, k <= 12' % count


def checkSections(threads=1):
  """Exact section values and the spliced word at 4/sqrt(3)."""
  _require(spectrum.lagrangePeriodicSq((2, 4)) == 8, 'L^2 of the section of (24) is not 8')
  value = spectrum.lagrangeSection(DigitStream((), (5, 1)), DigitStream((), (1, 5)))
  _require(value == arith.sqrtOf(7), 'section of (15) is %s, expected sqrt(7)', value)
  result = spectrum.lagrangeBiinfinite('2inf.3.2inf')
  _require(result.certified, 'tail bound of 2inf.3.2inf not certified')
  _require(result.value == spectrum.LAGRANGE_THRESHOLD, 'L(2inf.3.2inf) = %s', result.value)
  return 'L(24) = sqrt(8), L(15) = sqrt(7), L(2inf.3.2inf) = 4/sqrt(3)'


def checkHurwitz(threads=1, count=20, maxC=10 ** 4):
  """Window estimates stay below 0.55, and [3^inf] sits at 1/2."""
  for target in _randomStreams(count, 4, 4):
    estimate = approx.deltaLiminfEstimate(target, maxC)[0]
    _require(estimate <= 0.55, 'estimate %.6f for %s exceeds 0.55', estimate, target)
  estimate = approx.deltaLiminfEstimate(THREES, 10 ** 6)[0]
  _require(abs(estimate - 0.5) <= 1e-2, 'estimate for [3^inf] is %.6f', estimate)
  return '%d streams at %d; [3^inf] -> %.6f' % (count, maxC, estimate)


def _rayTargets(count):
  """Tails of the first spectrum witnesses, then random periodic streams."""
  witnesses = [DigitStream((), entry.witness.left) for entry in spectrum.spectrumBelow(5)]
  return witnesses + _randomStreams(count, 3, 3, seed=7)


def _rayDistanceOf(record):
  """delta * sqrt(1 - delta^2 / 4c^2) for one boundary witness."""
  delta = record.delta()
  return delta * math.sqrt(1 - delta * delta / (4.0 * record.height ** 2))


def checkIsometry(threads=1, count=15, maxC=10 ** 4):
  """Ray distances of the boundary witnesses equal delta * sqrt(1 - delta^2 / 4c^2)."""
  targets = _rayTargets(count)
  for target in targets:
    ray = approx.RayTarget.fromStream(target)
    for record in approx.deltaLiminfEstimate(target, maxC)[1][:5]:
      expected = _rayDistanceOf(record)
      measured = approx.rayDistance(ray, (record.approximant.a, record.approximant.b))
      _require(abs(expected - measured) < 1e-6, 'ray distance %.9f != %.9f for %s at %s',
               measured, expected, target, record.approximant)
  return '%d targets' % len(targets)


def checkPairScan(threads=1, count=15, maxC=10 ** 4):
  """The closest pair to a ray sits at the boundary witness with the smallest ray distance."""
  targets = _rayTargets(count)
  for target in targets:
    scanned = approx.pairScan(approx.RayTarget.fromStream(target), maxC, threads).estimate
    estimated = min(_rayDistanceOf(record) for record in approx.deltaLiminfEstimate(target, maxC)[1])
    _require(abs(scanned - estimated) < 1e-6, 'pair scan %.9f != boundary estimate %.9f for %s',
             scanned, estimated, target)
  return '%d targets up to %d' % (len(targets), maxC)


def checkBoundaryOptimality(threads=1, count=100, maxC=5000):
  """Brute-force scans never beat the cylinder boundaries."""
  for target in _randomStreams(count, 4, 4, seed=11):
    best = approx.bestApproxScan(target, maxC, threads)[0]
    _require(approx.boundaryDominates(target, best), '%s beats every boundary of %s', best.approximant, target)
  return '%d streams up to %d' % (count, maxC)


def checkCharacterization(threads=1, maxPeriod=6):
  """Exactly the predicted necklaces lie at or below 4/sqrt(3)."""
  records, qualifying = spectrum.enumeratePeriodicSpectrum(maxPeriod, threads)
  expected = spectrum.admissibleFamily(maxPeriod)
  _require(sorted(qualifying) == expected, 'qualifying necklaces %s, expected %s', sorted(qualifying), expected)
  for record in records:
    if record.violations:
      _require(romik.compareNorms(record.value, spectrum.LAGRANGE_THRESHOLD) > 0,
               '%s has a forbidden factor but L = %s', record.word, record.value)
  return '%d necklaces up to period %d, %d qualify' % (len(records), maxPeriod, len(qualifying))


CHECKS = (
  ('constants', checkConstants),
  ('delta-table', checkDeltaTable),
  ('accumulation', checkAccumulation),
  ('tree-sieve', checkTreeSieve),
  ('perron', checkPerron),
  ('sections', checkSections),
  ('hurwitz', checkHurwitz),
  ('isometry', checkIsometry),
  ('pair-scan', checkPairScan),
)

DEEP_CHECKS = (
  ('boundary-optimality', checkBoundaryOptimality),
  ('characterization', checkCharacterization),
)


def runChecks(deep=False, threads=1):
  """Runs the suite and returns one CheckResult per check.

  Each check logs how many comparisons had to fall back to interval arithmetic.
  """
  results = []
  for name, check in CHECKS + (DEEP_CHECKS if deep else ()):
    log.debug('Running check %s', name)
    arith.INTERVAL_FALLBACKS.reset()
    try:
      results.append(CheckResult(name, True, check(threads)))
    except arith.EisensteinError as e:
      log.warning('Check %s failed: %s', name, e)
      results.append(CheckResult(name, False, str(e)))
    log.info('Check %s used %d interval comparisons', name, arith.INTERVAL_FALLBACKS.reset())
  return results
