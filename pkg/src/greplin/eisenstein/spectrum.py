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

"""Lagrange numbers of doubly infinite digit sequences and the top of the spectrum.

A section P*|Q of a doubly infinite sequence splits it into a reversed past P and a future Q.
Its value is ||P^v|| + ||Q|| with P^ the past with digits 1 and 5 swapped, and the Lagrange
number of the sequence is the supremum over sections of the larger of that value and the
value of the mirrored section.
"""

from fractions import Fraction
from greplin.eisenstein import approx, arith, romik, util
from greplin.eisenstein.arith import DIGITS, SQRT3, Surd
from greplin.eisenstein.romik import DigitStream, INFINITY

import collections
import logging
import re

log = logging.getLogger(__name__)



class NotReducedError(arith.EisensteinError):
  """A word containing the digit 1 or 5 where only 2, 3, 4 are allowed."""



class UnsupportedShapeError(arith.EisensteinError):
  """A doubly infinite word the exact evaluator cannot handle."""



LAGRANGE_THRESHOLD = Surd(4 / SQRT3)

LAGRANGE_THRESHOLD_SQ = Fraction(16, 3)

FORBIDDEN_FACTORS = ((1,), (5,), (2, 4), (4, 2), (2, 3, 4), (4, 3, 2), (3, 3))

MAX_NECKLACE_PERIOD = 12



def minimalRotation(word):
  """The lexicographically smallest rotation of word."""
  word = tuple(word)
  return min(word[index:] + word[:index] for index in range(len(word))) if word else word


def _tailText(word):
  """'2inf' or '(23)inf'."""
  digits = ''.join(str(d) for d in word)
  return '%sinf' % digits if len(word) == 1 else '(%s)inf' % digits



class BiWord(object):
  """A doubly infinite word ...LLL core RRR..., up to shifts.

  Periodic words have an empty core and equal tails, stored as the primitive root in its
  smallest rotation.
  """

  __slots__ = ('left', 'core', 'right')

  def __init__(self, left, core, right):
    left = romik.primitiveRoot(romik._checkedWord(left))
    core = romik._checkedWord(core)
    right = romik.primitiveRoot(romik._checkedWord(right))
    if not left or not right:
      raise romik.ParseError('both tails of a doubly infinite word must be nonempty')
    changed = True
    while changed and core:
      changed = False
      if core[0] == left[0]:
        left = left[1:] + left[:1]
        core = core[1:]
        changed = True
      if core and core[-1] == right[-1]:
        right = right[-1:] + right[:-1]
        core = core[:-1]
        changed = True
    if not core and left == right:
      left = right = minimalRotation(left)
    self.left, self.core, self.right = left, core, right


  @classmethod
  def periodic(cls, word):
    """The periodic word ^inf(word)^inf."""
    word = tuple(word)
    if not word:
      raise romik.ParseError('a periodic word needs at least one digit')
    return cls(word, (), word)


  @classmethod
  def spliced(cls, left, core, right):
    """^inf(left) core (right)^inf."""
    return cls(left, core, right)


  def isPeriodic(self):
    """True if the word has no core and equal tails."""
    return not self.core and self.left == self.right


  def isReduced(self):
    """True if no digit is 1 or 5."""
    return romik.isReduced(self.left + self.core + self.right)


  def digitAt(self, position):
    """The digit at a position; the core starts at 0, the left tail ends at -1."""
    if 0 <= position < len(self.core):
      return self.core[position]
    if position >= len(self.core):
      return self.right[(position - len(self.core)) % len(self.right)]
    return self.left[position % len(self.left)]


  def future(self, cut):
    """Q for the section whose first future digit sits at cut."""
    end = len(self.core)
    if cut >= end:
      offset = (cut - end) % len(self.right)
      return DigitStream((), self.right[offset:] + self.right[:offset])
    head = tuple(self.digitAt(position) for position in range(cut, end))
    return DigitStream(head, self.right)


  def past(self, cut):
    """P, the reversed past, for the section cut before position cut."""
    size = len(self.left)
    if cut <= 0:
      return DigitStream((), tuple(self.left[(cut - 1 - j) % size] for j in range(size)))
    head = tuple(self.digitAt(position) for position in range(cut - 1, -1, -1))
    return DigitStream(head, tuple(self.left[(-1 - j) % size] for j in range(size)))


  def vee(self):
    """Digits mapped by d -> 6 - d."""
    return BiWord(romik.veeWord(self.left), romik.veeWord(self.core), romik.veeWord(self.right))


  def hat(self):
    """Digits 1 and 5 swapped."""
    return BiWord(romik.hatWord(self.left), romik.hatWord(self.core), romik.hatWord(self.right))


  def star(self):
    """The word read backwards."""
    return BiWord(self.right[::-1], self.core[::-1], self.left[::-1])


  def toText(self):
    """'(223)inf' for periodic words, '2inf.3.2inf' for spliced ones."""
    if self.isPeriodic():
      return _tailText(self.left)
    return '%s.%s.%s' % (_tailText(self.left), ''.join(str(d) for d in self.core), _tailText(self.right))


  def __eq__(self, other):
    if not isinstance(other, BiWord):
      return NotImplemented
    return (self.left, self.core, self.right) == (other.left, other.core, other.right)


  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result


  def __hash__(self):
    return hash((self.left, self.core, self.right))


  def __repr__(self):
    return 'BiWord(%r, %r, %r)' % (self.left, self.core, self.right)


  def __str__(self):
    return self.toText()


_TAIL_PATTERN = re.compile(r'^(?:\(([1-5]+)\)|([1-5]))inf$')


def _parseTail(text, original):
  """Parses one tail such as '2inf' or '(23)inf'."""
  match = _TAIL_PATTERN.match(text)
  if not match:
    raise romik.ParseError('cannot parse tail %r of %r' % (text, original))
  return tuple(int(d) for d in (match.group(1) or match.group(2)))


def parseBiWord(text):
  """Parses '3inf', '(223)inf', '223', '2inf.3.2inf' or the written form '^∞232^∞'."""
  cleaned = re.sub(r'[\s,\[\]]', '', text.replace(u'^∞', 'inf').replace(u'∞', 'inf').replace('^inf', 'inf'))
  if '.' in cleaned:
    parts = cleaned.split('.')
    if len(parts) == 2:
      parts = [parts[0], '', parts[1]]
    if len(parts) != 3 or not re.match(r'^[1-5]*$', parts[1]):
      raise romik.ParseError('cannot parse doubly infinite word %r' % text)
    return BiWord.spliced(_parseTail(parts[0], text), tuple(int(d) for d in parts[1]), _parseTail(parts[2], text))
  match = re.match(r'^inf([1-5])([1-5]*)([1-5])inf$', cleaned)
  if match:
    return BiWord.spliced((int(match.group(1)),), tuple(int(d) for d in match.group(2)), (int(match.group(3)),))
  if re.match(r'^[1-5]+$', cleaned):
    return BiWord.periodic(int(d) for d in cleaned)
  return BiWord.periodic(_parseTail(cleaned, text))



class LagrangeResult(collections.namedtuple('LagrangeResult', 'value cut mirrored certified windowValues')):
  """L(T) with the maximizing section (cut position, whether the mirrored section won).

  For spliced words certified says the tail bound stayed below the window maximum; windowValues
  lists (cut, value) for every cut evaluated exactly.
  """

  __slots__ = ()

  def valueSq(self):
    """L(T)^2, or INFINITY."""
    return INFINITY if self.value is INFINITY else self.value * self.value



SpectrumEntry = collections.namedtuple('SpectrumEntry', 'k lSq deltaSq witness')

NecklaceRecord = collections.namedtuple('NecklaceRecord', 'word value qualifies violations')



def _addNorms(first, second):
  """Sum on [0, inf]."""
  if first is INFINITY or second is INFINITY:
    return INFINITY
  return first + second


def _maxNorm(first, second):
  """Larger of two points of [0, inf]; the first wins ties."""
  return second if romik.compareNorms(second, first) > 0 else first


def lagrangeSection(past, future):
  """L(P*|Q) = ||P^v|| + ||Q||; raises MixedFieldError when the two norms live in different fields."""
  return _addNorms(romik.normOfStream(past.hat().vee()), romik.normOfStream(future))


def sectionValue(past, future):
  """max(L(P*|Q), L((P^v)*|Q^v)), with a flag telling whether the mirrored section won."""
  direct = lagrangeSection(past, future)
  mirrored = lagrangeSection(past.vee(), future.vee())
  if romik.compareNorms(mirrored, direct) > 0:
    return mirrored, True
  return direct, False


def _requireReduced(word):
  """Rejects words with a 1 or 5."""
  if not romik.isReduced(word):
    raise NotReducedError('%s contains the digit 1 or 5' % ''.join(str(d) for d in word))


def lagrangePeriodicSq(word):
  """Delta_w / c_w^2 for the section of ^inf w^inf cut in front of w, w reduced."""
  word = tuple(word)
  _requireReduced(word)
  matrix = romik.wordMatrix(word)
  return matrix.discriminant().r / (matrix.c * matrix.c).r


def periodicLagrangeSq(word):
  """Exact L^2 of ^inf w^inf for reduced w: Delta over the smallest squared off-diagonal entry of any rotation."""
  if isinstance(word, BiWord):
    if not word.isPeriodic():
      raise UnsupportedShapeError('%s is not periodic' % word)
    word = word.left
  word = tuple(word)
  _requireReduced(word)
  smallest = None
  discriminant = None
  for index in range(len(word)):
    matrix = romik.wordMatrix(word[index:] + word[:index])
    discriminant = matrix.discriminant().r
    for entry in (matrix.b, matrix.c):
      square = (entry * entry).r
      if smallest is None or square < smallest:
        smallest = square
  return discriminant / smallest


def _periodicLagrange(word):
  """Exact maximum over every rotation and both mirror variants."""
  best = None
  for cut in range(len(word.left)):
    value, mirrored = sectionValue(word.past(cut), word.future(cut))
    if best is None or romik.compareNorms(value, best[0]) > 0:
      best = (value, cut, mirrored)
  return LagrangeResult(best[0], best[1], best[2], True, ())


def _pastPrefixBound(prefix, future):
  """Upper bound of a tail section whose reversed past starts with prefix."""
  direct = _addNorms(romik.cylinderInterval(romik.veeWord(romik.hatWord(prefix)))[1], romik.normOfStream(future))
  mirrored = _addNorms(romik.cylinderInterval(romik.hatWord(prefix))[1], romik.normOfStream(future.vee()))
  return _maxNorm(direct, mirrored)


def _futurePrefixBound(prefix, past):
  """Upper bound of a tail section whose future starts with prefix."""
  direct = _addNorms(romik.normOfStream(past.hat().vee()), romik.cylinderInterval(prefix)[1])
  mirrored = _addNorms(romik.normOfStream(past.vee().hat().vee()), romik.cylinderInterval(romik.veeWord(prefix))[1])
  return _maxNorm(direct, mirrored)


def _checkSplicedShape(word):
  """Window sums need both tails in one quadratic field."""
  fields = []
  for tail in (word.left, word.right):
    matrix = romik.wordMatrix(tail)
    if matrix.c != 0:
      fields.append(arith.sqrtOf(matrix.discriminant().r))
  if len(fields) == 2 and not arith.sameField(fields[0], fields[1]):
    raise UnsupportedShapeError('the tails of %s generate different fields' % word)


def _splicedLagrange(word, window):
  """Exact maximum over cuts within window of the core, plus a cylinder bound on everything further out."""
  _checkSplicedShape(word)
  end = len(word.core)
  windowValues = []
  best = None
  for cut in range(-window, end + window + 1):
    value, mirrored = sectionValue(word.past(cut), word.future(cut))
    windowValues.append((cut, value))
    if best is None or romik.compareNorms(value, best[0]) > 0:
      best = (value, cut, mirrored)

  bounds = []
  for phase in range(len(word.right)):
    cut = end + window + 1 + phase
    prefix = tuple(word.digitAt(cut - 1 - j) for j in range(window + 1))
    bounds.append(_pastPrefixBound(prefix, word.future(cut)))
  for phase in range(len(word.left)):
    cut = -window - 1 - phase
    prefix = tuple(word.digitAt(cut + j) for j in range(window + 1))
    bounds.append(_futurePrefixBound(prefix, word.past(cut)))

  certified = all(romik.compareNorms(bound, best[0]) <= 0 for bound in bounds)
  if not certified:
    log.warning('Tail bound for %s exceeds the window maximum at window %d', word, window)
  return LagrangeResult(best[0], best[1], best[2], certified, tuple(windowValues))


def lagrangeBiinfinite(word, window=16):
  """L(T) for a periodic or spliced doubly infinite word."""
  if not isinstance(word, BiWord):
    word = parseBiWord(word)
  if word.isPeriodic():
    return _periodicLagrange(word)
  return _splicedLagrange(word, window)


def _factorsOf(word, cyclic):
  """Forbidden factors occurring in word, read cyclically if asked."""
  longest = max(len(factor) for factor in FORBIDDEN_FACTORS)
  text = word * (longest // len(word) + 2) if cyclic else word
  found = []
  for factor in FORBIDDEN_FACTORS:
    for start in range(len(word)):
      if text[start:start + len(factor)] == factor:
        found.append(''.join(str(d) for d in factor))
        break
  return found


def isAdmissibleCandidate(word):
  """(bool, violations): whether the word avoids every forbidden factor; 33 is allowed only in ^inf 3^inf."""
  if not isinstance(word, BiWord):
    word = BiWord.periodic(word) if isinstance(word, (tuple, list)) else parseBiWord(word)
  if word.isPeriodic():
    violations = _factorsOf(word.left, True)
  else:
    size = max(len(factor) for factor in FORBIDDEN_FACTORS)
    copies = size // min(len(word.left), len(word.right)) + 2
    violations = _factorsOf(word.left * copies + word.core + word.right * copies, False)
  if word.isPeriodic() and word.left == (3,):
    violations = [factor for factor in violations if factor != '33']
  return not violations, violations


def deltaKSq(k):
  """delta_k^2: 1/4, 3/13, then 3U^2 / (4(4U^2 - 1)) with U = U_{2k-3}."""
  if k < 1:
    raise approx.IndexOutOfRangeError('spectrum index must be at least 1, got %d' % k)
  if k == 1:
    return Fraction(1, 4)
  if k == 2:
    return Fraction(3, 13)
  u = arith.lucasU(2 * k - 3)
  return Fraction(3 * u * u, 4 * (4 * u * u - 1))


def spectrumWitness(k):
  """^inf 3^inf, ^inf 2^inf, then the periodic word (3 2^(2(k-2)))."""
  if k < 1:
    raise approx.IndexOutOfRangeError('spectrum index must be at least 1, got %d' % k)
  if k == 1:
    return BiWord.periodic((3,))
  if k == 2:
    return BiWord.periodic((2,))
  return BiWord.periodic((3,) + (2,) * (2 * (k - 2)))


def spectrumBelow(count):
  """The first count entries of the spectrum below 4/sqrt(3), each checked against its witness."""
  entries = []
  for k in range(1, count + 1):
    witness = spectrumWitness(k)
    lSq = periodicLagrangeSq(witness)
    deltaSq = deltaKSq(k)
    assert lSq * deltaSq == 1, 'witness of delta_%d gives L^2 = %s' % (k, lSq)
    entries.append(SpectrumEntry(k, lSq, deltaSq, witness))
  return entries


def lyndonWords(alphabet, maxLength):
  """Lyndon words over alphabet with length at most maxLength, in lexicographic order."""
  alphabet = tuple(sorted(alphabet))
  size = len(alphabet)
  indices = [-1]
  while indices:
    indices[-1] += 1
    yield tuple(alphabet[i] for i in indices)
    length = len(indices)
    while len(indices) < maxLength:
      indices.append(indices[len(indices) - length])
    while indices and indices[-1] == size - 1:
      indices.pop()


def necklaceRecord(word):
  """Evaluates L for one periodic word and lists the forbidden factors it contains.

  The factors are an annotation only: whether a word qualifies depends on L alone.
  """
  value = lagrangeBiinfinite(BiWord.periodic(word)).value
  violations = isAdmissibleCandidate(tuple(word))[1]
  return NecklaceRecord(word, value, romik.compareNorms(value, LAGRANGE_THRESHOLD) <= 0, tuple(violations))


def enumeratePeriodicSpectrum(maxPeriod, threads=1):
  """Records for every Lyndon word over 1..5 up to maxPeriod, and the words with L <= 4/sqrt(3)."""
  if not 1 <= maxPeriod <= MAX_NECKLACE_PERIOD:
    raise ValueError('maxPeriod must lie in 1..%d, got %d' % (MAX_NECKLACE_PERIOD, maxPeriod))
  words = list(lyndonWords(DIGITS, maxPeriod))
  records = util.parallelMap(necklaceRecord, words, threads)
  qualifying = [record.word for record in records if record.qualifies]
  log.info('Evaluated %d necklaces up to period %d, %d qualify', len(records), maxPeriod, len(qualifying))
  return records, qualifying


def admissibleFamily(maxPeriod):
  """The words the characterization predicts below 4/sqrt(3): 2, 3, 4, (3 2^2k) and (3 4^2k), as Lyndon words."""
  family = [(2,), (3,), (4,)]
  k = 1
  while 2 * k + 1 <= maxPeriod:
    family.append(minimalRotation((3,) + (2,) * (2 * k)))
    family.append(minimalRotation((3,) + (4,) * (2 * k)))
    k += 1
  return sorted(family)
