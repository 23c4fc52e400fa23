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

"""Tests for Lagrange numbers and the spectrum below 4/sqrt(3)."""

from fractions import Fraction
from greplin.eisenstein import approx, arith, romik, spectrum
from greplin.eisenstein.arith import SQRT3, Surd
from greplin.eisenstein.romik import DigitStream
from greplin.eisenstein.spectrum import BiWord

import random
import unittest


SPLICED = BiWord.spliced((2,), (3,), (2,))



class BiWordTest(unittest.TestCase):
  """Tests for doubly infinite words."""

  def testNormalization(self):
    """Core digits that continue a tail are absorbed."""
    self.assertEqual(SPLICED, BiWord.spliced((2,), (2, 3, 2, 2), (2,)))
    self.assertEqual(SPLICED, BiWord.spliced((2, 2), (3,), (2, 2, 2)))
    self.assertFalse(SPLICED.isPeriodic())
    self.assertTrue(BiWord.spliced((2, 3), (2,), (3, 2)).isPeriodic())
    self.assertEqual(BiWord.periodic((2, 3)), BiWord.spliced((2, 3), (2,), (3, 2)))
    self.assertEqual(BiWord.periodic((2, 2, 3)), BiWord.periodic((3, 2, 2, 3, 2, 2)))


  def testDigits(self):
    """Positions run through the left tail, the core and the right tail."""
    word = BiWord.spliced((4,), (3, 2), (3,))
    self.assertEqual([4, 4, 3, 2, 3, 3], [word.digitAt(position) for position in range(-2, 4)])
    self.assertEqual(DigitStream((3, 2), (3,)), word.future(0))
    self.assertEqual(DigitStream((), (4,)), word.past(0))
    self.assertEqual(DigitStream((2, 3), (4,)), word.past(2))
    self.assertEqual(DigitStream((), (3,)), word.future(5))


  def testSymmetries(self):
    """Mirror, hat and reversal act on every part."""
    word = BiWord.spliced((4,), (3, 2), (3,))
    self.assertEqual(BiWord.spliced((2,), (3, 4), (3,)), word.vee())
    self.assertEqual(BiWord.spliced((3,), (2, 3), (4,)), word.star())
    self.assertEqual(BiWord.periodic((1, 3)), BiWord.periodic((5, 3)).hat())


  def testParse(self):
    """All accepted spellings."""
    self.assertEqual(BiWord.periodic((3,)), spectrum.parseBiWord('3inf'))
    self.assertEqual(BiWord.periodic((2, 2, 3)), spectrum.parseBiWord('(223)inf'))
    self.assertEqual(BiWord.periodic((2, 2, 3)), spectrum.parseBiWord('322'))
    self.assertEqual(SPLICED, spectrum.parseBiWord('2inf.3.2inf'))
    self.assertEqual(SPLICED, spectrum.parseBiWord(u'^∞232^∞'))
    self.assertEqual(BiWord.spliced((2,), (), (4,)), spectrum.parseBiWord('2inf.4inf'))
    self.assertRaises(romik.ParseError, spectrum.parseBiWord, 'x')
    self.assertRaises(romik.ParseError, spectrum.parseBiWord, '2inf.36.2inf')


  def testText(self):
    """Text forms parse back."""
    self.assertEqual('2inf.3.2inf', str(SPLICED))
    self.assertEqual('(223)inf', str(BiWord.periodic((3, 2, 2))))
    self.assertEqual('4inf', str(BiWord.periodic((4, 4))))
    for word in (SPLICED, BiWord.periodic((2, 4, 3)), BiWord.spliced((2, 3), (4,), (3,))):
      self.assertEqual(word, spectrum.parseBiWord(word.toText()))



class AdmissibleTest(unittest.TestCase):
  """Tests for the forbidden factor screen."""

  def testPeriodic(self):
    """Factors are read cyclically."""
    self.assertEqual((True, []), spectrum.isAdmissibleCandidate((3,)))
    self.assertEqual((True, []), spectrum.isAdmissibleCandidate((2, 2, 3)))
    self.assertEqual((False, ['24', '42']), spectrum.isAdmissibleCandidate((2, 4)))
    self.assertEqual((False, ['33']), spectrum.isAdmissibleCandidate((2, 3, 3)))
    self.assertEqual((False, ['42', '234']), spectrum.isAdmissibleCandidate((2, 3, 4)))
    self.assertEqual((False, ['1']), spectrum.isAdmissibleCandidate((1, 3)))


  def testSpliced(self):
    """Spliced words are screened across both junctions."""
    self.assertEqual((True, []), spectrum.isAdmissibleCandidate(SPLICED))
    self.assertEqual((False, ['33']), spectrum.isAdmissibleCandidate('2inf.33.2inf'))
    self.assertEqual((False, ['24']), spectrum.isAdmissibleCandidate('2inf.4inf'))



class LagrangeTest(unittest.TestCase):
  """Tests for exact Lagrange numbers."""

  def testPeriodicSection(self):
    """Delta over c squared for the section in front of the word."""
    self.assertEqual(4, spectrum.lagrangePeriodicSq([3]))
    self.assertEqual(Fraction(13, 3), spectrum.lagrangePeriodicSq([2]))
    self.assertEqual(8, spectrum.lagrangePeriodicSq([2, 4]))
    self.assertRaises(spectrum.NotReducedError, spectrum.lagrangePeriodicSq, [1, 2])


  def testSections(self):
    """Single section values."""
    self.assertEqual(Surd(0, 1, 7), spectrum.lagrangeSection(DigitStream((), (5, 1)), DigitStream((), (1, 5))))
    self.assertEqual(Surd(4 / SQRT3), spectrum.lagrangeSection(DigitStream((3,), (2,)), DigitStream((), (2,))))
    self.assertEqual(2, spectrum.lagrangeSection(DigitStream((), (3,)), DigitStream((), (3,))))
    self.assertIs(romik.INFINITY, spectrum.lagrangeSection(DigitStream((), (3,)), DigitStream((), (1,))))


  def testPeriodicWords(self):
    """The maximum over sections of periodic words."""
    self.assertEqual(2, spectrum.lagrangeBiinfinite('3inf').value)
    self.assertEqual(Fraction(13, 3), spectrum.lagrangeBiinfinite('2inf').valueSq())
    self.assertEqual(Fraction(13, 3), spectrum.lagrangeBiinfinite('4inf').valueSq())
    self.assertEqual(Fraction(133, 25), spectrum.lagrangeBiinfinite('(223)inf').valueSq())
    self.assertEqual(Fraction(133, 25), spectrum.periodicLagrangeSq((2, 2, 3)))
    self.assertEqual(Fraction(133, 25), spectrum.periodicLagrangeSq(BiWord.periodic((3, 2, 2))))
    self.assertIs(romik.INFINITY, spectrum.lagrangeBiinfinite('1inf').value)


  def testRotationFormula(self):
    """The section maximum of (3 2^2k) matches the rotation formula and stays below 16/3."""
    for k in range(1, 4):
      word = (3,) + (2,) * (2 * k)
      result = spectrum.lagrangeBiinfinite(BiWord.periodic(word))
      self.assertTrue(result.certified)
      self.assertEqual(spectrum.periodicLagrangeSq(word), result.valueSq())
      self.assertLess(result.valueSq(), spectrum.LAGRANGE_THRESHOLD_SQ)


  def testSplicedWord(self):
    """^inf 2 3 2^inf reaches 4/sqrt(3), certified by the tail bound."""
    result = spectrum.lagrangeBiinfinite(SPLICED)
    self.assertTrue(result.certified)
    self.assertEqual(spectrum.LAGRANGE_THRESHOLD, result.value)
    self.assertEqual(34, len(result.windowValues))
    for _, value in result.windowValues:
      self.assertLessEqual(romik.compareNorms(value, result.value), 0)
    self.assertEqual(spectrum.LAGRANGE_THRESHOLD, spectrum.lagrangeBiinfinite(SPLICED, window=4).value)


  def testInvariance(self):
    """L(T) = L(T^v) = L(T*)."""
    random.seed(42)
    words = [SPLICED, BiWord.spliced((4,), (3,), (4,))]
    for _ in range(20):
      words.append(BiWord.periodic([random.choice((2, 3, 4)) for _ in range(random.randint(1, 5))]))
    for word in words:
      value = spectrum.lagrangeBiinfinite(word).value
      self.assertEqual(value, spectrum.lagrangeBiinfinite(word.vee()).value, word)
      self.assertEqual(value, spectrum.lagrangeBiinfinite(word.star()).value, word)


  def testForbiddenFactors(self):
    """Every short reduced word with a forbidden factor has L^2 > 16/3."""
    for word in spectrum.lyndonWords((2, 3, 4), 5):
      admissible, _ = spectrum.isAdmissibleCandidate(word)
      if admissible:
        continue
      value = spectrum.lagrangeBiinfinite(BiWord.periodic(word)).value
      self.assertGreater(romik.compareNorms(value, spectrum.LAGRANGE_THRESHOLD), 0, word)


  def testUnsupportedShape(self):
    """Tails from different quadratic fields are refused."""
    self.assertRaises(spectrum.UnsupportedShapeError, spectrum.lagrangeBiinfinite, BiWord.spliced((2,), (3,), (2, 3)))
    self.assertRaises(spectrum.UnsupportedShapeError, spectrum.periodicLagrangeSq, SPLICED)



class SpectrumTest(unittest.TestCase):
  """Tests for the discrete part of the spectrum."""

  def testDeltaK(self):
    """Closed forms for the first values."""
    self.assertEqual(Fraction(1, 4), spectrum.deltaKSq(1))
    self.assertEqual(Fraction(3, 13), spectrum.deltaKSq(2))
    self.assertEqual(Fraction(25, 133), spectrum.deltaKSq(3))
    self.assertEqual(Fraction(11881, 63364), spectrum.deltaKSq(4))
    self.assertEqual(Fraction(1413721, 7539844), spectrum.deltaKSq(5))
    self.assertRaises(approx.IndexOutOfRangeError, spectrum.deltaKSq, 0)


  def testDeltaKLimit(self):
    """Strictly decreasing towards sqrt(3)/4."""
    for k in range(1, 30):
      self.assertLess(spectrum.deltaKSq(k + 1), spectrum.deltaKSq(k))
      self.assertGreater(spectrum.deltaKSq(k), Fraction(3, 16))
    for k in range(10, 15):
      gap = arith.toMpf(arith.sqrtOf(spectrum.deltaKSq(k))) - arith.toMpf(SQRT3 / 4)
      self.assertLess(abs(gap), 1e-9)


  def testSpectrumBelow(self):
    """Each entry's witness has L^2 = 1 / delta_k^2."""
    entries = spectrum.spectrumBelow(6)
    self.assertEqual(list(range(1, 7)), [entry.k for entry in entries])
    self.assertEqual(BiWord.periodic((3,)), entries[0].witness)
    self.assertEqual(BiWord.periodic((2,)), entries[1].witness)
    self.assertEqual(BiWord.periodic((2, 2, 3)), entries[2].witness)
    for entry in entries:
      self.assertEqual(1, entry.lSq * entry.deltaSq)
      self.assertEqual(entry.lSq, spectrum.lagrangeBiinfinite(entry.witness).valueSq())


  def testLyndonWords(self):
    """Counts of Lyndon words over five letters."""
    words = list(spectrum.lyndonWords(arith.DIGITS, 6))
    self.assertEqual(3409, len(words))
    self.assertEqual(len(words), len(set(words)))
    self.assertEqual(sorted(words), words)
    self.assertEqual([(1,), (1, 2), (2,)], list(spectrum.lyndonWords((1, 2), 2)))


  def testNecklaces(self):
    """Exactly the predicted family qualifies up to period 6."""
    expected = [(2,), (2, 2, 2, 2, 3), (2, 2, 3), (3,), (3, 4, 4), (3, 4, 4, 4, 4), (4,)]
    self.assertEqual(expected, spectrum.admissibleFamily(6))
    records, qualifying = spectrum.enumeratePeriodicSpectrum(6)
    self.assertEqual(expected, sorted(qualifying))
    self.assertEqual(3409, len(records))
    for record in records:
      self.assertIsNotNone(record.value)
      if record.violations:
        self.assertEqual(1, romik.compareNorms(record.value, spectrum.LAGRANGE_THRESHOLD))
        self.assertFalse(record.qualifies)


  def testNecklaceValues(self):
    """Words with forbidden factors still carry their L."""
    record = spectrum.necklaceRecord((2, 4))
    self.assertEqual(spectrum.lagrangeBiinfinite('(24)inf').value, record.value)
    self.assertEqual(('24', '42'), record.violations)
    self.assertFalse(record.qualifies)
    self.assertIs(romik.INFINITY, spectrum.necklaceRecord((1,)).value)
    records = spectrum.enumeratePeriodicSpectrum(2)[0]
    self.assertTrue(all(record.value is not None for record in records))


  def testNecklaceThreads(self):
    """Threads do not change the records."""
    self.assertEqual(spectrum.enumeratePeriodicSpectrum(4), spectrum.enumeratePeriodicSpectrum(4, threads=4))
    self.assertRaises(ValueError, spectrum.enumeratePeriodicSpectrum, 13)



if __name__ == '__main__':
  unittest.main()
