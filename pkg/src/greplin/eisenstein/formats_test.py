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

"""Tests for result formatting."""

from fractions import Fraction
from greplin.eisenstein import approx, arith, formats, romik, spectrum
from greplin.eisenstein.arith import SqrtThree, Surd
from greplin.eisenstein.romik import CirclePoint, DigitStream

import six
import unittest


THREES = DigitStream((), (3,))



class JsonTest(unittest.TestCase):
  """Tests for JSON output."""

  def _roundTrip(self, value):
    """Writes and reads back a value."""
    out = six.StringIO()
    formats.jsonFormat(out, value)
    return formats.jsonParse(out.getvalue())


  def testExactValues(self):
    """Scalars come back equal and of the same type."""
    values = [Fraction(3, 13), SqrtThree(2, -1), Surd(2, Fraction(-1, 2), 13), romik.INFINITY,
              CirclePoint(8, 7, 13), DigitStream((1,), (2, 3)), spectrum.parseBiWord('2inf.3.2inf'), 7, None]
    for value in values:
      parsed = self._roundTrip(value)
      self.assertEqual(value, parsed)
      self.assertEqual(type(value), type(parsed))


  def testRecords(self):
    """Every result record survives a round trip."""
    target = approx.RayTarget.fromStream(THREES)
    values = [
      approx.bestApproxScan(THREES, 13),
      approx.perronDelta(THREES, 3),
      approx.pairScan(target, 100),
      approx.pairPlot(target, 13),
      spectrum.lagrangeBiinfinite('2inf.3.2inf', window=2),
      spectrum.spectrumBelow(4),
      spectrum.enumeratePeriodicSpectrum(3)[0],
      arith.IntVec3(3, 5, 7),
    ]
    for value in values:
      self.assertEqual(value, self._roundTrip(value))


  def testNestedTuples(self):
    """Tuples outside records stay tuples and lists stay lists."""
    records, qualifying = spectrum.enumeratePeriodicSpectrum(3)
    value = {'records': records, 'qualifying': qualifying, 'pair': (3, (5, 7)), 'list': [1, [2]]}
    parsed = self._roundTrip(value)
    self.assertEqual(value, parsed)
    self.assertEqual(tuple, type(parsed['qualifying'][0]))
    self.assertEqual(tuple, type(parsed['pair'][1]))
    self.assertEqual(list, type(parsed['list'][1]))


  def testStableKeys(self):
    """Keys are sorted and text stays UTF-8."""
    out = six.StringIO()
    formats.jsonFormat(out, {'b': 1, 'a': u'√3'})
    self.assertEqual(u'{"a": "√3", "b": 1}\n', out.getvalue())


  def testSurdDecimal(self):
    """Surds carry a rounded decimal for readers."""
    out = six.StringIO()
    formats.jsonFormat(out, arith.sqrtOf(Fraction(3, 13)))
    self.assertIn('"decimal": "0.4803844614"', out.getvalue())



class TableTest(unittest.TestCase):
  """Tests for CSV and text tables."""

  def testCsv(self):
    """RFC 4180 line endings and quoting."""
    out = six.StringIO()
    formats.csvFormat(out, ['a', 'b', 'c'], [(3, 5, 7), ('x,y', None, True)])
    self.assertEqual('a,b,c\r\n3,5,7\r\n"x,y",,true\r\n', out.getvalue())


  def testCells(self):
    """Cell text for each kind of value."""
    self.assertEqual('223', formats.cell((2, 2, 3)))
    self.assertEqual('inf', formats.cell(romik.INFINITY))
    self.assertEqual('3/13', formats.cell(Fraction(3, 13)))
    self.assertEqual('1(23)inf', formats.cell(DigitStream((1,), (2, 3))))
    self.assertEqual('0.5', formats.cell(0.5))


  def testText(self):
    """Columns are padded to the widest cell."""
    out = six.StringIO()
    formats.textFormat(out, [(1, Fraction(1, 4)), (10, Fraction(3, 13))], header=('k', 'value'))
    self.assertEqual('k   value\n1   1/4\n10  3/13\n', out.getvalue())


  def testDecimal(self):
    """Correct rounding and infinity."""
    self.assertEqual('inf', formats.decimal(romik.INFINITY))
    self.assertEqual('0.5000000000', formats.decimal(arith.sqrtOf(Fraction(1, 4))))
    self.assertEqual('0.43', formats.decimal(arith.sqrtOf(spectrum.deltaKSq(4)), 2))


  def testRootDecimal(self):
    """Square roots of rationals and of numbers in Q(sqrt 3)."""
    self.assertEqual('0.4803844614', formats.rootDecimal(Fraction(3, 13)))
    self.assertEqual('0.5176380902', formats.rootDecimal(SqrtThree(2, -1)))
    self.assertEqual('2.000', formats.rootDecimal(4, 3))
    self.assertEqual('0', formats.rootDecimal(Fraction(1, 5), 0))
    self.assertEqual('inf', formats.rootDecimal(romik.INFINITY))



class SvgTest(unittest.TestCase):
  """Tests for the pair figure."""

  def testSmallestPlot(self):
    """Only the arc, the ray and the two unit pairs."""
    out = six.StringIO()
    plot = approx.pairPlot(approx.RayTarget.fromStream(THREES), 1)
    formats.svgFormat(out, plot)
    svg = out.getvalue()
    self.assertIn('version="1.1"', svg)
    self.assertEqual(2, svg.count('<circle'))
    self.assertIn(u'1+0ω', svg)
    self.assertIn(u'0+1ω', svg)
    self.assertEqual(1, svg.count('class="arc"'))
    self.assertEqual(1, svg.count('class="ray"'))


  def testPointCount(self):
    """One circle per pair."""
    out = six.StringIO()
    plot = approx.pairPlot(approx.RayTarget.fromStream(THREES), 50)
    formats.svgFormat(out, plot)
    self.assertEqual(len(plot.points), out.getvalue().count('<circle'))
    self.assertGreaterEqual(len(plot.points), 12)



if __name__ == '__main__':
  unittest.main()
