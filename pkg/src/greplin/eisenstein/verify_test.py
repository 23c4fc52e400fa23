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

"""Tests for the verification suite."""

from fractions import Fraction
from greplin.eisenstein import arith, verify

import unittest



class VerifyTest(unittest.TestCase):
  """Tests for runChecks and the individual checks."""

  def testTable(self):
    """The first five rows of the spectrum table."""
    rows = verify.spectrumTable()
    self.assertEqual(list(verify.EXPECTED_DELTA_SQ), [row.deltaSq for row in rows])
    self.assertEqual(list(verify.EXPECTED_DECIMALS), [row.decimal for row in rows])
    self.assertEqual(list(verify.PRINTED_DECIMALS), [row.printed for row in rows])
    self.assertEqual('0.4335549848', rows[2].decimal)
    self.assertEqual('0.4335549847', rows[2].printed)
    self.assertEqual('0.48', verify.spectrumTable(2, places=2)[1].decimal)


  def testDefaultSuite(self):
    """Every default check passes."""
    results = verify.runChecks()
    self.assertEqual([name for name, _ in verify.CHECKS], [result.name for result in results])
    for result in results:
      self.assertTrue(result.passed, result)


  def testDeepChecks(self):
    """The deep checks pass at reduced sizes."""
    self.assertIn('5 streams', verify.checkBoundaryOptimality(threads=2, count=5, maxC=1000))
    self.assertIn('7 qualify', verify.checkCharacterization(maxPeriod=5))


  def testFallbacksAreLogged(self):
    """Each check reports how often it fell back to interval arithmetic."""
    def mixed(threads=1):
      """Compares values from two different fields."""
      return str(arith.compareValues(arith.sqrtOf(13), arith.sqrtOf(7)))

    saved = verify.CHECKS
    verify.CHECKS = (('mixed', mixed),)
    try:
      with self.assertLogs('greplin.eisenstein.verify', level='INFO') as logs:
        results = verify.runChecks()
    finally:
      verify.CHECKS = saved
    self.assertEqual([verify.CheckResult('mixed', True, '1')], results)
    self.assertIn('Check mixed used 1 interval comparisons', '\n'.join(logs.output))
    self.assertEqual(0, arith.INTERVAL_FALLBACKS.value)


  def testFailureIsReported(self):
    """A failing check is recorded, not raised."""
    def broken(threads=1):
      """Always fails."""
      verify._require(Fraction(1, 3) == Fraction(1, 2), 'expected %s', 'failure')

    saved = verify.CHECKS
    verify.CHECKS = (('broken', broken),)
    try:
      results = verify.runChecks()
    finally:
      verify.CHECKS = saved
    self.assertEqual([verify.CheckResult('broken', False, 'expected failure')], results)
    self.assertRaises(verify.CheckFailedError, verify._require, False, 'x')



if __name__ == '__main__':
  unittest.main()
