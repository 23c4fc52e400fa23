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

"""Tests for the command line tool."""

from greplin.eisenstein import cli, formats

import io
import os
import shutil
import tempfile
import unittest

import six



class CliTest(unittest.TestCase):
  """Tests for main and the commands."""

  def setUp(self):
    self.directory = tempfile.mkdtemp()


  def tearDown(self):
    shutil.rmtree(self.directory)


  def _main(self, *argv, **kwargs):
    """Runs main, returning the status, standard output and standard error."""
    stdout = six.StringIO()
    stderr = six.StringIO()
    status = cli.main(list(argv), stdout, stderr, kwargs.get('environ', {}))
    return status, stdout.getvalue(), stderr.getvalue()


  def testTriples(self):
    """Six triples up to 13, and the two unit points at 1."""
    status, out, _ = self._main('triples', '--max-c', '13', '--format', 'csv')
    self.assertEqual(cli.EXIT_OK, status)
    lines = out.split('\r\n')
    self.assertEqual('a,b,c', lines[0])
    self.assertEqual(['0,1,1', '1,0,1'], lines[1:3])
    self.assertEqual(7, len([line for line in lines if line]))
    status, out, _ = self._main('triples', '--max-c', '1')
    self.assertEqual(3, len(out.splitlines()))


  def testThreadsDoNotChangeOutput(self):
    """JSON output is the same for any number of workers."""
    outputs = set()
    for threads in ('1', '2', '5'):
      outputs.add(self._main('triples', '--max-c', '300', '--format', 'json', '--threads', threads)[1])
    self.assertEqual(1, len(outputs))
    self.assertEqual(outputs, {self._main('triples', '--max-c', '300', '--format', 'json',
                                          environ={cli.THREADS_VARIABLE: '3'})[1]})


  def testThreadsVariable(self):
    """EL_THREADS overrides --threads and is validated."""
    parser = cli.buildParser()
    args = parser.parse_args(['triples', '--max-c', '5', '--threads', '2'])
    self.assertEqual(2, cli.RunConfig.fromArguments(args, {}).threads)
    self.assertEqual(4, cli.RunConfig.fromArguments(args, {cli.THREADS_VARIABLE: '4'}).threads)
    self.assertRaises(ValueError, cli.RunConfig.fromArguments, args, {cli.THREADS_VARIABLE: 'many'})
    status, out, err = self._main('triples', '--max-c', '5', environ={cli.THREADS_VARIABLE: '0'})
    self.assertEqual(cli.EXIT_INVALID, status)
    self.assertEqual('', out)
    self.assertIn('threads', err)


  def testExpand(self):
    """Both expansions of an ambiguous point, one of an unambiguous one."""
    self.assertEqual(u'[1,5^∞] | [2,5^∞]\n', self._main('expand', '5/7,3/7')[1])
    self.assertEqual(u'[1,2,1^∞] | [1,3,1^∞]\n', self._main('expand', '35/43', '13/43')[1])
    self.assertEqual(u'[5^∞]\n', self._main('expand', '0,1')[1])
    self.assertEqual(u'[1^∞]\n', self._main('expand', '1/1', '0/1')[1])


  def testInvalidInput(self):
    """Points off the curve and unparseable words exit with status 2."""
    status, out, err = self._main('expand', '1/2,1/2')
    self.assertEqual(cli.EXIT_INVALID, status)
    self.assertEqual('', out)
    self.assertTrue(err.startswith('eisenstein: '))
    self.assertEqual(cli.EXIT_INVALID, self._main('lagrange', '2x3')[0])
    self.assertEqual(cli.EXIT_INVALID, self._main('delta', '3inf', '5/7,3/7', '--precision-bits', '8')[0])


  def testDelta(self):
    """The distance to the first boundary of [3^inf]."""
    status, out, _ = self._main('delta', '3inf', '8/13,7/13', '--format', 'csv')
    self.assertEqual(cli.EXIT_OK, status)
    self.assertEqual('target,approximant,height,deltaSq,delta', out.split('\r\n')[0])
    self.assertIn(',13,', out)


  def testPerronDeepSections(self):
    """Deep sections have huge coefficients but still render."""
    status, out, err = self._main('perron', '3inf', '--k', '20', '--format', 'csv')
    self.assertEqual(cli.EXIT_OK, status, err)
    rows = [line for line in out.split('\r\n') if line]
    self.assertEqual(21, len(rows))
    self.assertTrue(rows[-1].startswith('20,'))
    self.assertTrue(rows[-1].endswith(',0.5000000000') or rows[-1].endswith(',0.4999999999'), rows[-1])


  def testLagrange(self):
    """L of a periodic and of a spliced word."""
    status, out, _ = self._main('lagrange', '(24)inf', '--format', 'csv')
    self.assertEqual(cli.EXIT_OK, status)
    row = out.split('\r\n')[1].split(',')
    self.assertEqual(['8', '2.8284271247', 'true'], row[2:5])
    status, out, _ = self._main('lagrange', '2inf.3.2inf', '--window', '4', '--places', '6')
    self.assertEqual(cli.EXIT_OK, status)
    self.assertIn('16/3', out)
    self.assertIn('2.309401', out)


  def testSpectrum(self):
    """The first rows of the spectrum table."""
    status, out, _ = self._main('spectrum', '--k', '3')
    self.assertEqual(cli.EXIT_OK, status)
    lines = out.splitlines()
    self.assertEqual(4, len(lines))
    self.assertIn('3/13', lines[2])
    self.assertIn('0.4803844614', lines[2])
    self.assertIn('25/133', lines[3])
    entries = formats.jsonParse(self._main('spectrum', '--k', '2', '--format', 'json')[1])
    self.assertEqual([1, 2], [entry.k for entry in entries])


  def testOutputFile(self):
    """--output writes the whole result to a file."""
    path = os.path.join(self.directory, 'triples.csv')
    status, out, _ = self._main('triples', '--max-c', '7', '--format', 'csv', '--output', path)
    self.assertEqual(cli.EXIT_OK, status)
    self.assertEqual('', out)
    with io.open(path, encoding='utf-8', newline='') as stream:
      self.assertEqual('a,b,c\r\n0,1,1\r\n1,0,1\r\n', stream.read()[:len('a,b,c\r\n0,1,1\r\n1,0,1\r\n')])


  def testPlot(self):
    """The SVG and its CSV twin describe the same pairs."""
    path = os.path.join(self.directory, 'pairs.svg')
    status, out, _ = self._main('plot', '--max-norm', '40', '--svg', path)
    self.assertEqual(cli.EXIT_OK, status)
    with io.open(path, encoding='utf-8') as stream:
      svg = stream.read()
    with io.open(path + '.csv', encoding='utf-8', newline='') as stream:
      rows = [line for line in stream.read().split('\r\n') if line]
    self.assertTrue(svg.startswith('<?xml'))
    self.assertEqual('a,b,c,x,y', rows[0])
    self.assertEqual(len(rows) - 1, svg.count('<circle class="pair"'))
    self.assertIn('%d pairs written' % (len(rows) - 1), out)


  def testUnwritablePlot(self):
    """I/O failures exit with status 1."""
    path = os.path.join(self.directory, 'missing', 'pairs.svg')
    self.assertEqual(cli.EXIT_FAILURE, self._main('plot', '--max-norm', '13', '--svg', path)[0])


  def testPlotWritesBothOrNeither(self):
    """A failure on the CSV twin leaves no SVG and no staging files behind."""
    path = os.path.join(self.directory, 'pairs.svg')
    os.mkdir(path + '.csv')
    self.assertEqual(cli.EXIT_FAILURE, self._main('plot', '--max-norm', '13', '--svg', path)[0])
    self.assertFalse(os.path.exists(path))
    self.assertEqual(['pairs.svg.csv'], os.listdir(self.directory))


  def testInterrupt(self):
    """An interrupted command writes nothing and exits with 130."""
    def interrupted(config, output):
      """Writes a little, then is interrupted."""
      output.write('partial')
      raise KeyboardInterrupt()

    saved = cli.COMMANDS['triples']
    cli.COMMANDS['triples'] = interrupted
    try:
      status, out, _ = self._main('triples', '--max-c', '13')
    finally:
      cli.COMMANDS['triples'] = saved
    self.assertEqual(cli.EXIT_INTERRUPTED, status)
    self.assertEqual('', out)


  def testVerify(self):
    """The default suite passes."""
    status, out, _ = self._main('verify')
    self.assertEqual(cli.EXIT_OK, status)
    self.assertIn('0.4330127402', out)
    self.assertNotIn('FAIL', out)



if __name__ == '__main__':
  unittest.main()
