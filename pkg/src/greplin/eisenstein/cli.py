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

"""The eisenstein command line tool.

Every command renders its whole result into memory before anything is written, so an
interrupted run leaves no partial output behind.
"""

from greplin.eisenstein import approx, arith, formats, romik, spectrum, verify
from greplin.eisenstein.romik import CirclePoint, DigitStream

import argparse
import io
import logging
import os
import sys
import tempfile

import six

log = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_INTERRUPTED = 130

THREADS_VARIABLE = 'EL_THREADS'

OUTPUT_FORMATS = ('text', 'csv', 'json')

MIN_PRECISION_BITS = 64



class RunConfig(object):
  """Validated settings for one command."""

  __slots__ = ('command', 'maxC', 'maxNorm', 'k', 'maxPeriod', 'window', 'target', 'approximant', 'word',
               'outputFormat', 'outputPath', 'svgPath', 'threads', 'precisionBits', 'places', 'verbosity', 'deep')

  def __init__(self, command, maxC=None, maxNorm=None, k=None, maxPeriod=None, window=16, target=None,
               approximant=None, word=None, outputFormat='text', outputPath=None, svgPath=None, threads=1,
               precisionBits=arith.DEFAULT_PRECISION_BITS, places=10, verbosity=0, deep=False):
    self.command = command
    self.maxC = maxC
    self.maxNorm = maxNorm
    self.k = k
    self.maxPeriod = maxPeriod
    self.window = window
    self.target = target
    self.approximant = approximant
    self.word = word
    self.outputFormat = outputFormat
    self.outputPath = outputPath
    self.svgPath = svgPath
    self.threads = threads
    self.precisionBits = precisionBits
    self.places = places
    self.verbosity = verbosity
    self.deep = deep
    self.validate()


  def validate(self):
    """Raises ValueError naming the first bad field."""
    for field in ('maxC', 'maxNorm', 'k', 'maxPeriod', 'window', 'threads'):
      value = getattr(self, field)
      if value is not None and value < 1:
        raise ValueError('%s must be positive, got %d' % (field, value))
    if self.precisionBits < MIN_PRECISION_BITS:
      raise ValueError('precisionBits must be at least %d, got %d' % (MIN_PRECISION_BITS, self.precisionBits))
    if self.outputFormat not in OUTPUT_FORMATS:
      raise ValueError('outputFormat must be one of %s, got %r' % (', '.join(OUTPUT_FORMATS), self.outputFormat))
    if self.places < 0:
      raise ValueError('places must not be negative, got %d' % self.places)


  @classmethod
  def fromArguments(cls, args, environ=None):
    """Builds a config from parsed arguments; EL_THREADS overrides --threads."""
    environ = os.environ if environ is None else environ
    threads = args.threads
    if environ.get(THREADS_VARIABLE):
      try:
        threads = int(environ[THREADS_VARIABLE])
      except ValueError:
        raise ValueError('%s must be an integer, got %r' % (THREADS_VARIABLE, environ[THREADS_VARIABLE]))
    target = None
    if getattr(args, 'target', None) is not None:
      target = romik.parseTarget(args.target)
    approximant = None
    if getattr(args, 'approximant', None) is not None:
      approximant = romik.parsePoint(args.approximant)
    if getattr(args, 'point', None) is not None:
      target = romik.parsePoint(args.point, args.second)
    word = None
    if getattr(args, 'word', None) is not None:
      word = spectrum.parseBiWord(args.word)
    return cls(args.command, maxC=getattr(args, 'max_c', None), maxNorm=getattr(args, 'max_norm', None),
               k=getattr(args, 'k', None), maxPeriod=getattr(args, 'max_period', None),
               window=getattr(args, 'window', 16), target=target, approximant=approximant, word=word,
               outputFormat=args.format, outputPath=args.output, svgPath=getattr(args, 'svg', None),
               threads=threads, precisionBits=args.precision_bits, places=args.places,
               verbosity=args.verbose, deep=getattr(args, 'deep', False))


  def decimal(self, value):
    """Decimal text at the configured places and precision."""
    if value is None:
      return ''
    return formats.decimal(value, self.places, self.precisionBits)


  def rootDecimal(self, square):
    """Decimal text of a square root at the configured places and precision."""
    return formats.rootDecimal(square, self.places, self.precisionBits)



def _emit(config, output, value, header, rows):
  """Writes a result in the configured format."""
  if config.outputFormat == 'json':
    formats.jsonFormat(output, value, pretty=True)
  elif config.outputFormat == 'csv':
    formats.csvFormat(output, header, rows)
  else:
    formats.textFormat(output, rows, header)


def _rayTarget(config):
  """The ray through the configured target; [3^inf] when none was given."""
  target = config.target if config.target is not None else DigitStream((), (3,))
  if isinstance(target, CirclePoint):
    return approx.RayTarget.fromPoint(target, config.precisionBits)
  return approx.RayTarget.fromStream(target, config.precisionBits)


def _require(config, *fields):
  """Checks that a command got the settings it needs."""
  for field in fields:
    if getattr(config, field) is None:
      raise ValueError('%s needs %s' % (config.command, field))


def cmdTriples(config, output):
  """Eisenstein triples sorted by (c, a)."""
  _require(config, 'maxC')
  triples = romik.enumerateTriples(config.maxC, config.threads)
  rows = [tuple(point) for point in triples]
  value = [{'a': a, 'b': b, 'c': c} for a, b, c in rows]
  _emit(config, output, value, ('a', 'b', 'c'), rows)


def cmdExpand(config, output):
  """Both digit expansions of a rational point."""
  _require(config, 'target')
  streams = [stream for stream in romik.expandRational(config.target) if stream is not None]
  if config.outputFormat == 'text':
    output.write(' | '.join(six.text_type(stream) for stream in streams))
    output.write('\n')
  else:
    _emit(config, output, streams, ('expansion',), [(stream,) for stream in streams])


def cmdVerify(config, output):
  """The self-check suite; fails unless every check passes."""
  table = verify.spectrumTable(5, config.places)
  results = verify.runChecks(config.deep, config.threads)
  passed = all(result.passed for result in results)
  if config.outputFormat == 'json':
    formats.jsonFormat(output, {'table': table, 'checks': results, 'passed': passed}, pretty=True)
  elif config.outputFormat == 'csv':
    formats.csvFormat(output, ('check', 'passed', 'detail'), results)
  else:
    formats.textFormat(output, [(row.k, row.deltaSq, row.decimal) for row in table], ('k', 'delta_k^2', 'delta_k'))
    output.write('\n')
    formats.textFormat(output, [(result.name, 'ok' if result.passed else 'FAIL', result.detail) for result in results],
                       ('check', 'status', 'detail'))
  return EXIT_OK if passed else EXIT_FAILURE


def _writeTogether(contents):
  """Writes every (path, text) pair through a staging file next to it, then renames them into place."""
  staged = []
  try:
    for path, text in contents:
      handle, staging = tempfile.mkstemp(prefix='.eisenstein-', dir=os.path.dirname(os.path.abspath(path)))
      staged.append((staging, path))
      with io.open(handle, 'w', encoding='utf-8', newline='') as stream:
        stream.write(text)
    for staging, path in staged:
      os.replace(staging, path)
  finally:
    for staging, _ in staged:
      if os.path.exists(staging):
        os.remove(staging)


def cmdPlot(config, output):
  """The pair figure as SVG plus a CSV twin of the plotted coordinates."""
  _require(config, 'maxNorm', 'svgPath')
  plot = approx.pairPlot(_rayTarget(config), config.maxNorm, config.threads)
  svg = six.StringIO()
  formats.svgFormat(svg, plot)
  table = six.StringIO()
  formats.csvFormat(table, ('a', 'b', 'c', 'x', 'y'), plot.points)
  _writeTogether([(config.svgPath + '.csv', table.getvalue()), (config.svgPath, svg.getvalue())])
  log.info('Wrote %d pairs to %s', len(plot.points), config.svgPath)
  output.write(u'%d pairs written to %s and %s.csv\n' % (len(plot.points), config.svgPath, config.svgPath))


def cmdDelta(config, output):
  """delta(P; Z) for one approximant."""
  _require(config, 'target', 'approximant')
  deltaSq = approx.deltaSq(config.target, config.approximant)
  record = approx.ApproxRecord(config.target, config.approximant, approx.height(config.approximant), deltaSq, None)
  _emit(config, output, record, ('target', 'approximant', 'height', 'deltaSq', 'delta'),
        [(config.target, config.approximant, record.height, deltaSq, config.rootDecimal(deltaSq))])


def _recordRows(config, records):
  """Rows for approximant records."""
  return [(record.approximant.a, record.approximant.b, record.approximant.c, record.deltaSq,
           config.rootDecimal(record.deltaSq), record.boundary) for record in records]


RECORD_HEADER = ('a', 'b', 'c', 'deltaSq', 'delta', 'boundary')


def cmdScan(config, output):
  """Every approximant up to a height, closest first."""
  _require(config, 'target', 'maxC')
  records = approx.bestApproxScan(config.target, config.maxC, config.threads)
  _emit(config, output, records, RECORD_HEADER, _recordRows(config, records))


def cmdEstimate(config, output):
  """The boundary-window estimate of delta(P)."""
  _require(config, 'target', 'maxC')
  estimate, records = approx.deltaLiminfEstimate(config.target, config.maxC)
  _emit(config, output, {'estimate': estimate, 'witnesses': records}, RECORD_HEADER, _recordRows(config, records))


def cmdPerron(config, output):
  """Perron's formula for the first k sections."""
  _require(config, 'target', 'k')
  records = [approx.perronDelta(config.target, k) for k in range(1, config.k + 1)]
  rows = [(record.k, record.epsSq, record.denominator, record.deltaSq, config.rootDecimal(record.deltaSq))
          for record in records]
  _emit(config, output, records, ('k', 'epsSq', 'denominator', 'deltaSq', 'delta'), rows)


def cmdLagrange(config, output):
  """L(T) for a doubly infinite word."""
  _require(config, 'word')
  result = spectrum.lagrangeBiinfinite(config.word, config.window)
  rows = [(config.word, result.value, result.valueSq(), config.decimal(result.value), result.certified, result.cut,
           result.mirrored)]
  _emit(config, output, {'word': config.word, 'result': result},
        ('word', 'L', 'L^2', 'decimal', 'certified', 'cut', 'mirrored'), rows)


def cmdSpectrum(config, output):
  """The first k values of the spectrum with their witnesses."""
  _require(config, 'k')
  entries = spectrum.spectrumBelow(config.k)
  rows = [(entry.k, entry.lSq, entry.deltaSq, config.decimal(arith.sqrtOf(entry.deltaSq)), entry.witness)
          for entry in entries]
  _emit(config, output, entries, ('k', 'L^2', 'delta_k^2', 'delta_k', 'witness'), rows)


def cmdNecklaces(config, output):
  """Periodic words up to a period, flagged when L <= 4/sqrt(3)."""
  _require(config, 'maxPeriod')
  records, qualifying = spectrum.enumeratePeriodicSpectrum(config.maxPeriod, config.threads)
  rows = [(record.word, config.decimal(record.value), record.qualifies, ' '.join(record.violations))
          for record in records]
  _emit(config, output, {'records': records, 'qualifying': qualifying}, ('word', 'L', 'qualifies', 'violations'),
        rows)


def cmdPairs(config, output):
  """The closest Eisenstein pair to the ray, over a norm window."""
  _require(config, 'maxNorm')
  result = approx.pairScan(_rayTarget(config), config.maxNorm, config.threads)
  witness = result.witness
  _emit(config, output, result, ('estimate', 'a', 'b', 'c', 'rational'),
        [('%.*f' % (config.places, result.estimate), witness.a, witness.b, witness.c, result.rational)])


COMMANDS = {
  'triples': cmdTriples,
  'expand': cmdExpand,
  'verify': cmdVerify,
  'plot': cmdPlot,
  'delta': cmdDelta,
  'scan': cmdScan,
  'estimate': cmdEstimate,
  'perron': cmdPerron,
  'lagrange': cmdLagrange,
  'spectrum': cmdSpectrum,
  'necklaces': cmdNecklaces,
  'pairs': cmdPairs,
}


def buildParser():
  """The argument parser for every command."""
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument('--format', choices=OUTPUT_FORMATS, default='text', help='output format')
  common.add_argument('--output', help='write to this file instead of standard output')
  common.add_argument('--threads', type=int, default=1, help='worker threads (%s overrides)' % THREADS_VARIABLE)
  common.add_argument('--precision-bits', type=int, default=arith.DEFAULT_PRECISION_BITS)
  common.add_argument('--places', type=int, default=10, help='decimal places for rounded values')
  common.add_argument('-v', '--verbose', action='count', default=0)

  parser = argparse.ArgumentParser(prog='eisenstein', description='Eisenstein triples and approximation constants.')
  commands = parser.add_subparsers(dest='command', metavar='command')
  commands.required = True

  sub = commands.add_parser('triples', parents=[common], help='list Eisenstein triples')
  sub.add_argument('--max-c', type=int, required=True)

  sub = commands.add_parser('expand', parents=[common], help='digit expansions of a rational point')
  sub.add_argument('point', help="'a/c' or 'a/c,b/c'")
  sub.add_argument('second', nargs='?', help="'b/c' when given separately")

  sub = commands.add_parser('verify', parents=[common], help='run the self-check suite')
  sub.add_argument('--deep', action='store_true', help='add the slow brute-force checks')

  sub = commands.add_parser('plot', parents=[common], help='SVG of Eisenstein pairs and a ray')
  sub.add_argument('--target', help='direction of the ray; defaults to 3inf')
  sub.add_argument('--max-norm', type=int, required=True)
  sub.add_argument('--svg', default='pairs.svg', help='SVG path; the CSV twin goes next to it')

  sub = commands.add_parser('delta', parents=[common], help='delta(P; Z) for one approximant')
  sub.add_argument('target')
  sub.add_argument('approximant')

  for name, helpText in (('scan', 'every approximant up to a height'), ('estimate', 'boundary-window estimate')):
    sub = commands.add_parser(name, parents=[common], help=helpText)
    sub.add_argument('target')
    sub.add_argument('--max-c', type=int, required=True)

  sub = commands.add_parser('perron', parents=[common], help="Perron's formula by section")
  sub.add_argument('target')
  sub.add_argument('--k', type=int, required=True)

  sub = commands.add_parser('lagrange', parents=[common], help='L(T) of a doubly infinite word')
  sub.add_argument('word')
  sub.add_argument('--window', type=int, default=16)

  sub = commands.add_parser('spectrum', parents=[common], help='the spectrum below 4/sqrt(3)')
  sub.add_argument('--k', type=int, required=True)

  sub = commands.add_parser('necklaces', parents=[common], help='periodic words by Lagrange number')
  sub.add_argument('--max-period', type=int, required=True)

  sub = commands.add_parser('pairs', parents=[common], help='closest Eisenstein pair to a ray')
  sub.add_argument('target')
  sub.add_argument('--max-norm', type=int, required=True)
  return parser


def _deliver(config, text, stdout):
  """Writes the finished output to its destination."""
  if config.outputPath:
    _writeTogether([(config.outputPath, text)])
  else:
    stdout.write(text)


def main(argv=None, stdout=None, stderr=None, environ=None):
  """Runs one command and returns the exit status."""
  stdout = stdout or sys.stdout
  stderr = stderr or sys.stderr
  args = buildParser().parse_args(argv)
  level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
  logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')

  try:
    config = RunConfig.fromArguments(args, environ)
    buffered = six.StringIO()
    status = COMMANDS[config.command](config, buffered) or EXIT_OK
    fallbacks = arith.INTERVAL_FALLBACKS.reset()
    if fallbacks:
      log.info('%d comparisons fell back to interval arithmetic', fallbacks)
    _deliver(config, buffered.getvalue(), stdout)
    return status
  except KeyboardInterrupt:
    log.warning('Interrupted; partial results discarded')
    return EXIT_INTERRUPTED
  except ValueError as e:
    stderr.write(u'eisenstein: %s\n' % e)
    return EXIT_INVALID
  except (IOError, OSError) as e:
    log.exception('I/O failure')
    stderr.write(u'eisenstein: %s\n' % e)
    return EXIT_FAILURE


if __name__ == '__main__':
  sys.exit(main())
