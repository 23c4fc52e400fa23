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

"""Formatting methods for results."""

from fractions import Fraction
from greplin.eisenstein import approx, arith, romik, spectrum
from greplin.eisenstein.arith import SqrtThree, Surd
from greplin.eisenstein.romik import CirclePoint, DigitStream, INFINITY

import csv
import json
import math

import mpmath
import six


RECORD_TYPES = {}


def registerRecord(recordType):
  """Makes a namedtuple type known to jsonParse."""
  RECORD_TYPES[recordType.__name__] = recordType
  return recordType


for _recordType in (approx.ApproxRecord, approx.PerronRecord, approx.PairScanResult, approx.PlotPoint,
                    approx.PairPlot, spectrum.LagrangeResult, spectrum.SpectrumEntry, spectrum.NecklaceRecord,
                    arith.IntVec3):
  registerRecord(_recordType)



class ResultEncoder(json.JSONEncoder):
  """JSON encoder for exact values, points, streams, words and result records."""

  def iterencode(self, o, _one_shot=False):
    return super(ResultEncoder, self).iterencode(self._prepare(o), _one_shot)


  def _prepare(self, value):
    """Replaces records and tuples, which json would flatten to plain arrays."""
    if isinstance(value, tuple) and hasattr(value, '_fields'):
      result = {'$record': type(value).__name__}
      for field in value._fields:
        result[field] = self._prepare(getattr(value, field))
      return result
    if isinstance(value, dict):
      return dict((six.text_type(key), self._prepare(item)) for key, item in six.iteritems(value))
    if isinstance(value, tuple):
      return {'$tuple': [self._prepare(item) for item in value]}
    if isinstance(value, list):
      return [self._prepare(item) for item in value]
    if value is None or isinstance(value, (bool, float) + six.integer_types + six.string_types):
      return value
    return self.default(value)


  def default(self, o): # pylint: disable=E0202
    if isinstance(o, Fraction):
      return {'$fraction': str(o)}
    if isinstance(o, SqrtThree):
      return {'$sqrt3': [str(o.r), str(o.s)]}
    if isinstance(o, Surd):
      return {'$surd': [str(o.x.r), str(o.x.s), str(o.y.r), str(o.y.s), str(o.delta)],
              'decimal': arith.toDecimal(o)}
    if o is INFINITY:
      return {'$infinity': True}
    if isinstance(o, CirclePoint):
      return {'$point': [o.a, o.b, o.c]}
    if isinstance(o, DigitStream):
      return {'$stream': o.toText()}
    if isinstance(o, spectrum.BiWord):
      return {'$word': o.toText()}
    if isinstance(o, mpmath.mpf):
      return float(o)
    return json.JSONEncoder.default(self, o)



def _objectHook(obj):
  """Rebuilds the values ResultEncoder tags."""
  if '$tuple' in obj:
    return tuple(obj['$tuple'])
  if '$fraction' in obj:
    return Fraction(obj['$fraction'])
  if '$sqrt3' in obj:
    return SqrtThree(*[Fraction(part) for part in obj['$sqrt3']])
  if '$surd' in obj:
    xr, xs, yr, ys, delta = [Fraction(part) for part in obj['$surd']]
    return Surd(SqrtThree(xr, xs), SqrtThree(yr, ys), delta)
  if '$infinity' in obj:
    return INFINITY
  if '$point' in obj:
    return CirclePoint(*obj['$point'])
  if '$stream' in obj:
    return romik.parseStream(obj['$stream'])
  if '$word' in obj:
    return spectrum.parseBiWord(obj['$word'])
  if '$record' in obj:
    recordType = RECORD_TYPES[obj['$record']]
    return recordType(**dict((field, obj[field]) for field in recordType._fields))
  return obj


def jsonFormat(output, value, pretty=False):
  """Formats as JSON, writing to the given object."""
  indent = 2 if pretty else None
  output.write(json.dumps(value, cls=ResultEncoder, indent=indent, sort_keys=True, ensure_ascii=False))
  output.write('\n')


def jsonParse(text):
  """Reads JSON written by jsonFormat back into result values."""
  return json.loads(text, object_hook=_objectHook)


def decimal(value, places=10, precisionBits=arith.DEFAULT_PRECISION_BITS):
  """Correctly rounded decimal text for an exact value."""
  if value is INFINITY:
    return 'inf'
  return arith.toDecimal(value, places, precisionBits)


def rootDecimal(square, places=10, precisionBits=arith.DEFAULT_PRECISION_BITS):
  """Correctly rounded decimal text for the square root of a nonnegative exact value."""
  if square is INFINITY:
    return 'inf'
  square = Surd.coerce(square)
  if square.isRational():
    return arith.toDecimal(arith.sqrtOf(square.x.r), places, precisionBits)
  scaled = square * (10 ** (2 * places))
  with mpmath.workprec(precisionBits):
    estimate = int(mpmath.nint(mpmath.sqrt(arith.toMpf(scaled, precisionBits))))
  half = Fraction(1, 2)
  while ((estimate + half) ** 2 - scaled).sign() <= 0:
    estimate += 1
  while estimate > 0 and ((estimate - half) ** 2 - scaled).sign() > 0:
    estimate -= 1
  digits = str(estimate).rjust(places + 1, '0')
  if not places:
    return digits
  return '%s.%s' % (digits[:-places], digits[-places:])


def cell(value):
  """Text for one table cell."""
  if value is None:
    return ''
  if value is INFINITY:
    return 'inf'
  if isinstance(value, bool):
    return 'true' if value else 'false'
  if isinstance(value, (DigitStream, spectrum.BiWord)):
    return value.toText()
  if isinstance(value, tuple) and all(isinstance(item, six.integer_types) for item in value):
    return ''.join(str(item) for item in value)
  if isinstance(value, float):
    return repr(value)
  return six.text_type(value)


def csvFormat(output, header, rows):
  """Formats as RFC 4180 CSV, writing to the given object."""
  writer = csv.writer(output, lineterminator='\r\n')
  writer.writerow(header)
  for row in rows:
    writer.writerow([cell(value) for value in row])


def textFormat(output, rows, header=None):
  """Formats as aligned columns, writing to the given object."""
  table = [[cell(value) for value in row] for row in rows]
  if header:
    table.insert(0, list(header))
  if not table:
    return
  widths = [max(len(row[index]) for row in table if index < len(row)) for index in range(max(len(row) for row in table))]
  for row in table:
    output.write('  '.join(value.ljust(width) for value, width in zip(row, widths)).rstrip())
    output.write('\n')


def svgFormat(output, plot, size=480, margin=20):
  """Draws the pairs a + b*omega, the unit arc and the ray as SVG 1.1."""
  scale = float(size - 2 * margin) / max(plot.maxNorm, 1)

  def position(x, y):
    return '%.4f' % (margin + x * scale), '%.4f' % (size - margin - y * scale)

  output.write('<?xml version="1.0" encoding="UTF-8"?>\n')
  output.write('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%d" height="%d" viewBox="0 0 %d %d">\n'
               % (size, size, size, size))
  output.write(u'<title>Eisenstein pairs with norm at most %d</title>\n' % plot.maxNorm)
  startX, startY = position(1, 0)
  endX, endY = position(0.5, math.sqrt(3) / 2)
  radius = '%.4f' % scale
  output.write('<path class="arc" d="M %s %s A %s %s 0 0 0 %s %s" fill="none" stroke="black"/>\n'
               % (startX, startY, radius, radius, endX, endY))
  originX, originY = position(0, 0)
  length = plot.maxNorm * 1.05
  tipX, tipY = position(plot.direction[0] * length, plot.direction[1] * length)
  output.write('<line class="ray" x1="%s" y1="%s" x2="%s" y2="%s" stroke="red"/>\n' % (originX, originY, tipX, tipY))
  for point in plot.points:
    x, y = position(point.x, point.y)
    output.write(u'<circle class="pair" cx="%s" cy="%s" r="2"><title>%d+%dω</title></circle>\n'
                 % (x, y, point.a, point.b))
  output.write('</svg>\n')
