"""Verification reports and the CSV/JSON tables written by the CLI."""

import csv
import json
import math

from akmass.errors import InvalidArgumentValueError

from .utils import open_output


REPORT_COLUMNS = ('check_id', 'anchor', 'max_residual', 'tolerance', 'pass',
                  'samples', 'ms')

MASS_COLUMNS = ('radius', 'value', 'fit_residual')

# every record anchor is one of these phrases
ANCHORS = (
    'fundamental two form',
    'coordinates at infinity',
    'Euclidean coordinate sphere of radius',
    'has the mass given by',
    'related by the following identity',
    'total Hermitian scalar curvature is',
    'proved that on an almost',
    'solves the Dirac equation',
    'is a −mi eigenspace',
    'c=2 when m=2',
    'pointwise equality of norms',
    'computed according to the formula',
    'Clifford action of',
    'the ADM mass is given by',
    'Using the identity',
    'closed 2-form with compact support',
    'component of the curvature operator',
    'twisted Ricci form',
    'The following relation holds',
    'the following identities',
    'Moreover if δW₊=0',
    'the mass of the manifold then satisfies',
)


def _number(value):
    """Floats as JSON-safe values: ``nan`` and infinities become strings."""
    value = float(value)
    return value if math.isfinite(value) else repr(value)


class CheckRecord(object):

    """The outcome of one check.

    A record passes when its residual is a number no larger than its
    tolerance; ``nan`` never passes.

    :param check_id: Identifier of the check.
    :type check_id: :class:`str <python:str>`

    :param anchor: One of :data:`ANCHORS`.
    :type anchor: :class:`str <python:str>`

    :param max_residual: Largest residual over the samples.
    :type max_residual: :class:`float <python:float>`

    :param tolerance: Largest accepted residual.
    :type tolerance: :class:`float <python:float>`

    :param samples: Number of points or evaluations.
    :type samples: :class:`int <python:int>`

    :param ms: Wall time in milliseconds, or ``None`` when not recorded.
    :type ms: :class:`int <python:int>`, optional

    :raises InvalidArgumentValueError: If the anchor is not in
        :data:`ANCHORS`.

    """

    def __init__(self, check_id, anchor, max_residual, tolerance, samples,
                 ms=None):
        if anchor not in ANCHORS:
            raise InvalidArgumentValueError(
                'Unknown anchor "{}" for check {}'.format(anchor, check_id))
        self._check_id = check_id
        self._anchor = anchor
        self._max_residual = float(max_residual)
        self._tolerance = float(tolerance)
        self._samples = int(samples)
        self._ms = ms

    def __repr__(self):
        return '<CheckRecord {} {:.3e} <= {:.3e}: {}>'.format(
            self._check_id, self._max_residual, self._tolerance,
            'pass' if self.passed else 'fail')

    @property
    def check_id(self):
        """Identifier of the check.

        :type: :class:`str <python:str>`

        """
        return self._check_id

    @property
    def anchor(self):
        """The anchor phrase of the checked statement.

        :type: :class:`str <python:str>`

        """
        return self._anchor

    @property
    def max_residual(self):
        """Largest residual.

        :type: :class:`float <python:float>`

        """
        return self._max_residual

    @property
    def tolerance(self):
        """Largest accepted residual.

        :type: :class:`float <python:float>`

        """
        return self._tolerance

    @property
    def samples(self):
        """Number of samples.

        :type: :class:`int <python:int>`

        """
        return self._samples

    @property
    def ms(self):
        """Wall time in milliseconds, or ``None``.

        :type: :class:`int <python:int>`

        """
        return self._ms

    @property
    def passed(self):
        """Whether the residual is within tolerance.

        :type: :class:`bool <python:bool>`

        """
        return self._max_residual <= self._tolerance

    def as_row(self):
        """The CSV row of :data:`REPORT_COLUMNS`."""
        return [self._check_id, self._anchor, repr(self._max_residual),
                repr(self._tolerance), 'true' if self.passed else 'false',
                str(self._samples), '' if self._ms is None else str(self._ms)]

    def as_dict(self):
        """The JSON object mirroring :meth:`as_row`."""
        return {
            'check_id': self._check_id,
            'anchor': self._anchor,
            'max_residual': _number(self._max_residual),
            'tolerance': self._tolerance,
            'pass': self.passed,
            'samples': self._samples,
            'ms': self._ms,
        }


class VerificationReport(object):

    """An ordered collection of :class:`CheckRecord` objects.

    :param metric: Name of the checked entry.
    :type metric: :class:`str <python:str>`

    :param details: Extra values written to the JSON output only.
    :type details: Dict, optional

    """

    def __init__(self, metric, details=None):
        self._metric = metric
        self._records = []
        self._details = dict(details or {})

    def __repr__(self):
        return '<VerificationReport {}: {} records, {}>'.format(
            self._metric, len(self._records),
            'pass' if self.passed else 'fail')

    def __iter__(self):
        return iter(self._records)

    def __len__(self):
        return len(self._records)

    def add(self, record):
        """Append a record and return it."""
        self._records.append(record)
        return record

    @property
    def metric(self):
        """Name of the checked entry.

        :type: :class:`str <python:str>`

        """
        return self._metric

    @property
    def records(self):
        """The records in the order they were added.

        :type: List[:class:`CheckRecord`]

        """
        return list(self._records)

    @property
    def details(self):
        """Extra values of the JSON output.

        :type: Dict

        """
        return self._details

    @property
    def passed(self):
        """Whether every record passes; an empty report passes.

        :type: :class:`bool <python:bool>`

        """
        return all(record.passed for record in self._records)

    def as_dict(self):
        """The JSON object of the report."""
        out = {
            'metric': self._metric,
            'pass': self.passed,
            'records': [record.as_dict() for record in self._records],
        }
        if self._details:
            out['details'] = self._details
        return out


def _check_format(fmt):
    if fmt not in ('csv', 'json'):
        raise InvalidArgumentValueError(
            'format must be csv or json, got {!r}'.format(fmt))


def _dump_json(obj, stream):
    json.dump(obj, stream, indent=2, sort_keys=True)
    stream.write('\n')


def emit_report(report, fmt='csv', path=None):
    """Write ``report`` as CSV with header :data:`REPORT_COLUMNS` or as
    JSON, to ``path`` or stdout.

    :raises OSError: If the path cannot be written.

    """
    _check_format(fmt)
    with open_output(path) as stream:
        if fmt == 'json':
            _dump_json(report.as_dict(), stream)
            return
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(REPORT_COLUMNS)
        for record in report:
            writer.writerow(record.as_row())


def emit_mass_table(estimate, fmt='csv', path=None, expected=None):
    """Write a :class:`MassEstimate <akmass.ale.mass.MassEstimate>`.

    The CSV form has one ``radius,value,fit_residual`` row per radius and a
    final row ``extrapolated,<limit>,<error bar>``.

    """
    _check_format(fmt)
    with open_output(path) as stream:
        if fmt == 'json':
            rows = [{'radius': r, 'value': _number(v),
                     'fit_residual': _number(e)}
                    for r, v, e in zip(estimate.radii, estimate.values,
                                       estimate.fit_residuals)]
            out = {
                'rows': rows,
                'extrapolated': _number(estimate.extrapolated),
                'fit_exponent': _number(estimate.fit_exponent),
                'error_bar': _number(estimate.error_bar),
                'warnings': list(estimate.warnings),
            }
            if expected is not None:
                out['expected'] = expected
            _dump_json(out, stream)
            return
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(MASS_COLUMNS)
        for r, v, e in zip(estimate.radii, estimate.values,
                           estimate.fit_residuals):
            writer.writerow([repr(float(r)), repr(float(v)), repr(float(e))])
        writer.writerow(['extrapolated', repr(float(estimate.extrapolated)),
                         repr(float(estimate.error_bar))])


def emit_rows(columns, rows, fmt='csv', path=None, key='rows'):
    """Write plain rows: CSV with header ``columns``, or a JSON object
    holding the list of row objects under ``key``."""
    _check_format(fmt)
    with open_output(path) as stream:
        if fmt == 'json':
            _dump_json({key: [dict(zip(columns, row)) for row in rows]},
                       stream)
            return
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow(['|'.join(v) if isinstance(v, (list, tuple))
                             else v for v in row])
