"""
Command dispatch shared by the management commands.

A RunConfig is validated, then rendered to exact text (JSON, CSV or a table).
Exit status: 0 on success, 1 when a checked identity fails, 2 on bad input.
"""

import logging
import sys
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from . import bell, expansion, io_utils, statevector, verification
from .apps import CAP_LIMITS
from .exceptions import CapExceededError, IdentityViolation, OutputPathError, ParameterRangeError
from .models import UniformityProfile, complete_k_uniform

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ('json', 'csv', 'table')


@dataclass
class RunConfig:
    """
    Flags of one command run. `profile` may still be the raw `--k` text; it is
    parsed when the config is rendered.
    """
    command: str
    n: int = None
    profile: UniformityProfile = None
    n_max: int = None
    k_max: int = None
    fmt: str = None
    out: str = None
    edges: str = None
    max_dense: int = None

    def require(self, *names):
        """Raise ParameterRangeError naming every missing flag."""
        missing = [f'--{name.replace("_", "-")}' for name in names if getattr(self, name) is None]
        if missing:
            raise ParameterRangeError(f'{self.command} requires {", ".join(missing)}')

    @property
    def dense_limit(self):
        limit = CAP_LIMITS['DENSE_MAX_QUBITS']
        if self.max_dense is None:
            return limit
        if not 1 <= self.max_dense <= limit:
            raise ParameterRangeError(f'--max-dense must lie in [1, {limit}], got {self.max_dense}')
        return self.max_dense

    def require_dense(self, n):
        if n > self.dense_limit:
            raise CapExceededError('n', n, self.dense_limit)


@dataclass
class Outcome:
    text: str
    failed: bool = False
    reason: str = ''


def _coeffs(config):
    config.require('n', 'profile')
    local = expansion.coefficients(config.n, config.profile)
    local.check_master_identity()
    fmt = config.fmt or 'json'
    if fmt == 'json':
        return Outcome(io_utils.render_json(io_utils.coefficients_payload(local)))
    rows = [(m, c) for m, c in enumerate(local.coeffs)]
    render = io_utils.render_csv if fmt == 'csv' else io_utils.render_table
    return Outcome(render(('m', 'C_m'), rows))


def _state(config):
    if config.edges is not None:
        h = io_utils.load_hypergraph(config.edges)
    else:
        config.require('n', 'profile')
        h = complete_k_uniform(config.n, config.profile)
    config.require_dense(h.n)
    state = statevector.build_state(h)
    fmt = config.fmt or 'json'
    if fmt == 'json':
        return Outcome(io_utils.render_json(io_utils.state_payload(state)))
    rows = [(tau, format(tau, f'0{h.n}b')[::-1], int(s)) for tau, s in enumerate(state.signs)]
    render = io_utils.render_csv if fmt == 'csv' else io_utils.render_table
    return Outcome(render(('tau', 'bits_1_to_n', 'sign'), rows))


def _verify(config):
    if config.n is not None:
        config.require('profile')
        config.require_dense(config.n)
        results = verification.run_suites(config.n, config.profile)
        results.append(verification.binomial_suite())
    else:
        config.require('n_max', 'k_max')
        config.require_dense(config.n_max)
        results = verification.run_sweep(config.n_max, config.k_max)
    failed = [r for r in results if not r.passed]
    rows = [
        (r.name, r.n or '', r.profile, r.checked, len(r.failures), r.skipped or 'no')
        for r in results
    ]
    fmt = config.fmt or 'table'
    if fmt == 'json':
        payload = {
            'passed': not failed,
            'suites': [
                {'name': r.name, 'n': r.n, 'k': r.profile, 'checked': r.checked,
                 'failures': r.failures, 'skipped': r.skipped}
                for r in results
            ],
        }
        text = io_utils.render_json(payload)
    else:
        render = io_utils.render_csv if fmt == 'csv' else io_utils.render_table
        text = render(('suite', 'n', 'k', 'checked', 'failures', 'skipped'), rows)
    reason = '; '.join(f'{r.name} n={r.n} k={r.profile}: {r.failures[0]}' for r in failed[:3])
    return Outcome(text, failed=bool(failed), reason=reason)


def _scan(config, scan):
    config.require('n_max', 'k_max')
    report = scan(config.n_max, config.k_max)
    rows = io_utils.scan_rows(report)
    fmt = config.fmt or 'csv'
    if fmt == 'json':
        payload = {
            'rows': io_utils.json_rows(io_utils.SCAN_HEADER, rows),
            'discrepancies': [list(pair) for pair in expansion.c0_discrepancies(report)],
            'violations': [list(pair) for pair in report.violations],
        }
        text = io_utils.render_json(payload)
    else:
        render = io_utils.render_csv if fmt == 'csv' else io_utils.render_table
        text = render(io_utils.SCAN_HEADER, rows)
    reason = f'{len(report.violations)} violations, first at {report.violations[0]}' if report.violations else ''
    return Outcome(text, failed=not report.ok, reason=reason)


def _scan_c0(config):
    return _scan(config, expansion.c0_scan)


def _scan_signs(config):
    return _scan(config, expansion.sign_scan)


def _bell(config):
    if config.n is not None:
        config.require('profile')
        f = bell.bell_functional(config.n, config.profile)
        bound = bell.classical_bound(f)
        value = bell.quantum_value(f, complete_k_uniform(config.n, config.profile))
        payload = {
            'classical_bound': str(bound),
            'quantum_value': str(value),
            'violated': value > bound,
        }
        if value > bound:
            logger.warning(f"Bell violation at n={config.n}, k=({config.profile}): {value} > {bound}")
        fmt = config.fmt or 'json'
        if fmt == 'json':
            return Outcome(io_utils.render_json(payload))
        render = io_utils.render_csv if fmt == 'csv' else io_utils.render_table
        return Outcome(render(tuple(payload), [tuple(payload.values())]))

    config.require('n_max', 'k_max')
    report = bell.violation_report(config.n_max, config.k_max, cross_check=True)
    rows = io_utils.bell_rows(report)
    fmt = config.fmt or 'table'
    if fmt == 'json':
        payload = {
            'rows': io_utils.json_rows(io_utils.BELL_HEADER, rows),
            'findings': [list(item) for item in report.violations],
        }
        return Outcome(io_utils.render_json(payload))
    render = io_utils.render_csv if fmt == 'csv' else io_utils.render_table
    return Outcome(render(io_utils.BELL_HEADER, rows))


HANDLERS = {
    'coeffs': _coeffs,
    'state': _state,
    'verify': _verify,
    'scan-c0': _scan_c0,
    'scan-signs': _scan_signs,
    'bell': _bell,
}


def render(config):
    """Run the configured command and return its Outcome; input errors propagate."""
    if config.command not in HANDLERS:
        raise ParameterRangeError(f'Unknown command {config.command!r}')
    if config.fmt is not None and config.fmt not in FORMATS:
        raise ParameterRangeError(f'--format must be one of {", ".join(FORMATS)}')
    if isinstance(config.profile, str):
        config.profile = UniformityProfile.parse(config.profile)
    logger.info(f"Running {config.command}")
    outcome = HANDLERS[config.command](config)
    if outcome.failed:
        logger.info(f"Finished {config.command} with failures")
    else:
        logger.info(f"Finished {config.command}")
    return outcome


def write_output(text, out=None, stdout=None):
    """Write to the `--out` file when given, else to stdout."""
    if not out:
        (stdout or sys.stdout).write(text)
        return
    try:
        with open(out, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
    except OSError as e:
        raise OutputPathError(f'Cannot write {out}: {e.strerror}')


def error_line(error):
    """One machine-parsable line: "<code>: <message>"."""
    if isinstance(error, ValidationError):
        code = getattr(error, 'code', None) or 'invalid'
        return f'{code}: {"; ".join(error.messages)}'
    return f'identity_violation: {error}'


def execute(config, stdout=None):
    """
    Render a RunConfig and write its output.

    Returns:
        (status, message): the exit status, and the error line to report
        on stderr, or None when the run succeeded
    """
    try:
        outcome = render(config)
        write_output(outcome.text, config.out, stdout)
    except ValidationError as e:
        return EXIT_USAGE, error_line(e)
    except IdentityViolation as e:
        return EXIT_FAILED, error_line(e)
    if outcome.failed:
        return EXIT_FAILED, f'verification_failed: {outcome.reason}'
    return EXIT_OK, None


def run(config, stdout=None, stderr=None):
    """Execute a RunConfig and return the exit status."""
    status, message = execute(config, stdout)
    if message is not None:
        (stderr or sys.stderr).write(message + '\n')
    return status
