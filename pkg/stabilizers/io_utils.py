"""
Input parsing and exact output rendering for the management commands.
"""

import csv
import io
import json
import logging

from .exceptions import HypergraphFormatError
from .models import Hypergraph, VertexSet

logger = logging.getLogger(__name__)

JSON_SEPARATORS = (', ', ': ')


def parse_hypergraph(payload):
    """
    Build a Hypergraph from its JSON form.

    Args:
        payload: dict like {"n": 3, "edges": [[1, 2, 3]]}, vertices 1-based

    Returns:
        Hypergraph

    Duplicate edges, repeated vertices inside an edge, out-of-range
    vertices and non-integer entries are rejected.
    """
    if not isinstance(payload, dict) or set(payload) != {'n', 'edges'}:
        raise HypergraphFormatError('Hypergraph JSON must be an object with exactly "n" and "edges"')

    n = payload['n']
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise HypergraphFormatError(f'"n" must be a positive integer, got {n!r}')

    edges = payload['edges']
    if not isinstance(edges, list):
        raise HypergraphFormatError('"edges" must be a list of vertex lists')

    seen = set()
    for position, edge in enumerate(edges):
        if not isinstance(edge, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in edge
        ):
            raise HypergraphFormatError(f'Edge #{position} must be a list of integers: {edge!r}')
        if len(set(edge)) != len(edge):
            raise HypergraphFormatError(f'Edge #{position} repeats a vertex: {edge!r}')
        if any(not 1 <= v <= n for v in edge):
            raise HypergraphFormatError(f'Edge #{position} leaves the vertex range 1..{n}: {edge!r}')
        if len(edge) < 2:
            raise HypergraphFormatError(f'Edge #{position} has fewer than 2 vertices: {edge!r}')
        vertex_set = VertexSet.of(edge)
        if vertex_set in seen:
            raise HypergraphFormatError(f'Edge #{position} is a duplicate: {edge!r}')
        seen.add(vertex_set)

    return Hypergraph(n, seen)


def load_hypergraph(path):
    """Read and parse a hypergraph JSON file."""
    try:
        with open(path, encoding='utf-8') as handle:
            payload = json.load(handle)
    except OSError as e:
        raise HypergraphFormatError(f'Cannot read {path}: {e.strerror}')
    except UnicodeDecodeError as e:
        raise HypergraphFormatError(f'{path} is not UTF-8 text: byte {e.start} cannot be decoded')
    except json.JSONDecodeError as e:
        raise HypergraphFormatError(f'{path} is not valid JSON: {e.msg} (line {e.lineno})')
    hypergraph = parse_hypergraph(payload)
    logger.info(f"Loaded hypergraph from {path}: n={hypergraph.n}, {len(hypergraph.edges)} edges")
    return hypergraph


def render_json(payload):
    """Single-line JSON with a trailing newline; key order is kept as given."""
    return json.dumps(payload, separators=JSON_SEPARATORS) + '\n'


def render_cell(value):
    """Text form of a CSV or table cell: '' for None, true/false for booleans."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def json_cell(value):
    """
    JSON form of a cell. Integers, booleans and None stay native; exact
    fractions are written as their "p/2^q" text.
    """
    if value is None or isinstance(value, (bool, int)):
        return value
    return str(value)


def json_rows(header, rows):
    return [dict(zip(header, (json_cell(cell) for cell in row))) for row in rows]


def render_csv(header, rows):
    """CSV text, one newline-terminated line per row; cells go through render_cell."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([render_cell(cell) for cell in row])
    return buffer.getvalue()


def render_table(header, rows):
    """Fixed-width text table, right-aligned columns."""
    cells = [list(header)] + [[render_cell(cell) or '-' for cell in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ['  '.join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells]
    lines.insert(1, '  '.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'


def state_payload(state):
    """JSON form of a state: {"n": n, "signs": [...]} in basis-index order."""
    return {'n': state.n, 'signs': [int(s) for s in state.signs]}


def coefficients_payload(expansion):
    return {
        'n': expansion.n,
        'k': list(expansion.profile.ks),
        'coeffs': [str(c) for c in expansion.coeffs],
    }


SCAN_HEADER = (
    'n', 'k', 'c0_is_zero_exact', 'c0_predicate', 'min_coeff', 'first_negative_index', 'c0_pairing',
)


def scan_rows(report):
    """Scan rows as tuples in SCAN_HEADER order, sorted by (n, k)."""
    return [
        (row.n, row.k, row.c0_is_zero_exact, row.c0_predicate, row.min_coeff,
         row.first_negative_index, row.c0_pairing)
        for row in sorted(report.rows, key=lambda r: (r.n, r.k))
    ]


BELL_HEADER = ('n', 'k', 'classical_bound', 'quantum_value', 'violated', 'exhaustive_bound')


def bell_rows(report):
    """Report rows as tuples in BELL_HEADER order, sorted by (n, k)."""
    return [
        (row.n, row.k, row.classical_bound, row.quantum_value, row.violated, row.exhaustive_bound)
        for row in sorted(report.rows, key=lambda r: (r.n, r.k))
    ]
