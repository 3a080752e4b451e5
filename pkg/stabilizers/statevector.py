"""
Dense desk-scale oracle for hypergraph states.

A hypergraph state has equal-magnitude real amplitudes, so it is kept as a
vector of signs (+1/-1) indexed by the basis index tau, with the global factor
2^{-n/2} left implicit. CZ, Z and X only flip or permute entries, which keeps
every check an exact integer comparison.

The array helpers act along axis 0, so they also apply an operator to every
column of an integer matrix (basis states, stabilizer matrices).
"""

import logging

import numpy as np

from .apps import cap
from .dyadic import DyadicRational, binom
from .exceptions import ParameterRangeError, VertexRangeError, require_cap
from .models import VertexSet, edge_count_in_support, neighborhood, n_k_closed_form

logger = logging.getLogger(__name__)


def basis_indices(n):
    """Basis indices 0..2^n - 1; bit i-1 of an index is vertex i."""
    return np.arange(1 << n, dtype=np.int64)


def _check_dense(n, limit=None):
    require_cap('n', n, limit or cap('DENSE_MAX_QUBITS'))


def _check_vertex(n, vertex):
    if not 1 <= vertex <= n:
        raise VertexRangeError(f'Vertex {vertex} is outside 1..{n}')


def _broadcast(column, array):
    return column.reshape((-1,) + (1,) * (array.ndim - 1))


def _cz_array(array, n, mask):
    """Flip the rows tau with mask a subset of J(tau)."""
    idx = basis_indices(n)
    flip = np.where((idx & mask) == mask, -1, 1).astype(array.dtype)
    return array * _broadcast(flip, array)


def _z_phase(n, mask):
    """(-1)^{|J(tau) & mask|} for every tau."""
    parity = np.bitwise_count(basis_indices(n) & mask) & 1
    return (1 - 2 * parity.astype(np.int64))


def _x_array(array, n, vertex):
    return array[basis_indices(n) ^ (1 << (vertex - 1))]


def _stabilizer_array(array, n, neighbors, vertex):
    for edge in neighbors:
        array = _cz_array(array, n, edge.bits)
    return _x_array(array, n, vertex)


class SignState:
    """
    Hypergraph state as 2^n signs; amplitude of |tau> is signs[tau] / 2^{n/2}.
    """

    __slots__ = ('n', 'signs')

    def __init__(self, n, signs):
        signs = np.asarray(signs, dtype=np.int8)
        if signs.shape != (1 << n,):
            raise ValueError(f'Expected {1 << n} signs for n={n}, got shape {signs.shape}')
        if not np.all(np.abs(signs) == 1):
            raise ValueError('Every sign must be +1 or -1')
        signs.flags.writeable = False
        self.n = n
        self.signs = signs

    @classmethod
    def plus(cls, n):
        """|+>^{n}: every sign +1."""
        _check_dense(n)
        return cls(n, np.ones(1 << n, dtype=np.int8))

    def _derive(self, array):
        return SignState(self.n, array)

    def __eq__(self, other):
        return (
            isinstance(other, SignState)
            and self.n == other.n
            and np.array_equal(self.signs, other.signs)
        )

    __hash__ = None

    def negative_indices(self):
        return [int(tau) for tau in np.flatnonzero(self.signs < 0)]

    def __repr__(self):
        return f'SignState(n={self.n}, negative={len(self.negative_indices())})'


class ProbeState:
    """
    |0...0 +...+>: the first m qubits in |0>, the remaining n - m in |+>.
    The last qubit is the X site of the probed stabilizer.
    """

    __slots__ = ('m', 'n')

    def __init__(self, m, n):
        if not 0 <= m <= n - 1:
            raise ParameterRangeError(f'Probe needs 0 <= m <= n-1, got m={m}, n={n}')
        self.m = m
        self.n = n

    def vector(self):
        """Unnormalized amplitudes (0 or 1); the squared norm is 2^{n-m}."""
        low = (1 << self.m) - 1
        return np.where(basis_indices(self.n) & low == 0, 1, 0).astype(np.int64)

    def expectation(self, h):
        """<psi_m| g_n |psi_m> by dense application of the direct stabilizer."""
        _check_dense(self.n)
        vec = self.vector()
        image = _stabilizer_array(vec, self.n, neighborhood(h, self.n), self.n)
        return DyadicRational(int(vec @ image), self.n - self.m)


def build_state(h):
    """signs[tau] = (-1)^{n_E(tau)}."""
    _check_dense(h.n)
    signs = np.ones(1 << h.n, dtype=np.int8)
    for edge in h.edges:
        signs = _cz_array(signs, h.n, edge.bits)
    return SignState(h.n, signs)


def build_complete_state(n, profile):
    """Fast path for complete profiles: the sign depends on the weight only."""
    _check_dense(n)
    profile.validate_for(n)
    weight_signs = np.array(
        [1 - 2 * (n_k_closed_form(profile, w) & 1) for w in range(n + 1)],
        dtype=np.int8,
    )
    return SignState(n, weight_signs[np.bitwise_count(basis_indices(n))])


def apply_cz(state, e):
    """CZ_e; a one-vertex e is a plain Z."""
    if not isinstance(e, VertexSet):
        e = VertexSet.of(e)
    if not e:
        raise VertexRangeError('CZ needs at least one vertex')
    if e.max_vertex() > state.n:
        raise VertexRangeError(f'{e!r} leaves the vertex range 1..{state.n}')
    return state._derive(_cz_array(state.signs, state.n, e.bits))


def apply_x(state, l):
    """X_l: swaps the amplitudes of tau and tau with bit l-1 flipped."""
    _check_vertex(state.n, l)
    return state._derive(_x_array(state.signs, state.n, l))


def direct_stabilizer(state, h, l):
    """g_l = X_l prod_{e' in N(l)} CZ_{e'}: the CZs act first, then X_l."""
    _check_dense(h.n)
    return state._derive(_stabilizer_array(state.signs, state.n, neighborhood(h, l), l))


def _vertices_of(x, n):
    if isinstance(x, int):
        if not 0 <= x < 1 << n:
            raise VertexRangeError(f'Bitstring {x} is outside [0, 2^{n})')
        return [v for v in range(1, n + 1) if x >> (v - 1) & 1]
    bits = list(x)
    if len(bits) != n:
        raise VertexRangeError(f'Bitstring must have length {n}, got {len(bits)}')
    return [v for v, bit in enumerate(bits, start=1) if bit]


def stabilizer_product_array(array, h, x):
    """S_x on an integer vector or on every column of a matrix."""
    require_cap('n', h.n, cap('PRODUCT_MAX_QUBITS'))
    for vertex in _vertices_of(x, h.n):
        array = _stabilizer_array(array, h.n, neighborhood(h, vertex), vertex)
    return array


def stabilizer_product(state, h, x):
    """S_x = prod_i g_i^{x_i}, applied in ascending vertex order."""
    return state._derive(stabilizer_product_array(state.signs, h, x))


def conjugated_stabilizer(state, h, l):
    """g_l written as (prod_E CZ) X_l (prod_E CZ)."""
    _check_dense(h.n)
    _check_vertex(h.n, l)
    signs = state.signs
    for edge in h.edges:
        signs = _cz_array(signs, h.n, edge.bits)
    signs = _x_array(signs, h.n, l)
    for edge in h.edges:
        signs = _cz_array(signs, h.n, edge.bits)
    return state._derive(signs)


def basis_action(h, l):
    """
    Column form of g_l: g_l|tau> = phases[tau] |targets[tau]>.
    """
    _check_dense(h.n)
    _check_vertex(h.n, l)
    phases = np.ones(1 << h.n, dtype=np.int64)
    for edge in neighborhood(h, l):
        phases = _cz_array(phases, h.n, edge.bits)
    return basis_indices(h.n) ^ (1 << (l - 1)), phases


def stabilizer_matrix(h, l):
    """Dense integer matrix of g_l, built by acting on every basis state."""
    _check_dense(h.n, cap('MATRIX_MAX_QUBITS'))
    identity = np.eye(1 << h.n, dtype=np.int64)
    return _stabilizer_array(identity, h.n, neighborhood(h, l), l)


def stabilizer_trace(h, l):
    """
    Tr g_l, the sum of the diagonal entries of the stabilizer in the
    computational basis. X_l moves every basis state, so this is 0.
    """
    targets, phases = basis_action(h, l)
    return int(phases[targets == basis_indices(h.n)].sum())


def expectation_zx(state, l, v):
    """<state| X_l Z_v |state> as an exact dyadic rational."""
    if not isinstance(v, VertexSet):
        v = VertexSet.of(v)
    _check_vertex(state.n, l)
    if l in v:
        raise VertexRangeError(f'X site {l} must not be in the Z support {v!r}')
    if v.max_vertex() > state.n:
        raise VertexRangeError(f'{v!r} leaves the vertex range 1..{state.n}')
    signs = state.signs.astype(np.int64)
    image = _x_array(signs * _z_phase(state.n, v.bits), state.n, l)
    return DyadicRational(int(signs @ image), state.n)


def probe_expectation_direct(n, profile, m):
    """
    <psi_m| g_n |psi_m> as the literal sum over tau in {0,1}^{n-m-1} of
    (-1)^{n_{k-1}(tau)}, divided by 2^{n-m-1}.
    """
    profile.validate_for(n)
    if not 0 <= m <= n - 1:
        raise ParameterRangeError(f'm must lie in [0, {n - 1}], got {m}')
    width = n - m - 1
    require_cap('n-m-1', width, cap('PROBE_MAX_WIDTH'))
    reduced = profile.reduced()
    weight_signs = np.array(
        [1 - 2 * (sum(binom(w, k) for k in reduced) & 1) for w in range(width + 1)],
        dtype=np.int64,
    )
    total = int(weight_signs[np.bitwise_count(basis_indices(width))].sum())
    return DyadicRational(total, width)


def projector_sum(h):
    """sum_x S_x as a dense integer matrix (equals 2^n |H><H|)."""
    require_cap('n', h.n, cap('PROJECTOR_MAX_QUBITS'))
    identity = np.eye(1 << h.n, dtype=np.int64)
    total = np.zeros_like(identity)
    for x in range(1 << h.n):
        total += stabilizer_product_array(identity, h, x)
    return total


def projector_product_form(h):
    """prod_i (I + g_i) as a dense integer matrix (equals 2^n |H><H|)."""
    require_cap('n', h.n, cap('PROJECTOR_MAX_QUBITS'))
    identity = np.eye(1 << h.n, dtype=np.int64)
    product = identity
    for vertex in range(1, h.n + 1):
        product = product @ (identity + stabilizer_matrix(h, vertex))
    return product


def state_projector(state):
    """2^n |H><H| as the integer outer product of the signs."""
    signs = state.signs.astype(np.int64)
    return np.outer(signs, signs)


def edge_count_grid(h):
    """n_E(tau) for every tau, by explicit enumeration."""
    _check_dense(h.n)
    return [edge_count_in_support(h, tau) for tau in range(1 << h.n)]
