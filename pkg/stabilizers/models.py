"""
Hypergraph data model.

Plain immutable value objects; the app defines no database tables.
Bit convention, used everywhere: bit (i - 1) of a mask or basis index
stands for vertex i.
"""

import itertools
import logging
from collections.abc import Set

from .apps import cap
from .dyadic import binom
from .exceptions import InvalidProfileError, VertexRangeError, require_cap

logger = logging.getLogger(__name__)


class VertexSet(Set):
    """
    A set of 1-based vertices stored as one integer bitmask.
    """

    __slots__ = ('bits',)

    def __init__(self, bits=0):
        if bits < 0:
            raise ValueError(f'bits must be non-negative, got {bits}')
        self.bits = bits

    @classmethod
    def of(cls, vertices):
        bits = 0
        for vertex in vertices:
            if vertex < 1:
                raise VertexRangeError(f'Vertex {vertex} is not a positive index')
            bits |= 1 << (vertex - 1)
        return cls(bits)

    def __contains__(self, vertex):
        return vertex >= 1 and bool(self.bits >> (vertex - 1) & 1)

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length()
            bits ^= low

    def __len__(self):
        return self.bits.bit_count()

    def __hash__(self):
        return hash(self.bits)

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        return Set.__eq__(self, other)

    def __le__(self, other):
        if isinstance(other, VertexSet):
            return self.bits & ~other.bits == 0
        return Set.__le__(self, other)

    @classmethod
    def _from_iterable(cls, iterable):
        return cls.of(iterable)

    def without(self, vertex):
        return VertexSet(self.bits & ~(1 << (vertex - 1)))

    def max_vertex(self):
        return self.bits.bit_length()

    def sort_key(self):
        """Order by size, then lexicographically by sorted vertices."""
        return (len(self), tuple(self))

    def __repr__(self):
        return f'VertexSet({{{", ".join(str(v) for v in self)}}})'


class UniformityProfile:
    """
    The uniformities k = (k1, ..., kp) of a complete k-uniform hypergraph.
    Stored strictly increasing.
    """

    __slots__ = ('ks',)

    def __init__(self, ks):
        ks = tuple(int(k) for k in ks)
        if not ks:
            raise InvalidProfileError('Uniformity profile must not be empty')
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise InvalidProfileError(
                f'Uniformities must be distinct and increasing, got {ks}'
            )
        self.ks = ks

    @classmethod
    def parse(cls, text):
        """Parse a comma-separated profile such as "2,3"."""
        try:
            ks = sorted(int(part) for part in text.split(',') if part.strip())
        except ValueError:
            raise InvalidProfileError(f'Invalid uniformity profile: {text!r}')
        if len(set(ks)) != len(ks):
            raise InvalidProfileError(f'Uniformities must be distinct: {text!r}')
        return cls(ks)

    def validate_for(self, n):
        """Raise unless 2 <= k1 and kp <= n."""
        if n < 1:
            raise InvalidProfileError(f'Vertex count must be positive, got {n}')
        if self.ks[0] < 2 or self.ks[-1] > n:
            raise InvalidProfileError(
                f'Profile {self} is invalid for n={n}: need 2 <= k <= n'
            )
        return self

    def reduced(self):
        """The shifted tuple (k1 - 1, ..., kp - 1) of neighborhood sizes."""
        return tuple(k - 1 for k in self.ks)

    @property
    def is_single(self):
        return len(self.ks) == 1

    def __iter__(self):
        return iter(self.ks)

    def __len__(self):
        return len(self.ks)

    def __eq__(self, other):
        return isinstance(other, UniformityProfile) and self.ks == other.ks

    def __hash__(self):
        return hash(self.ks)

    def __str__(self):
        return ','.join(str(k) for k in self.ks)

    def __repr__(self):
        return f'UniformityProfile({self.ks})'


class Hypergraph:
    """
    A pair (V, E) with V = {1, ..., n} and every edge of size >= 2.
    """

    __slots__ = ('n', 'edges')

    def __init__(self, n, edges=()):
        require_cap('n', n, cap('VERTEX_MAX'))
        if n < 1:
            raise VertexRangeError(f'Vertex count must be positive, got {n}')
        edge_set = set()
        for edge in edges:
            if not isinstance(edge, VertexSet):
                edge = VertexSet.of(edge)
            if len(edge) < 2:
                raise VertexRangeError(f'Edge {edge!r} has fewer than 2 vertices')
            if edge.max_vertex() > n:
                raise VertexRangeError(f'Edge {edge!r} leaves the vertex range 1..{n}')
            edge_set.add(edge)
        self.n = n
        self.edges = frozenset(edge_set)

    def sorted_edges(self):
        return sorted(self.edges, key=VertexSet.sort_key)

    def check_vertex(self, vertex):
        if not 1 <= vertex <= self.n:
            raise VertexRangeError(f'Vertex {vertex} is outside 1..{self.n}')

    def __eq__(self, other):
        return isinstance(other, Hypergraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f'Hypergraph(n={self.n}, edges={len(self.edges)})'


def complete_k_uniform(n, profile):
    """All subsets of {1..n} whose size is one of the profile's uniformities."""
    profile.validate_for(n)
    edges = [
        VertexSet.of(combo)
        for k in profile
        for combo in itertools.combinations(range(1, n + 1), k)
    ]
    logger.debug(f"Complete hypergraph n={n}, k=({profile}): {len(edges)} edges")
    return Hypergraph(n, edges)


def complete_edge_count(n, profile):
    """|E| = sum_i C(n, k_i)."""
    return sum(binom(n, k) for k in profile)


def neighborhood(h, l):
    """N(l) = {e \\ {l} : l in e}; size-1 members stand for a single Z."""
    h.check_vertex(l)
    return {edge.without(l) for edge in h.edges if l in edge}


def support(tau, n):
    """J(tau): the vertices where tau has a 1."""
    if not 0 <= tau < 1 << n:
        raise VertexRangeError(f'Basis index {tau} is outside [0, 2^{n})')
    return VertexSet(tau)


def edge_count_in_support(h, tau):
    """n_E(tau): the number of edges contained in J(tau)."""
    return sum(1 for edge in h.edges if edge.bits & tau == edge.bits)


def n_k_closed_form(profile, weight):
    """n_k(tau) = sum_i C(|J(tau)|, k_i) for a complete profile."""
    return sum(binom(weight, k) for k in profile)
