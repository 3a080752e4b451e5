"""
Local expansion of hypergraph-state stabilizers.

For a complete k-uniform hypergraph the stabilizer of vertex l is

    g_l = X_l (C_0 I + sum_{m=1}^{n-1} C_m sum_{v, |v|=m, l not in v} Z_v)

and the coefficients follow from f_k(m), the expectation of g_n on the probe
state |0..0 +..+>, through an inverse binomial transform. Everything here is
exact; no state vector is needed, so the coefficient engine runs far past the
dense cap.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .apps import cap
from .dyadic import ONE, ZERO, DyadicRational, binom, binom_parity, sign_power
from .exceptions import (
    IdentityViolation,
    InvalidProfileError,
    ParameterRangeError,
    VertexRangeError,
    require_cap,
)
from .models import UniformityProfile, VertexSet, neighborhood
from .statevector import _x_array, _z_phase

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Generalized CZ
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class CzExpansion:
    """CZ_v = constant * I + sum_m level_coeff[m] * (sum of Z strings of size m in v)."""
    arity: int
    constant: DyadicRational
    level_coeff: dict

    def coefficient(self, size):
        return self.constant if size == 0 else self.level_coeff[size]

    def polynomial(self, mask):
        """The expansion of CZ on the vertex set `mask` as a ZPolynomial."""
        return ZPolynomial({sub: self.coefficient(sub.bit_count()) for sub in _submasks(mask)})

    def diagonal(self):
        """Reassembled diagonal of CZ on `arity` qubits, one entry per basis index."""
        full = (1 << self.arity) - 1
        return [
            sum(
                (self.coefficient(sub.bit_count()) * sign_power((sub & tau).bit_count())
                 for sub in _submasks(full)),
                ZERO,
            )
            for tau in range(1 << self.arity)
        ]


def cz_expand(arity):
    """Closed-form expansion of a generalized CZ on `arity` qubits."""
    if arity < 1:
        raise ParameterRangeError(f'CZ arity must be at least 1, got {arity}')
    scale = DyadicRational(1, arity - 1)
    return CzExpansion(
        arity=arity,
        constant=ONE - scale,
        level_coeff={m: scale * sign_power(m + 1) for m in range(1, arity + 1)},
    )


# -----------------------------------------------------------------------------
# Z-string algebra
# -----------------------------------------------------------------------------

class ZPolynomial:
    """
    Linear combination of Z strings, keyed by vertex bitmask (0 is the identity).
    Z strings multiply by XOR of their masks since Z^2 = I.
    """

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {mask: c for mask, c in (terms or {}).items() if c}

    @classmethod
    def identity(cls):
        return cls({0: ONE})

    def __mul__(self, other):
        product = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = a ^ b
                product[key] = product.get(key, ZERO) + ca * cb
        return ZPolynomial(product)

    def coefficient(self, mask):
        return self.terms.get(mask, ZERO)

    def __eq__(self, other):
        return isinstance(other, ZPolynomial) and self.terms == other.terms

    def __repr__(self):
        parts = [f'{c}*Z{list(VertexSet(mask))}' for mask, c in sorted(self.terms.items())]
        return ' + '.join(parts) or '0'


def expand_cz_product(n, edges):
    """prod_{e in edges} CZ_e expanded into Z strings by direct multiplication."""
    require_cap('n', n, cap('ZX_MAX_QUBITS'))
    result = ZPolynomial.identity()
    for edge in sorted(edges, key=VertexSet.sort_key):
        if edge.max_vertex() > n:
            raise VertexRangeError(f'{edge!r} leaves the vertex range 1..{n}')
        result = result * cz_expand(len(edge)).polynomial(edge.bits)
    return result


# -----------------------------------------------------------------------------
# Coefficient engine
# -----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _probe_sum(width, reduced):
    """sum_{s=0}^{width} C(width, s) (-1)^{sum_i C(s, k_i - 1)}, signs via parity."""
    total = 0
    for s in range(width + 1):
        parity = sum(binom_parity(s, k) for k in reduced) & 1
        total += -binom(width, s) if parity else binom(width, s)
    return total


def f_k(n, profile, m):
    """f_k(m) = 2^{-(n-1-m)} sum_s C(n-1-m, s) (-1)^{sum_i C(s, k_i - 1)}."""
    profile.validate_for(n)
    if not 0 <= m <= n - 1:
        raise ParameterRangeError(f'm must lie in [0, {n - 1}], got {m}')
    width = n - 1 - m
    return DyadicRational(_probe_sum(width, profile.reduced()), width)


@dataclass(frozen=True)
class LocalExpansion:
    """Coefficients C_0..C_{n-1} of the expanded stabilizer."""
    n: int
    profile: UniformityProfile
    coeffs: tuple

    def __post_init__(self):
        # plain ints are accepted and stored exactly
        object.__setattr__(self, 'coeffs', tuple(
            c if isinstance(c, DyadicRational) else DyadicRational(c) for c in self.coeffs
        ))

    @property
    def constant(self):
        return self.coeffs[0]

    def master_value(self, m):
        """C_0 + sum_{j=1}^{m} C_j C(m, j)."""
        e = max(c.exponent for c in self.coeffs[:m + 1])
        return DyadicRational(
            sum(binom(m, j) * c.numerator_at(e) for j, c in enumerate(self.coeffs[:m + 1])),
            e,
        )

    def check_master_identity(self):
        """
        Check C_0 + sum_j C_j C(m, j) == f_k(m) for every m in [0, n-1].

        Returns True, or raises IdentityViolation at the first m that fails.
        """
        for m in range(self.n):
            expected = f_k(self.n, self.profile, m)
            got = self.master_value(m)
            if got != expected:
                raise IdentityViolation(
                    f'master identity fails at n={self.n}, k=({self.profile}), m={m}: '
                    f'{got} != {expected}'
                )
        return True

    def min_coefficient(self):
        return min(self.coeffs)

    def first_negative_index(self):
        return next((j for j, c in enumerate(self.coeffs) if c < 0), None)


def coefficients(n, profile):
    """C_j = sum_{r=0}^{j} (-1)^{j-r} C(j, r) f_k(r)."""
    profile.validate_for(n)
    require_cap('n', n, cap('SCAN_MAX_QUBITS'))
    reduced = profile.reduced()
    # f_k(r) over the common denominator 2^{n-1}
    f_num = [_probe_sum(n - 1 - r, reduced) << r for r in range(n)]
    coeffs = tuple(
        DyadicRational(
            sum(sign_power(j - r) * binom(j, r) * f_num[r] for r in range(j + 1)),
            n - 1,
        )
        for j in range(n)
    )
    return LocalExpansion(n=n, profile=profile, coeffs=coeffs)


# -----------------------------------------------------------------------------
# Expanded stabilizer
# -----------------------------------------------------------------------------

@dataclass
class ZXPolynomial:
    """X_{x_site} (sum_v terms[v] Z_v) with no v containing x_site."""
    n: int
    x_site: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for v in self.terms:
            if self.x_site in v:
                raise VertexRangeError(f'Term {v!r} contains the X site {self.x_site}')

    def coefficient(self, v):
        if not isinstance(v, VertexSet):
            v = VertexSet.of(v)
        return self.terms.get(v, ZERO)

    def nonzero_terms(self):
        return {v: c for v, c in self.terms.items() if c}

    def z_diagonal(self):
        """
        The diagonal of sum_v c_v Z_v as (numerators, exponent):
        entry tau equals numerators[tau] / 2^exponent.
        """
        require_cap('n', self.n, cap('ZX_MAX_QUBITS'))
        exponent = max((c.exponent for c in self.terms.values()), default=0)
        diagonal = np.zeros(1 << self.n, dtype=np.int64)
        for v, c in self.terms.items():
            if c:
                diagonal += c.numerator_at(exponent) * _z_phase(self.n, v.bits)
        return diagonal, exponent

    def relabeled(self, permutation):
        """Apply a vertex relabeling given as a dict old -> new."""
        moved = {
            VertexSet.of(permutation.get(i, i) for i in v): c
            for v, c in self.terms.items()
        }
        return ZXPolynomial(self.n, permutation.get(self.x_site, self.x_site), moved)


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def expanded_stabilizer(n, profile, l):
    """g_l from the coefficient table: term v gets C_{|v|}."""
    require_cap('n', n, cap('DENSE_MAX_QUBITS'))
    if not 1 <= l <= n:
        raise VertexRangeError(f'Vertex {l} is outside 1..{n}')
    expansion = coefficients(n, profile)
    others = ((1 << n) - 1) & ~(1 << (l - 1))
    terms = {VertexSet(v): expansion.coeffs[v.bit_count()] for v in _submasks(others)}
    return ZXPolynomial(n=n, x_site=l, terms=terms)


def general_stabilizer(h, l):
    """g_l of any hypergraph: X_l times the expanded product of CZ over N(l)."""
    product = expand_cz_product(h.n, neighborhood(h, l))
    terms = {VertexSet(mask): c for mask, c in product.terms.items()}
    return ZXPolynomial(n=h.n, x_site=l, terms=terms)


def apply_zx_polynomial(state, p):
    """sum_v c_v (X_l Z_v)|state> as exact per-index amplitudes."""
    require_cap('n', state.n, cap('ZX_MAX_QUBITS'))
    if state.n != p.n:
        raise VertexRangeError(f'Polynomial on {p.n} qubits applied to a {state.n}-qubit state')
    diagonal, exponent = p.z_diagonal()
    image = _x_array(diagonal * state.signs.astype(np.int64), state.n, p.x_site)
    return [DyadicRational(int(a), exponent) for a in image]


def zx_basis_action(p):
    """Column form of p: p|tau> = phases[tau] / 2^exponent |tau XOR bit(l)>."""
    diagonal, exponent = p.z_diagonal()
    targets = np.arange(1 << p.n, dtype=np.int64) ^ (1 << (p.x_site - 1))
    return targets, diagonal, exponent


# -----------------------------------------------------------------------------
# Vanishing marginal term
# -----------------------------------------------------------------------------

def _single_k(profile):
    if not profile.is_single:
        raise InvalidProfileError(
            f'The C_0 = 0 criterion is only defined for a single uniformity, got ({profile})'
        )
    return profile.ks[0]


def c0_zero_predicate(n, profile):
    """True iff k - 1 = 2^a and n is a positive multiple of 2^{a+1}."""
    profile.validate_for(n)
    k = _single_k(profile)
    reduced = k - 1
    if reduced & (reduced - 1):
        return False
    a = reduced.bit_length() - 1
    return n > 0 and n % (1 << (a + 1)) == 0


def c0_pairing_condition(n, profile):
    """C(r-1, k-1) and C(n-r, k-1) differ mod 2 for every 1 <= r <= n."""
    profile.validate_for(n)
    k = _single_k(profile)
    return all(
        binom_parity(r - 1, k - 1) != binom_parity(n - r, k - 1)
        for r in range(1, n + 1)
    )


# -----------------------------------------------------------------------------
# Scans
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    n: int
    k: int
    c0_is_zero_exact: bool
    c0_predicate: bool
    min_coeff: DyadicRational
    first_negative_index: object
    c0_pairing: bool

    @property
    def c0_discrepancy(self):
        return self.c0_is_zero_exact != self.c0_predicate


@dataclass
class ScanReport:
    rows: list
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def scan_row(n, k):
    """One scan row for the single uniformity k."""
    profile = UniformityProfile((k,))
    expansion = coefficients(n, profile)
    return ScanRow(
        n=n,
        k=k,
        c0_is_zero_exact=expansion.constant == 0,
        c0_predicate=c0_zero_predicate(n, profile),
        min_coeff=expansion.min_coefficient(),
        first_negative_index=expansion.first_negative_index(),
        c0_pairing=c0_pairing_condition(n, profile),
    )


def _check_scan_range(n_max, k_max):
    if n_max < 2 or k_max < 2:
        raise ParameterRangeError(f'Scan needs n_max >= 2 and k_max >= 2, got {n_max}, {k_max}')
    require_cap('n_max', n_max, cap('SCAN_MAX_QUBITS'))


def sign_scan(n_max, k_max):
    """
    For 3 <= k < n <= n_max, k <= k_max: locate the negative coefficients.
    A pair without any negative coefficient is listed as a violation.
    """
    _check_scan_range(n_max, k_max)
    rows = [
        scan_row(n, k)
        for n in range(4, n_max + 1)
        for k in range(3, min(k_max, n - 1) + 1)
    ]
    violations = [(row.n, row.k) for row in rows if row.first_negative_index is None]
    for n, k in violations:
        logger.warning(f"No negative coefficient for n={n}, k={k}")
    logger.info(f"Sign scan n<={n_max}, k<={k_max}: {len(rows)} pairs, {len(violations)} violations")
    return ScanReport(rows=rows, violations=violations)


def c0_scan(n_max, k_max):
    """
    For 2 <= k <= n <= n_max, k <= k_max: compare exact C_0 = 0 with the predicate.
    Mismatches with k >= 3 are violations; k = 2 mismatches are only reported.
    """
    _check_scan_range(n_max, k_max)
    rows = [
        scan_row(n, k)
        for n in range(2, n_max + 1)
        for k in range(2, min(k_max, n) + 1)
    ]
    violations = []
    for row in rows:
        if not row.c0_discrepancy:
            continue
        if row.k >= 3:
            violations.append((row.n, row.k))
            logger.warning(
                f"C_0 criterion mismatch at n={row.n}, k={row.k}: "
                f"exact={row.c0_is_zero_exact}, predicate={row.c0_predicate}"
            )
        else:
            logger.debug(f"Graph-state C_0 discrepancy at n={row.n}")
    logger.info(f"C_0 scan n<={n_max}, k<={k_max}: {len(rows)} pairs, {len(violations)} violations")
    return ScanReport(rows=rows, violations=violations)


def c0_discrepancies(report):
    """(n, k) pairs where exact C_0 = 0 and the predicate disagree."""
    return [(row.n, row.k) for row in report.rows if row.c0_discrepancy]
