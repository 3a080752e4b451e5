"""
Sum-of-stabilizers Bell functional for complete k-uniform hypergraph states.

Each party has two dichotomic settings: setting 0 takes the X role and
setting 1 the Z role of the expanded stabilizer, so

    B = sum_l A0^(l) [C_0 + sum_m C_m sum_{|v|=m, l not in v} prod_{i in v} A1^(i)].

The classical bound is the exact maximum over deterministic strategies; the
quantum value is the expectation on |H> with the X/Z assignment.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .apps import cap
from .dyadic import ZERO, DyadicRational, binom, dyadic_sum, sign_power
from .exceptions import InvalidProfileError, ParameterRangeError, require_cap
from .expansion import apply_zx_polynomial, coefficients, expanded_stabilizer
from .models import UniformityProfile, complete_k_uniform
from .statevector import build_state

logger = logging.getLogger(__name__)

# Strategy columns evaluated per block by the exhaustive oracle
_EXHAUSTIVE_BLOCK = 256


@dataclass(frozen=True)
class BellFunctional:
    n: int
    coeffs: object  # LocalExpansion

    @property
    def profile(self):
        return self.coeffs.profile

    def bracket(self, t):
        """
        Bracket of one party when t of the other n - 1 parties answer -1 to setting 1.
        The Z-string sums reduce to Krawtchouk values sum_j (-1)^j C(t, j) C(n-1-t, m-j).
        """
        rest = self.n - 1 - t
        return dyadic_sum(
            c * sum(sign_power(j) * binom(t, j) * binom(rest, m - j) for j in range(m + 1))
            for m, c in enumerate(self.coeffs.coeffs)
        )


@dataclass(frozen=True)
class DeterministicStrategy:
    """Outputs of every party: x for setting 0, z for setting 1 (entries +1/-1)."""
    x: tuple
    z: tuple

    def __post_init__(self):
        if len(self.x) != len(self.z):
            raise ParameterRangeError('Strategy needs one x and one z output per party')
        if any(value not in (1, -1) for value in self.x + self.z):
            raise ParameterRangeError('Strategy outputs must be +1 or -1')


def bell_functional(n, profile):
    """The functional built from the exact coefficients of the (n, profile) hypergraph."""
    return BellFunctional(n=n, coeffs=coefficients(n, profile))


def evaluate(f, strategy):
    """Value of the functional on one deterministic strategy."""
    if len(strategy.x) != f.n:
        raise ParameterRangeError(f'Strategy has {len(strategy.x)} parties, functional has {f.n}')
    total = ZERO
    for l in range(f.n):
        t = sum(1 for i, z in enumerate(strategy.z) if i != l and z < 0)
        total += f.bracket(t) * strategy.x[l]
    return total


def _best_split(f):
    """(value, minus_count) maximizing T |b(T-1)| + (n-T) |b(T)| over T in [0, n]."""
    brackets = [abs(f.bracket(t)) for t in range(f.n)]
    best = None
    for minus in range(f.n + 1):
        value = ZERO
        if minus:
            value += brackets[minus - 1] * minus
        if minus < f.n:
            value += brackets[minus] * (f.n - minus)
        if best is None or value > best[0]:
            best = (value, minus)
    return best


def classical_bound(f):
    """
    Maximum over deterministic strategies, by permutation symmetry: only the
    number of -1 answers to setting 1 matters, and x_l follows the bracket's sign.
    """
    require_cap('n', f.n, cap('BELL_FAST_MAX'))
    return _best_split(f)[0]


def optimal_strategy(f):
    """A deterministic strategy reaching the classical bound."""
    require_cap('n', f.n, cap('BELL_FAST_MAX'))
    _, minus = _best_split(f)
    z = tuple(-1 if i < minus else 1 for i in range(f.n))
    x = tuple(
        -1 if f.bracket(minus - 1 if z[l] < 0 else minus) < 0 else 1
        for l in range(f.n)
    )
    return DeterministicStrategy(x=x, z=z)


def _bracket_table(f):
    """numerators[l, Z] / 2^exponent: bracket of party l for the -1 set Z."""
    rows = []
    exponent = 0
    for l in range(1, f.n + 1):
        diagonal, e = expanded_stabilizer(f.n, f.profile, l).z_diagonal()
        rows.append((diagonal, e))
        exponent = max(exponent, e)
    table = np.stack([diagonal << (exponent - e) for diagonal, e in rows])
    return table, exponent


def classical_bound_exhaustive(f):
    """The same maximum by enumerating all 4^n deterministic strategies."""
    require_cap('n', f.n, cap('BELL_EXHAUSTIVE_MAX'))
    table, exponent = _bracket_table(f)
    xs = np.array(
        [[1 - 2 * ((x >> l) & 1) for l in range(f.n)] for x in range(1 << f.n)],
        dtype=np.int64,
    )
    best = None
    for start in range(0, table.shape[1], _EXHAUSTIVE_BLOCK):
        block_max = int((xs @ table[:, start:start + _EXHAUSTIVE_BLOCK]).max())
        best = block_max if best is None else max(best, block_max)
    return DyadicRational(best, exponent)


def quantum_value(f, h):
    """sum_l <H| g_l |H> with g_l in expanded form."""
    require_cap('n', h.n, cap('ZX_MAX_QUBITS'))
    if h != complete_k_uniform(f.n, f.profile):
        raise InvalidProfileError(
            f'Hypergraph {h!r} is not the complete ({f.profile})-uniform hypergraph on {f.n} vertices'
        )
    state = build_state(h)
    signs = [int(s) for s in state.signs]
    total = ZERO
    for l in range(1, h.n + 1):
        amplitudes = apply_zx_polynomial(state, expanded_stabilizer(h.n, f.profile, l))
        total += dyadic_sum(a * s for a, s in zip(amplitudes, signs))
    return total.scaled(-h.n)


@dataclass(frozen=True)
class ViolationRow:
    n: int
    k: int
    classical_bound: DyadicRational
    quantum_value: DyadicRational
    exhaustive_bound: object = None

    @property
    def violated(self):
        return self.quantum_value > self.classical_bound

    @property
    def oracle_mismatch(self):
        return self.exhaustive_bound is not None and self.exhaustive_bound != self.classical_bound


@dataclass
class ViolationReport:
    rows: list
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def violation_row(n, k, cross_check=False):
    """
    Classical bound and quantum value for one pair (n, k). With cross_check,
    the enumerated bound is added when n is within the exhaustive cap.
    """
    profile = UniformityProfile((k,))
    f = bell_functional(n, profile)
    exhaustive = None
    if cross_check and n <= cap('BELL_EXHAUSTIVE_MAX'):
        exhaustive = classical_bound_exhaustive(f)
    return ViolationRow(
        n=n,
        k=k,
        classical_bound=classical_bound(f),
        quantum_value=quantum_value(f, complete_k_uniform(n, profile)),
        exhaustive_bound=exhaustive,
    )


def violation_report(n_max, k_max, cross_check=False):
    """
    Classical bound vs quantum value for 2 <= k <= n <= n_max, k <= k_max.
    A violation with k > 2, a quantum value other than n, or a fast/exhaustive
    mismatch is surfaced in `violations`.
    """
    if n_max < 2 or k_max < 2:
        raise ParameterRangeError(f'Report needs n_max >= 2 and k_max >= 2, got {n_max}, {k_max}')
    require_cap('n_max', n_max, cap('ZX_MAX_QUBITS'))
    rows = []
    violations = []
    for n in range(2, n_max + 1):
        for k in range(2, min(k_max, n) + 1):
            row = violation_row(n, k, cross_check=cross_check)
            rows.append(row)
            if row.violated and k > 2:
                logger.warning(
                    f"Bell violation at n={n}, k={k}: quantum {row.quantum_value} "
                    f"> classical {row.classical_bound}"
                )
                violations.append((n, k, 'violated'))
            if row.quantum_value != n:
                logger.warning(f"Quantum value {row.quantum_value} != {n} at n={n}, k={k}")
                violations.append((n, k, 'quantum_value'))
            if row.oracle_mismatch:
                logger.warning(
                    f"Classical bound mismatch at n={n}, k={k}: fast {row.classical_bound} "
                    f"!= exhaustive {row.exhaustive_bound}"
                )
                violations.append((n, k, 'oracle_mismatch'))
    logger.info(f"Bell report n<={n_max}, k<={k_max}: {len(rows)} rows, {len(violations)} findings")
    return ViolationReport(rows=rows, violations=violations)
