"""
Cross-module property suites.

Each suite checks one family of identities for a given (n, profile) and
returns a SuiteResult; a failed check is recorded, never raised, so a single
`verify` run reports every failure at once.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from . import bell, expansion, statevector
from .apps import cap
from .dyadic import alt_binom_identity
from .exceptions import IdentityViolation
from .models import UniformityProfile, complete_k_uniform

logger = logging.getLogger(__name__)

# Largest n for the general Z-string algebra oracle; it multiplies every CZ of N(l)
GENERAL_ORACLE_MAX = 8
COMMUTATION_MAX = 8
STABILIZATION_MAX = 12
BINOMIAL_IDENTITY_MAX = 30


@dataclass
class SuiteResult:
    name: str
    n: int = 0
    profile: str = ''
    checked: int = 0
    failures: list = field(default_factory=list)
    skipped: str = ''

    @property
    def passed(self):
        return not self.failures

    def check(self, condition, message):
        """Count one check; record and log the message when it fails."""
        self.checked += 1
        if not condition:
            self.failures.append(message)
            logger.warning(f"[{self.name} n={self.n} k=({self.profile})] {message}")
        return condition

    def skip(self, reason):
        self.skipped = reason
        return self


def _result(name, n, profile):
    return SuiteResult(name=name, n=n, profile=str(profile))


def stabilization_suite(n, profile):
    """g_l fixes |H>; direct, conjugated and squared forms agree."""
    result = _result('stabilization', n, profile)
    if n > STABILIZATION_MAX:
        return result.skip(f'n > {STABILIZATION_MAX}')
    h = complete_k_uniform(n, profile)
    state = statevector.build_state(h)
    result.check(state == statevector.build_complete_state(n, profile), 'closed-form state differs')
    plus = statevector.SignState.plus(n)
    for l in range(1, n + 1):
        image = statevector.direct_stabilizer(state, h, l)
        result.check(image == state, f'g_{l} does not fix |H>')
        result.check(
            statevector.conjugated_stabilizer(plus, h, l) == statevector.direct_stabilizer(plus, h, l),
            f'conjugated g_{l} differs from the direct form',
        )
        result.check(
            statevector.direct_stabilizer(statevector.direct_stabilizer(plus, h, l), h, l) == plus,
            f'g_{l} squared is not the identity',
        )
        result.check(statevector.stabilizer_trace(h, l) == 0, f'g_{l} is not traceless')
    if n <= COMMUTATION_MAX:
        matrices = [statevector.stabilizer_matrix(h, l) for l in range(1, n + 1)]
        for i in range(n):
            for j in range(i + 1, n):
                result.check(
                    np.array_equal(matrices[i] @ matrices[j], matrices[j] @ matrices[i]),
                    f'g_{i + 1} and g_{j + 1} do not commute',
                )
    return result


def group_suite(n, profile):
    """Every S_x fixes |H>."""
    result = _result('stabilizer_group', n, profile)
    if n > COMMUTATION_MAX:
        return result.skip(f'n > {COMMUTATION_MAX}')
    h = complete_k_uniform(n, profile)
    state = statevector.build_state(h)
    for x in range(1 << n):
        result.check(statevector.stabilizer_product(state, h, x) == state, f'S_{x:0{n}b} does not fix |H>')
    return result


def expansion_suite(n, profile):
    """Expanded and direct stabilizers act identically on every basis state."""
    result = _result('expansion_equivalence', n, profile)
    if n > cap('ZX_MAX_QUBITS'):
        return result.skip('expanded operator cap')
    h = complete_k_uniform(n, profile)
    for l in range(1, n + 1):
        p = expansion.expanded_stabilizer(n, profile, l)
        targets, diagonal, exponent = expansion.zx_basis_action(p)
        direct_targets, phases = statevector.basis_action(h, l)
        result.check(np.array_equal(targets, direct_targets), f'g_{l}: X site differs')
        result.check(
            np.array_equal(diagonal, phases << exponent),
            f'g_{l}: expanded and direct phases differ',
        )
        if n <= GENERAL_ORACLE_MAX:
            general = expansion.general_stabilizer(h, l)
            result.check(
                general.nonzero_terms() == p.nonzero_terms(),
                f'g_{l}: Z-string algebra disagrees with the coefficient table',
            )
    return result


def dual_formula_suite(n, profile):
    """f_k equals the literal probe sum, the dense probe, and the master identity."""
    result = _result('dual_formula', n, profile)
    local = expansion.coefficients(n, profile)
    try:
        local.check_master_identity()
        result.check(True, 'master identity')
    except IdentityViolation as e:
        result.check(False, str(e))
    h = complete_k_uniform(n, profile) if n <= cap('MATRIX_MAX_QUBITS') else None
    for m in range(n):
        value = expansion.f_k(n, profile, m)
        if n - m - 1 <= cap('PROBE_MAX_WIDTH'):
            direct = statevector.probe_expectation_direct(n, profile, m)
            result.check(value == direct, f'f_k({m}) = {value} but the tau-sum gives {direct}')
        if h is not None:
            dense = statevector.ProbeState(m, n).expectation(h)
            result.check(value == dense, f'f_k({m}) = {value} but the dense probe gives {dense}')
    return result


def projector_suite(n, profile):
    """(1/2^n) sum_x S_x = prod (I + g_i)/2 = |H><H|."""
    result = _result('projector', n, profile)
    if n > cap('PROJECTOR_MAX_QUBITS'):
        return result.skip('projector cap')
    h = complete_k_uniform(n, profile)
    expected = statevector.state_projector(statevector.build_state(h))
    result.check(np.array_equal(statevector.projector_sum(h), expected), 'group sum is not 2^n |H><H|')
    result.check(
        np.array_equal(statevector.projector_product_form(h), expected),
        'product form is not 2^n |H><H|',
    )
    return result


def bell_suite(n, profile):
    """Quantum value n, no violation, fast bound = exhaustive bound."""
    result = _result('bell', n, profile)
    if n > cap('ZX_MAX_QUBITS'):
        return result.skip('quantum value cap')
    f = bell.bell_functional(n, profile)
    bound = bell.classical_bound(f)
    value = bell.quantum_value(f, complete_k_uniform(n, profile))
    result.check(value == n, f'quantum value {value} != {n}')
    result.check(bound >= value, f'classical bound {bound} < quantum value {value}')
    result.check(bell.evaluate(f, bell.optimal_strategy(f)) == bound, 'optimal strategy misses the bound')
    if n <= cap('BELL_EXHAUSTIVE_MAX'):
        exhaustive = bell.classical_bound_exhaustive(f)
        result.check(exhaustive == bound, f'fast bound {bound} != exhaustive {exhaustive}')
    return result


def c0_suite(n, profile):
    """Exact C_0 = 0 matches the criterion for single k >= 3."""
    result = _result('c0_criterion', n, profile)
    if not profile.is_single or profile.ks[0] < 3:
        return result.skip('single k >= 3 only')
    row = expansion.scan_row(n, profile.ks[0])
    result.check(not row.c0_discrepancy, f'exact C_0 = 0 is {row.c0_is_zero_exact}, criterion {row.c0_predicate}')
    result.check(row.c0_pairing == row.c0_predicate, 'pairing condition disagrees with the criterion')
    return result


def binomial_suite(m_max=BINOMIAL_IDENTITY_MAX):
    """The alternating binomial identity with sign (-1)^m."""
    result = SuiteResult(name='binomial_identity')
    for m in range(m_max + 1):
        for r in range(m + 1):
            try:
                alt_binom_identity(m, r)
                result.check(True, '')
            except IdentityViolation as e:
                result.check(False, str(e))
    return result


SUITES = (
    stabilization_suite,
    group_suite,
    expansion_suite,
    dual_formula_suite,
    projector_suite,
    bell_suite,
    c0_suite,
)


def run_suites(n, profile):
    """
    Run every suite for one (n, profile) pair and log a summary line per suite.

    Suites above their own size limits come back skipped, not failed.
    """
    profile.validate_for(n)
    results = [suite(n, profile) for suite in SUITES]
    for result in results:
        note = f' (skipped: {result.skipped})' if result.skipped else ''
        logger.info(
            f"{result.name} n={n} k=({profile}): {result.checked} checks, "
            f"{len(result.failures)} failures{note}"
        )
    return results


def run_sweep(n_max, k_max):
    """Every suite for 2 <= k <= n <= n_max, k <= k_max, then the binomial identity."""
    results = []
    for n in range(2, n_max + 1):
        for k in range(2, min(k_max, n) + 1):
            results.extend(run_suites(n, UniformityProfile((k,))))
    results.append(binomial_suite())
    return results
