import numpy as np
from django.test import SimpleTestCase, override_settings

from stabilizers import expansion
from stabilizers.dyadic import ONE, DyadicRational, dyadic_sum
from stabilizers.exceptions import CapExceededError, ParameterRangeError, VertexRangeError
from stabilizers.models import Hypergraph, UniformityProfile, VertexSet, complete_k_uniform
from stabilizers.statevector import (
    ProbeState,
    SignState,
    apply_cz,
    apply_x,
    build_complete_state,
    build_state,
    conjugated_stabilizer,
    direct_stabilizer,
    edge_count_grid,
    expectation_zx,
    probe_expectation_direct,
    projector_product_form,
    projector_sum,
    stabilizer_matrix,
    stabilizer_product,
    stabilizer_trace,
    state_projector,
)

K3 = UniformityProfile((3,))


def profiles_for(n):
    """Single and two-uniformity complete profiles, n >= 3."""
    return [UniformityProfile((2,)), K3, UniformityProfile((n,)), UniformityProfile((2, n))]


class BuildStateTests(SimpleTestCase):

    def test_single_edge(self):
        state = build_state(Hypergraph(3, [[1, 2, 3]]))
        self.assertEqual(state.signs.tolist(), [1, 1, 1, 1, 1, 1, 1, -1])
        self.assertEqual(state.negative_indices(), [7])

    def test_graph_state_on_two_qubits(self):
        state = build_state(Hypergraph(2, [[1, 2]]))
        self.assertEqual(state.signs.tolist(), [1, 1, 1, -1])

    def test_sign_is_parity_of_edge_count(self):
        h = Hypergraph(4, [[1, 2], [2, 3, 4], [1, 4]])
        grid = np.array(edge_count_grid(h))
        self.assertTrue(np.array_equal(build_state(h).signs, 1 - 2 * (grid % 2)))

    def test_complete_fast_path(self):
        for n in range(3, 7):
            for profile in profiles_for(n):
                self.assertEqual(
                    build_complete_state(n, profile),
                    build_state(complete_k_uniform(n, profile)),
                )

    def test_signs_are_read_only(self):
        state = SignState.plus(2)
        with self.assertRaises(ValueError):
            state.signs[0] = -1

    @override_settings(STABILIZERS_DENSE_MAX_QUBITS=4)
    def test_dense_cap(self):
        with self.assertRaises(CapExceededError) as cm:
            build_state(Hypergraph(5))
        self.assertEqual(cm.exception.code, 'cap_exceeded')


class GateTests(SimpleTestCase):

    def test_gates_are_involutions(self):
        state = build_state(complete_k_uniform(4, K3))
        self.assertEqual(apply_cz(apply_cz(state, [1, 3, 4]), [1, 3, 4]), state)
        self.assertEqual(apply_x(apply_x(state, 2), 2), state)

    def test_single_vertex_cz_is_z(self):
        plus = SignState.plus(2)
        self.assertEqual(apply_cz(plus, [2]).signs.tolist(), [1, 1, -1, -1])

    def test_range_checks(self):
        plus = SignState.plus(3)
        with self.assertRaises(VertexRangeError):
            apply_cz(plus, [1, 4])
        with self.assertRaises(VertexRangeError):
            apply_cz(plus, [])
        with self.assertRaises(VertexRangeError):
            apply_x(plus, 0)


class StabilizerTests(SimpleTestCase):

    def test_every_generator_fixes_the_state(self):
        for n in range(2, 11):
            for k in range(2, n + 1):
                h = complete_k_uniform(n, UniformityProfile((k,)))
                state = build_state(h)
                for l in range(1, n + 1):
                    self.assertEqual(direct_stabilizer(state, h, l), state, f'n={n} k={k} l={l}')

    def test_every_product_fixes_the_state(self):
        for n in range(2, 9):
            for k in range(2, n + 1):
                h = complete_k_uniform(n, UniformityProfile((k,)))
                state = build_state(h)
                for x in range(1 << n):
                    self.assertEqual(stabilizer_product(state, h, x), state)

    def test_product_accepts_bit_sequence(self):
        h = complete_k_uniform(3, K3)
        plus = SignState.plus(3)
        self.assertEqual(stabilizer_product(plus, h, [1, 0, 1]), stabilizer_product(plus, h, 0b101))
        with self.assertRaises(VertexRangeError):
            stabilizer_product(plus, h, [1, 0])

    def test_conjugated_form_on_a_general_hypergraph(self):
        h = Hypergraph(5, [[1, 2], [2, 3, 4], [1, 4, 5], [3, 5]])
        state = build_state(Hypergraph(5, [[1, 3]]))
        for l in range(1, 6):
            self.assertEqual(conjugated_stabilizer(state, h, l), direct_stabilizer(state, h, l))

    def test_traceless_involutions_that_commute(self):
        h = complete_k_uniform(5, K3)
        identity = np.eye(32, dtype=np.int64)
        matrices = [stabilizer_matrix(h, l) for l in range(1, 6)]
        for l, g in enumerate(matrices, start=1):
            self.assertEqual(stabilizer_trace(h, l), 0)
            self.assertTrue(np.array_equal(g @ g, identity))
            for other in matrices:
                self.assertTrue(np.array_equal(g @ other, other @ g))

    def test_projector_identity(self):
        for n in range(2, 5):
            for k in sorted({2, 3, n}):
                if k > n:
                    continue
                h = complete_k_uniform(n, UniformityProfile((k,)))
                expected = state_projector(build_state(h))
                self.assertTrue(np.array_equal(projector_sum(h), expected))
                self.assertTrue(np.array_equal(projector_product_form(h), expected))

    def test_projector_cap(self):
        with self.assertRaises(CapExceededError):
            projector_sum(complete_k_uniform(5, K3))


class ExpectationTests(SimpleTestCase):

    def test_expanded_generator_has_unit_expectation(self):
        n = 4
        state = build_state(complete_k_uniform(n, K3))
        local = expansion.coefficients(n, K3)
        for l in range(1, n + 1):
            others = [v for v in range(1, n + 1) if v != l]
            terms = []
            for bits in range(1 << (n - 1)):
                v = VertexSet.of(u for i, u in enumerate(others) if bits >> i & 1)
                terms.append(local.coeffs[len(v)] * expectation_zx(state, l, v))
            self.assertEqual(dyadic_sum(terms), ONE)

    def test_expectation_zx_rejects_overlap(self):
        with self.assertRaises(VertexRangeError):
            expectation_zx(SignState.plus(3), 2, [2, 3])

    def test_dense_state_matches_dual_formula(self):
        for n in range(3, 9):
            for profile in profiles_for(n):
                h = complete_k_uniform(n, profile)
                for m in range(n):
                    expected = expansion.f_k(n, profile, m)
                    self.assertEqual(ProbeState(m, n).expectation(h), expected)
                    self.assertEqual(probe_expectation_direct(n, profile, m), expected)

    def test_tau_sum_matches_dual_formula_up_to_20(self):
        for n in range(2, 21):
            ks = range(2, n + 1)
            profiles = [UniformityProfile((k,)) for k in ks]
            profiles += [UniformityProfile((k1, k2)) for k1 in ks for k2 in ks if k1 < k2]
            for profile in profiles:
                for m in range(n):
                    self.assertEqual(
                        probe_expectation_direct(n, profile, m),
                        expansion.f_k(n, profile, m),
                        f'n={n} k=({profile}) m={m}',
                    )

    def test_four_qubit_expectations(self):
        self.assertEqual(
            [probe_expectation_direct(4, K3, m) for m in range(4)],
            [0, DyadicRational(1, 1), 1, 1],
        )

    def test_expectation_range(self):
        with self.assertRaises(ParameterRangeError):
            ProbeState(4, 4)
        with self.assertRaises(ParameterRangeError):
            probe_expectation_direct(4, K3, -1)
