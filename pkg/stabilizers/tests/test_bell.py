from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from stabilizers.bell import (
    DeterministicStrategy,
    bell_functional,
    classical_bound,
    classical_bound_exhaustive,
    evaluate,
    optimal_strategy,
    quantum_value,
    violation_report,
)
from stabilizers.exceptions import CapExceededError, InvalidProfileError, ParameterRangeError
from stabilizers.models import Hypergraph, UniformityProfile, complete_k_uniform

K3 = UniformityProfile((3,))


class ClassicalBoundTests(SimpleTestCase):

    def test_spot_values(self):
        self.assertEqual(classical_bound(bell_functional(4, K3)), 4)
        self.assertEqual(classical_bound(bell_functional(3, K3)), 3)

    def test_brackets_for_four_qubits(self):
        f = bell_functional(4, K3)
        self.assertEqual([abs(f.bracket(t)) for t in range(4)], [1, 1, 1, 1])

    def test_all_plus_strategy_scores_n(self):
        for n in range(2, 9):
            for k in range(2, n + 1):
                f = bell_functional(n, UniformityProfile((k,)))
                strategy = DeterministicStrategy(x=(1,) * n, z=(1,) * n)
                self.assertEqual(evaluate(f, strategy), n)

    def test_fast_path_matches_enumeration(self):
        for n in range(2, 9):
            for k in range(2, n + 1):
                f = bell_functional(n, UniformityProfile((k,)))
                self.assertEqual(classical_bound(f), classical_bound_exhaustive(f), f'n={n} k={k}')

    def test_fast_path_matches_enumeration_up_to_12(self):
        for n in range(9, 13):
            for k in range(2, n + 1):
                f = bell_functional(n, UniformityProfile((k,)))
                self.assertEqual(classical_bound(f), classical_bound_exhaustive(f), f'n={n} k={k}')

    def test_fast_path_matches_enumeration_for_two_uniformities(self):
        for n in range(3, 8):
            for k1 in range(2, n):
                for k2 in range(k1 + 1, n + 1):
                    f = bell_functional(n, UniformityProfile((k1, k2)))
                    self.assertEqual(
                        classical_bound(f), classical_bound_exhaustive(f), f'n={n} k=({k1},{k2})',
                    )

    @given(st.integers(min_value=2, max_value=7).flatmap(lambda n: st.tuples(
        st.just(n),
        st.integers(2, n),
        st.permutations(range(n)),
        st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
        st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
    )))
    def test_value_is_invariant_under_relabeling(self, case):
        n, k, order, x, z = case
        f = bell_functional(n, UniformityProfile((k,)))
        strategy = DeterministicStrategy(x=tuple(x), z=tuple(z))
        relabeled = DeterministicStrategy(x=tuple(x[i] for i in order), z=tuple(z[i] for i in order))
        self.assertEqual(evaluate(f, relabeled), evaluate(f, strategy))
        self.assertLessEqual(evaluate(f, relabeled), classical_bound(f))

    def test_relabeled_optimal_strategy_reaches_the_bound(self):
        for n in range(2, 8):
            for k in range(2, n + 1):
                f = bell_functional(n, UniformityProfile((k,)))
                best = optimal_strategy(f)
                order = list(range(1, n)) + [0]
                rotated = DeterministicStrategy(
                    x=tuple(best.x[i] for i in order), z=tuple(best.z[i] for i in order),
                )
                self.assertEqual(evaluate(f, rotated), classical_bound(f), f'n={n} k={k}')

    def test_optimal_strategy_reaches_the_bound(self):
        for n, k in ((4, 3), (5, 3), (6, 4), (7, 3), (6, 2)):
            f = bell_functional(n, UniformityProfile((k,)))
            self.assertEqual(evaluate(f, optimal_strategy(f)), classical_bound(f))

    def test_strategy_validation(self):
        with self.assertRaises(ParameterRangeError):
            DeterministicStrategy(x=(1, 1), z=(1,))
        with self.assertRaises(ParameterRangeError):
            DeterministicStrategy(x=(1, 0), z=(1, 1))
        with self.assertRaises(ParameterRangeError):
            evaluate(bell_functional(3, K3), DeterministicStrategy(x=(1, 1), z=(1, 1)))

    def test_exhaustive_cap(self):
        with self.assertRaises(CapExceededError):
            classical_bound_exhaustive(bell_functional(13, K3))


class QuantumValueTests(SimpleTestCase):

    def test_value_is_n(self):
        for n in range(2, 9):
            for k in range(2, n + 1):
                profile = UniformityProfile((k,))
                f = bell_functional(n, profile)
                self.assertEqual(quantum_value(f, complete_k_uniform(n, profile)), n)

    def test_rejects_other_hypergraphs(self):
        with self.assertRaises(InvalidProfileError):
            quantum_value(bell_functional(3, K3), Hypergraph(3, [[1, 2]]))


class ViolationReportTests(SimpleTestCase):

    def test_no_violation_for_hypergraph_states(self):
        report = violation_report(10, 10, cross_check=True)
        self.assertTrue(report.ok, report.violations)
        for row in report.rows:
            self.assertEqual(row.quantum_value, row.n)
            self.assertFalse(row.oracle_mismatch)
            if row.k > 2:
                self.assertGreaterEqual(row.classical_bound, row.quantum_value)
                self.assertFalse(row.violated)

    def test_range(self):
        with self.assertRaises(ParameterRangeError):
            violation_report(1, 3)
        with self.assertRaises(CapExceededError):
            violation_report(15, 3)
