from django.test import SimpleTestCase

from stabilizers import verification
from stabilizers.models import UniformityProfile


class SuiteTests(SimpleTestCase):

    def test_all_suites_pass_for_four_qubits(self):
        results = verification.run_suites(4, UniformityProfile((3,)))
        self.assertEqual([r.name for r in results], [
            'stabilization', 'stabilizer_group', 'expansion_equivalence',
            'dual_formula', 'projector', 'bell', 'c0_criterion',
        ])
        for result in results:
            self.assertTrue(result.passed, result.failures)
            self.assertFalse(result.skipped)
            self.assertGreater(result.checked, 0)

    def test_two_uniformity_profile(self):
        results = verification.run_suites(5, UniformityProfile((2, 4)))
        self.assertTrue(all(r.passed for r in results))
        c0 = next(r for r in results if r.name == 'c0_criterion')
        self.assertEqual(c0.skipped, 'single k >= 3 only')

    def test_large_n_skips_dense_suites(self):
        result = verification.group_suite(10, UniformityProfile((3,)))
        self.assertTrue(result.skipped)
        self.assertEqual(result.checked, 0)

    def test_binomial_suite(self):
        result = verification.binomial_suite()
        self.assertTrue(result.passed)
        self.assertEqual(result.checked, sum(m + 1 for m in range(31)))

    def test_failed_check_is_recorded(self):
        result = verification.SuiteResult(name='demo')
        self.assertFalse(result.check(False, 'broken'))
        self.assertEqual(result.failures, ['broken'])
        self.assertFalse(result.passed)

    def test_sweep(self):
        results = verification.run_sweep(5, 3)
        self.assertTrue(all(r.passed for r in results))
        self.assertEqual(results[-1].name, 'binomial_identity')
        self.assertEqual(len(results), 7 * 7 + 1)
