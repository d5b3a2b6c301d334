import math

from parameterized import parameterized

import tensorflow as tf

from excitonring import analytic
from excitonring import errors
from excitonring import optics
from excitonring.tests import test_util


class OpticsTest(tf.test.TestCase):

  def testSelectionRule(self):
    self.assertEqual(optics.selection_rule([0], [3, 9], 6), (True, -1))
    self.assertEqual(optics.selection_rule([0], [1, 11], 6), (True, -1))
    self.assertEqual(optics.selection_rule([2], [1, 3], 6), (False, None))
    self.assertEqual(optics.selection_rule([4], [1, 3], 6), (True, 0))
    self.assertEqual(optics.selection_rule([], [0], 6), (True, 0))
    self.assertEqual(optics.selection_rule([], [2], 6), (False, None))

  def testSelectionRuleInvalidPair(self):
    with self.assertRaises(errors.InvalidManifoldPairError):
      optics.selection_rule([0], [1], 6)
    with self.assertRaises(errors.InvalidManifoldPairError):
      optics.selection_rule([1], [1, 3], 6)
    with self.assertRaises(errors.InvalidManifoldPairError):
      optics.selection_rule([0], [3, 3], 6)
    with self.assertRaises(errors.InvalidManifoldPairError):
      optics.selection_rule([0], [3, 13], 6)

  def testClosedFormExamples(self):
    self.assertAlmostEqual(optics.gamma12_closed_form(6, 0, 3, 9), 2 / 3)
    n_sites = 6
    expected = (test_util.cot(-7 * math.pi / 12)
                + test_util.cot((0 - 7) * math.pi / 12)) ** 2 / n_sites
    self.assertAlmostEqual(optics.gamma12_closed_form(6, 0, 5, 7), expected)
    spec = test_util.uniform_ring(6)
    bright = analytic.ManifoldState(labels=(0,), energy=2.0)
    target = analytic.ManifoldState(labels=(5, 7), energy=-2 * 3 ** 0.5)
    self.assertNear(optics.gamma12_closed_form(6, 0, 5, 7),
                    optics.dipole_oracle(spec, bright, target), 1e-10)

  def testClosedFormIsSymmetric(self):
    for n_sites in range(3, 11):
      for k in range(0, 2 * n_sites, 2):
        for s1 in range(1, 2 * n_sites, 2):
          for s2 in range(s1 + 2, 2 * n_sites, 2):
            if not optics.selection_rule([k], [s1, s2], n_sites)[0]:
              continue
            self.assertNear(optics.gamma12_closed_form(n_sites, k, s1, s2),
                            optics.gamma12_closed_form(n_sites, k, s2, s1), 1e-10)

  def testClosedFormForbidden(self):
    with self.assertRaises(errors.SelectionRuleViolatedError):
      optics.gamma12_closed_form(6, 2, 1, 3)
    with self.assertRaises(errors.SelectionRuleViolatedError):
      optics.gamma12_closed_form(6, 0, 3, 3)

  @parameterized.expand([(n_sites,) for n_sites in range(3, 11)])
  def testSelectionRuleMatchesOracle(self, n_sites):
    spec = test_util.uniform_ring(n_sites)
    for n in (0, 1, 2):
      if n + 1 > n_sites:
        continue
      for record in optics.transition_table(spec, n):
        self.assertEqual(record.rule_allowed, not optics.is_forbidden(record.dipole_oracle),
                         msg="%s -> %s" % (record.from_state.labels, record.to_state.labels))

  @parameterized.expand([(n_sites,) for n_sites in range(3, 11)])
  def testClosedFormMatchesOracle(self, n_sites):
    spec = test_util.uniform_ring(n_sites)
    records = optics.transition_table(spec, 1, only_allowed=True)
    self.assertLen(records, n_sites * (n_sites - 1) // 2)
    for record in records:
      self.assertNear(record.dipole_closed_form, record.dipole_oracle,
                      1e-10 * max(1.0, record.dipole_oracle))

  @parameterized.expand([(n_sites,) for n_sites in range(3, 13)])
  def testOnlyZeroMomentumIsBright(self, n_sites):
    spec = test_util.uniform_ring(n_sites)
    _, to_states, dipoles = optics.dipole_matrix(spec, 0)
    for state, dipole in zip(to_states, dipoles[0]):
      if state.labels == (0,):
        self.assertNear(dipole, n_sites, 1e-10)
      else:
        self.assertTrue(optics.is_forbidden(dipole))

  @parameterized.expand([(n_sites,) for n_sites in range(3, 13)])
  def testCategoryMatchesEqualComponentEnergies(self, n_sites):
    spec = test_util.uniform_ring(n_sites)
    for state in analytic.manifold_states(spec, 2):
      s1, s2 = state.labels
      equal = abs(analytic.component_energy(spec, s1)
                  - analytic.component_energy(spec, s2)) <= 1e-12
      category = optics.classify_double(spec, state)
      self.assertEqual(category, optics.momentum_category(state.labels, n_sites))
      self.assertEqual(category == optics.Category.BRIGHT_COUPLED, equal)

  def testBrightCoupledCount(self):
    for n_sites in range(3, 13):
      spec = test_util.uniform_ring(n_sites)
      bright = [state for state in analytic.manifold_states(spec, 2)
                if optics.classify_double(spec, state) == optics.Category.BRIGHT_COUPLED]
      self.assertLen(bright, n_sites // 2)

  def testClassifyRequiresDoubleExcitation(self):
    spec = test_util.uniform_ring(6)
    with self.assertRaises(errors.InvalidManifoldError):
      optics.classify_double(spec, analytic.manifold_states(spec, 1)[0])

  def testTransitionTableSizes(self):
    self.assertLen(optics.transition_table(test_util.uniform_ring(6), 1), 90)
    self.assertLen(optics.transition_table(test_util.uniform_ring(4), 2), 24)
    allowed = [
        record for record in optics.transition_table(test_util.uniform_ring(3), 1)
        if record.from_state.labels == (0,) and record.rule_allowed]
    self.assertEqual([record.to_state.labels for record in allowed], [(1, 5)])

  def testTransitionRecordToDict(self):
    spec = test_util.uniform_ring(6)
    records = optics.transition_table(spec, 1, only_allowed=True)
    record = [r for r in records if r.from_state.labels == (0,) and r.to_state.labels == (3, 9)]
    self.assertLen(record, 1)
    values = record[0].to_dict()
    self.assertEqual(list(values), [
        "from_labels", "to_labels", "allowed", "m", "dipole_oracle", "dipole_closed_form"])
    self.assertEqual(values["m"], -1)
    self.assertAlmostEqual(values["dipole_closed_form"], 2 / 3)
    self.assertAlmostEqual(values["dipole_oracle"], 2 / 3)
    forbidden = [r for r in optics.transition_table(spec, 1) if not r.rule_allowed][0]
    self.assertIsNone(forbidden.to_dict()["m"])
    self.assertIsNone(forbidden.to_dict()["dipole_closed_form"])

  def testRequiresUniformRing(self):
    spec = test_util.uniform_ring(4).with_couplings([1.0, 1.0, 1.0, 0.5])
    with self.assertRaises(errors.AnalyticRequiresUniformError):
      optics.transition_table(spec, 1)


if __name__ == "__main__":
  tf.test.main()
