import io
import os

from unittest import mock

from parameterized import parameterized

import tensorflow as tf
import yaml

from excitonring import fock
from excitonring.bin import main as main_lib
from excitonring.bin import merge_config
from excitonring.tests import test_util
from excitonring.version import __version__


class MainTest(tf.test.TestCase):

  def testSpectrum(self):
    exit_code, document = test_util.run_main_json(["spectrum", "-N", "6", "--log_level", "ERROR"])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertEqual(document["command"], "spectrum")
    self.assertEqual(document["tool_version"], __version__)
    self.assertAllClose(document["payload"]["energies"], [-2, -1, -1, 1, 1, 2])

  def testLadderWithOverrides(self):
    exit_code, document = test_util.run_main_json(
        ["ladder", "-N", "6", "--omega", "1", "--coupling", "0.5"])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertEqual(document["spec_echo"]["site_energy"], 1.0)
    zero_level = [row for row in document["payload"]["rows"] if row["mixed"]]
    self.assertLen(zero_level, 1)
    self.assertAlmostEqual(zero_level[0]["energy"], 2.0)

  def testSpecFile(self):
    config_path = test_util.make_config_file(
        os.path.join(self.get_temp_dir(), "ring.yml"), {"ring": {"n_sites": 10}})
    exit_code, document = test_util.run_main_json(["ladder", "--spec-file", config_path])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertEqual(document["spec_echo"]["n_sites"], 10)
    self.assertEqual([row["degeneracy"] for row in document["payload"]["rows"]
                      if row["mixed"]], [9])

  def testCSVOutput(self):
    exit_code, output = test_util.run_main(["transitions", "-N", "4", "--format", "csv"])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    lines = output.rstrip("\n").split("\n")
    self.assertEqual(lines[0], "from_labels,to_labels,allowed,m,dipole_oracle,dipole_closed_form")
    self.assertLen(lines, 1 + 4 * 6)

  def testJSONLinesOutput(self):
    exit_code, output = test_util.run_main(["scan", "--n-max", "8", "--format", "jsonl"])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertLen(output.rstrip("\n").split("\n"), 6)

  def testOutputFile(self):
    path = os.path.join(self.get_temp_dir(), "diagram.csv")
    exit_code, output = test_util.run_main(
        ["statediagram", "-N", "6", "--format", "csv", "--output", path])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertEqual(output, "")
    with open(path) as output_file:
      self.assertTrue(output_file.read().startswith("set,label,x,y\n"))

  def testDeterministicDisorder(self):
    argv = ["disorder", "-N", "6", "--eta", "1e-3", "--seeds", "3", "--seed", "11"]
    first = test_util.run_main(argv)
    second = test_util.run_main(argv)
    self.assertEqual(first, second)
    self.assertEqual(first[0], main_lib.EXIT_SUCCESS)

  @parameterized.expand([
      (["scan", "--n-max", "12"],),
      (["transitions", "-N", "6", "--format", "csv"],),
  ])
  def testRepeatedRunsAreIdentical(self, argv):
    first = test_util.run_main(argv)
    second = test_util.run_main(argv)
    self.assertEqual(first[0], main_lib.EXIT_SUCCESS)
    self.assertEqual(first[1], second[1])

  def testDisorderConfigSection(self):
    config_path = test_util.make_config_file(
        os.path.join(self.get_temp_dir(), "disorder.yml"),
        {"ring": {"n_sites": 6}, "disorder": {"mode": "coupling", "seeds": 2, "seed": 4}})
    exit_code, document = test_util.run_main_json(["disorder", "--spec-file", config_path])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertEqual(document["seed"], 4)
    self.assertEqual(document["payload"]["mode"], "coupling")
    self.assertEqual([row["seed"] for row in document["payload"]["rows"]], [4, 5])

  def testMissingRing(self):
    exit_code, document = test_util.run_main_json(["spectrum"])
    self.assertEqual(exit_code, main_lib.EXIT_USAGE_ERROR)
    self.assertEqual(document["error"]["code"], "invalid-spec")
    self.assertEqual(document["command"], "spectrum")

  @parameterized.expand([
      ({"n_sites": 6.0, "coupling": 1},),
      ({"n_sites": "6", "coupling": 1},),
      ({"n_sites": 6, "couplings": 1.0},),
  ])
  def testMalformedSpecFile(self, ring):
    config_path = test_util.make_config_file(
        os.path.join(self.get_temp_dir(), "malformed.yml"), {"ring": ring})
    exit_code, document = test_util.run_main_json(["spectrum", "--spec-file", config_path])
    self.assertEqual(exit_code, main_lib.EXIT_USAGE_ERROR)
    self.assertEqual(document["error"]["code"], "invalid-spec")
    self.assertEqual(document["command"], "spectrum")

  def testInvalidSize(self):
    exit_code, document = test_util.run_main_json(["spectrum", "-N", "2"])
    self.assertEqual(exit_code, main_lib.EXIT_USAGE_ERROR)
    self.assertEqual(document["error"]["code"], "invalid-size")

  def testAnalyticOnNonUniformRing(self):
    config_path = test_util.make_config_file(
        os.path.join(self.get_temp_dir(), "bonds.yml"),
        {"ring": {"n_sites": 4, "couplings": [1.0, 1.0, 1.0, 0.5]}})
    exit_code, document = test_util.run_main_json(["spectrum", "--spec-file", config_path])
    self.assertEqual(exit_code, main_lib.EXIT_USAGE_ERROR)
    self.assertEqual(document["error"]["code"], "analytic-requires-uniform")
    exit_code, document = test_util.run_main_json(
        ["spectrum", "--spec-file", config_path, "--method", "oracle"])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertLen(document["payload"]["energies"], 4)

  def testNoAccidentalLevel(self):
    exit_code, document = test_util.run_main_json(["disorder", "-N", "8"])
    self.assertEqual(exit_code, main_lib.EXIT_USAGE_ERROR)
    self.assertEqual(document["error"]["code"], "no-accidental-level")
    exit_code, document = test_util.run_main_json(
        ["disorder", "-N", "8", "--mode", "coupling", "--seeds", "1", "--exploratory"])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertFalse(document["payload"]["all_preserved"])

  def testNonTabularFormat(self):
    exit_code, document = test_util.run_main_json(["dump", "-N", "3", "--format", "csv"])
    self.assertEqual(exit_code, main_lib.EXIT_USAGE_ERROR)
    self.assertIn("no tabular output", document["error"]["message"])

  def testVerify(self):
    exit_code, document = test_util.run_main_json(["verify", "--n-max", "5", "--json"])
    self.assertEqual(exit_code, main_lib.EXIT_SUCCESS)
    self.assertTrue(document["payload"]["passed"])

  def testVerifyFailure(self):
    build_hamiltonian = fock.build_hamiltonian

    def _flipped(spec, n):
      return fock.HermitianMatrix(-build_hamiltonian(spec, n).matrix)

    with mock.patch.object(fock, "build_hamiltonian", _flipped):
      exit_code, document = test_util.run_main_json(
          ["verify", "--n-max", "4", "--property", "eigenstate_residuals", "orthonormality"])
    self.assertEqual(exit_code, main_lib.EXIT_VERIFICATION_FAILURE)
    self.assertEqual(document["payload"]["failed"], ["eigenstate_residuals"])

  def testMergeConfig(self):
    ring_path = test_util.make_config_file(
        os.path.join(self.get_temp_dir(), "ring3.yml"), {"ring": {"n_sites": 3, "coupling": 2}})
    disorder_path = test_util.make_config_file(
        os.path.join(self.get_temp_dir(), "seeds.yml"), {"disorder": {"seeds": 4}})
    with mock.patch("sys.stdout", new_callable=io.StringIO) as stdout:
      merge_config.main([ring_path, disorder_path, "--canonical"])
    config = yaml.safe_load(stdout.getvalue())
    self.assertDictEqual(config, {
        "ring": {"n_sites": 3, "site_energy": 0.0, "couplings": [2.0, 2.0, 2.0],
                 "site_disorder": [0.0, 0.0, 0.0]},
        "disorder": {"seeds": 4}})

  def testInvalidCommand(self):
    with self.assertRaises(SystemExit):
      test_util.run_main(["relax", "-N", "6"])


if __name__ == "__main__":
  tf.test.main()
