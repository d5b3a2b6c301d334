"""Main script."""

import argparse
import collections
import json
import logging
import os
import sys

import tensorflow as tf

from excitonring import __version__
from excitonring import errors
from excitonring.config import disorder_settings, load_config
from excitonring.runner import make_runner
from excitonring.utils import misc
from excitonring.utils import writers


_PYTHON_TO_TENSORFLOW_LOGGING_LEVEL = {
    logging.CRITICAL: 3,
    logging.ERROR: 2,
    logging.WARNING: 1,
    logging.INFO: 0,
    logging.DEBUG: 0,
    logging.NOTSET: 0,
}

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE_ERROR = 2

# Commands that do not operate on a single ring.
_SIZE_SCAN_COMMANDS = ("scan", "verify")


def _set_log_level(log_level):
  tf.get_logger().setLevel(log_level)
  os.environ["TF_CPP_MIN_LOG_LEVEL"] = str(_PYTHON_TO_TENSORFLOW_LOGGING_LEVEL[log_level])

def _common_parser():
  parser = argparse.ArgumentParser(add_help=False)
  parser.add_argument("-N", dest="n_sites", type=int, default=None,
                      help="Number of ring sites (overrides ring.n_sites).")
  parser.add_argument("--omega", type=float, default=None,
                      help="Site energy (overrides ring.site_energy).")
  parser.add_argument("--coupling", type=float, default=None,
                      help="Uniform coupling on every bond (overrides ring.couplings).")
  parser.add_argument("--spec-file", dest="spec_file", nargs="+", default=None,
                      help="List of YAML configuration files, the rightmost takes priority.")
  parser.add_argument("--format", dest="output_format", default="json",
                      choices=writers.list_writers(),
                      help="Output format.")
  parser.add_argument("--output", default=None,
                      help="Write the output to this file instead of the standard output.")
  parser.add_argument("--seed", type=int, default=None,
                      help="Random seed (first seed of disorder runs).")
  parser.add_argument("--log_level", default="INFO",
                      choices=["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET"],
                      help="Logs verbosity.")
  return parser

def _build_parser():
  common = _common_parser()
  parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter)
  parser.add_argument("-v", "--version", action="version", version="ExcitonRing %s" % __version__)
  subparsers = parser.add_subparsers(help="Command.", dest="command")
  subparsers.required = True

  def _add_parser(name, help_text):
    return subparsers.add_parser(
        name,
        help=help_text,
        parents=[common],
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)

  parser_spectrum = _add_parser("spectrum", "Energies of an excitation manifold.")
  parser_spectrum.add_argument("-n", type=int, default=1, help="Number of excitations.")
  parser_spectrum.add_argument("--method", default="analytic", choices=["analytic", "oracle"],
                               help="Closed-form states or Fock eigenvalues.")

  parser_ladder = _add_parser("ladder", "Degenerate levels of an excitation manifold.")
  parser_ladder.add_argument("-n", type=int, default=2, help="Number of excitations.")
  parser_ladder.add_argument("--method", default="analytic", choices=["analytic", "oracle"],
                             help="Closed-form states or Fock eigenvalues.")
  parser_ladder.add_argument("--exploratory", default=False, action="store_true",
                             help="Classify the states of any manifold by total momentum.")

  parser_transitions = _add_parser("transitions", "Transitions from manifold n to n + 1.")
  parser_transitions.add_argument("-n", type=int, default=1,
                                  help="Number of excitations of the source manifold.")
  parser_transitions.add_argument("--only-allowed", dest="only_allowed", default=False,
                                  action="store_true",
                                  help="Only list transitions allowed by the selection rule.")

  parser_scan = _add_parser("scan", "Ring size law scan.")
  parser_scan.add_argument("--n-min", dest="n_min", type=int, default=3,
                           help="Smallest ring size.")
  parser_scan.add_argument("--n-max", dest="n_max", type=int, default=22,
                           help="Largest ring size.")
  parser_scan.add_argument("--triples-only", dest="triples_only", default=False,
                           action="store_true",
                           help="Only scan for evenly spaced cosine triples.")

  _add_parser("statediagram", "Component momenta on the unit circle.")

  parser_disorder = _add_parser("disorder", "Disorder robustness experiment.")
  parser_disorder.add_argument("--mode", default=None, choices=["site", "coupling"],
                               help="Random site energies or random bond couplings "
                                    "(default: site).")
  parser_disorder.add_argument("--eta", type=float, default=None,
                               help="Site disorder magnitude (default: 1e-3).")
  parser_disorder.add_argument("--spread", type=float, default=None,
                               help="Bond disorder spread (default: 0.5).")
  parser_disorder.add_argument("--seeds", type=int, default=None,
                               help="Number of consecutive seeds (default: 10).")
  parser_disorder.add_argument("--exploratory", default=False, action="store_true",
                               help="Allow control runs on sizes without accidental degeneracy.")

  parser_verify = _add_parser("verify", "Check closed forms against exact diagonalization.")
  parser_verify.add_argument("--n-max", dest="n_max", type=int, default=8,
                             help="Largest ring size.")
  parser_verify.add_argument("--property", dest="properties", nargs="+", default=None,
                             help="Only check these properties.")
  parser_verify.add_argument("--json", default=False, action="store_true",
                             help="Write the JSON envelope (same as --format json).")

  parser_dump = _add_parser("dump", "Export a sector matrix or the closed-form vectors.")
  parser_dump.add_argument("-n", type=int, default=1, help="Number of excitations.")
  parser_dump.add_argument("--what", default="hamiltonian",
                           choices=["hamiltonian", "raising", "states"],
                           help="What to export.")
  return parser

def _run(args):
  config = load_config(args.spec_file) if args.spec_file else {}
  seed = args.seed
  if args.command == "disorder":
    settings = disorder_settings(
        config,
        mode=args.mode,
        eta=args.eta,
        spread=args.spread,
        seeds=args.seeds,
        seed=args.seed)
    seed = settings["seed"]
  runner = make_runner(
      config,
      n_sites=args.n_sites,
      site_energy=args.omega,
      coupling=args.coupling,
      seed=seed,
      needs_spec=args.command not in _SIZE_SCAN_COMMANDS)

  if args.command == "spectrum":
    return runner.spectrum(args.n, method=args.method), EXIT_SUCCESS
  if args.command == "ladder":
    envelope = runner.ladder(args.n, method=args.method, exploratory=args.exploratory)
    tf.get_logger().info("Energy ladder:\n%s", envelope["payload"]["ascii"])
    return envelope, EXIT_SUCCESS
  if args.command == "transitions":
    return runner.transitions(args.n, only_allowed=args.only_allowed), EXIT_SUCCESS
  if args.command == "scan":
    return runner.scan(args.n_min, args.n_max, triples_only=args.triples_only), EXIT_SUCCESS
  if args.command == "statediagram":
    return runner.statediagram(), EXIT_SUCCESS
  if args.command == "disorder":
    envelope = runner.disorder(
        mode=settings["mode"],
        eta=settings["eta"],
        seeds=settings["seeds"],
        spread=settings["spread"],
        exploratory=args.exploratory)
    return envelope, EXIT_SUCCESS
  if args.command == "verify":
    envelope, passed = runner.verify(args.n_max, names=args.properties)
    return envelope, EXIT_SUCCESS if passed else EXIT_VERIFICATION_FAILURE
  if args.command == "dump":
    return runner.dump(args.n, what=args.what), EXIT_SUCCESS
  raise ValueError("Unknown command: %s" % args.command)

def _error_document(command, error):
  code = getattr(error, "code", "invalid-argument")
  return json.dumps(collections.OrderedDict([
      ("error", collections.OrderedDict([("code", code), ("message", str(error))])),
      ("command", command),
      ("tool_version", __version__)]))

def main(argv=None):
  """Runs the command line and returns the exit code."""
  parser = _build_parser()
  args = parser.parse_args(sys.argv[1:] if argv is None else argv)
  if getattr(args, "json", False):
    args.output_format = "json"
  _set_log_level(getattr(logging, args.log_level))

  try:
    writer = writers.make_writer(args.output_format)
    envelope, exit_code = _run(args)
    writer.write(envelope, path=args.output)
  except (errors.RingError, ValueError) as e:
    tf.get_logger().error("%s failed: %s", args.command, e)
    misc.write_document(_error_document(args.command, e))
    return EXIT_USAGE_ERROR
  return exit_code


if __name__ == "__main__":
  sys.exit(main())
