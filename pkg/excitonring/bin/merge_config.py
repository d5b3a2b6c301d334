"""Script that merges ring configurations and prints the effective inputs."""

import argparse
import sys

import yaml

from excitonring.config import load_config, spec_from_config, spec_to_config
from excitonring.utils.misc import merge_dict


def main(argv=None):
  parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter)
  parser.add_argument("config", nargs="+", help="Configuration files.")
  parser.add_argument("--canonical", default=False, action="store_true",
                      help="Replace the ring section by its validated canonical form.")
  args = parser.parse_args(sys.argv[1:] if argv is None else argv)
  config = load_config(args.config)
  if args.canonical:
    merge_dict(config, spec_to_config(spec_from_config(config)))
    config["ring"].pop("coupling", None)
  print(yaml.safe_dump(config, default_flow_style=False))


if __name__ == "__main__":
  main()
