"""Defines functions related to configuration files."""

import copy

import tensorflow as tf
import yaml

from excitonring import errors
from excitonring import model as model_lib
from excitonring.utils.misc import merge_dict


# Values used when neither the configuration nor the flags set them.
_DISORDER_DEFAULTS = {
    "mode": "site",
    "eta": 1e-3,
    "spread": 0.5,
    "seeds": 10,
    "seed": 0,
}


def load_config(config_paths, config=None):
  """Loads YAML configuration files.

  Args:
    config_paths: A list of configuration files that will be merged to a single
      configuration. The rightmost configuration takes priority.
    config: A (possibly non empty) config dictionary to fill.

  Returns:
    The configuration as Python dictionary.

  Raises:
    ValueError: if a file does not hold a YAML mapping.
  """
  if config is None:
    config = {}

  for config_path in config_paths:
    with tf.io.gfile.GFile(config_path, mode="rb") as config_file:
      subconfig = yaml.safe_load(config_file.read())
    if subconfig is None:
      continue
    if not isinstance(subconfig, dict):
      raise ValueError("Configuration %s does not define a mapping" % config_path)
    # Add or update section in main configuration.
    merge_dict(config, subconfig)

  return config

def spec_from_config(config, n_sites=None, site_energy=None, coupling=None):
  """Builds the effective ring specification.

  Flags take priority over the ``ring`` section of the configuration. A
  coupling flag replaces any per-bond couplings of the configuration.

  Args:
    config: The configuration dictionary.
    n_sites: The ring size flag, if set.
    site_energy: The site energy flag, if set.
    coupling: The uniform coupling flag, if set.

  Returns:
    A validated :class:`excitonring.RingSpec`.

  Raises:
    excitonring.errors.InvalidSpecError: if the ring size is missing or the
      resulting specification is invalid.
  """
  ring = copy.deepcopy((config or {}).get("ring") or {})
  if not isinstance(ring, dict):
    raise errors.InvalidSpecError("The ring section should be a mapping, got %r" % (ring,))
  if n_sites is not None:
    if ring.get("n_sites") not in (None, n_sites):
      # Per-site lists of the configuration no longer apply.
      for key in ("couplings", "site_disorder"):
        if ring.get(key) is not None:
          tf.get_logger().warning(
              "Ignoring ring.%s of the configuration: the ring size is overridden to %d",
              key, n_sites)
          ring.pop(key)
    ring["n_sites"] = n_sites
  if site_energy is not None:
    ring["site_energy"] = site_energy
  if coupling is not None:
    ring.pop("couplings", None)
    ring["coupling"] = coupling
  if ring.get("n_sites") is None:
    raise errors.InvalidSpecError("The ring size is not set: use -N or ring.n_sites")
  try:
    spec = model_lib.RingSpec.from_dict(ring)
  except ValueError as e:
    raise errors.InvalidSpecError(str(e))
  model_lib.check_spec(spec)
  return spec

def spec_to_config(spec):
  """Returns the configuration dictionary describing :obj:`spec`."""
  return {"ring": dict(spec.to_dict())}

def disorder_settings(config, **flags):
  """Returns the effective disorder experiment settings.

  Args:
    config: The configuration dictionary.
    **flags: Flag values; ``None`` values are ignored.

  Returns:
    A dictionary with the ``mode``, ``eta``, ``spread``, ``seeds`` and
    ``seed`` keys.

  Raises:
    ValueError: if the configuration sets unknown keys.
  """
  section = (config or {}).get("disorder") or {}
  unknown = set(section) - set(_DISORDER_DEFAULTS)
  if unknown:
    raise ValueError("Unknown disorder settings: %s" % ", ".join(sorted(unknown)))
  settings = dict(_DISORDER_DEFAULTS)
  merge_dict(settings, section)
  merge_dict(settings, {key: value for key, value in flags.items() if value is not None})
  return settings
