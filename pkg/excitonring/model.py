"""Ring specification."""

import collections
import json
import math
import numbers

from excitonring import errors


class RingSpec(collections.namedtuple("RingSpec",
                                      ("n_sites",
                                       "site_energy",
                                       "couplings",
                                       "site_disorder"))):
  """Physical parameters of an exciton ring.

  Sites are numbered from 1 to :obj:`n_sites`. ``couplings[j - 1]`` couples
  site ``j`` to site ``j + 1`` and the last coupling closes the ring between
  site ``N`` and site 1. ``site_disorder[j - 1]`` is the energy offset of
  site ``j``.

  Instances are immutable. Use :func:`make_ring` or :func:`make_uniform_ring`
  to build one from arbitrary sequences.
  """

  __slots__ = ()

  def is_uniform(self):
    """Returns ``True`` if all couplings are equal and there is no disorder."""
    return self.has_uniform_couplings() and not any(self.site_disorder)

  def has_uniform_couplings(self):
    """Returns ``True`` if all couplings are equal, disorder aside."""
    return len(set(self.couplings)) <= 1

  @property
  def coupling(self):
    """The common coupling of a ring with uniform couplings.

    Raises:
      ValueError: if the couplings are not uniform.
    """
    if not self.couplings or not self.has_uniform_couplings():
      raise ValueError("The ring couplings are not uniform")
    return self.couplings[0]

  def with_site_disorder(self, site_disorder):
    """Returns a copy of this ring with other site energy offsets."""
    return self._replace(site_disorder=tuple(float(d) for d in site_disorder))

  def with_couplings(self, couplings):
    """Returns a copy of this ring with other bond couplings."""
    return self._replace(couplings=tuple(float(s) for s in couplings))

  def to_dict(self):
    """Returns the canonical dictionary representation."""
    return collections.OrderedDict([
        ("n_sites", self.n_sites),
        ("site_energy", self.site_energy),
        ("couplings", list(self.couplings)),
        ("site_disorder", list(self.site_disorder))])

  def to_json(self):
    """Returns the canonical JSON serialization."""
    return json.dumps(self.to_dict())

  @classmethod
  def from_dict(cls, values):
    """Builds a ring from a dictionary.

    Besides the canonical fields, the scalar ``coupling`` is accepted in place
    of the ``couplings`` list.

    Args:
      values: A dictionary with at least the ``n_sites`` key.

    Returns:
      A :class:`excitonring.RingSpec` instance. It is not validated.

    Raises:
      ValueError: if :obj:`values` has unknown keys, sets both ``coupling``
        and ``couplings``, has a non integer ``n_sites`` or a scalar where a
        list is expected.
    """
    known = {"n_sites", "site_energy", "coupling", "couplings", "site_disorder"}
    unknown = set(values) - known
    if unknown:
      raise ValueError("Unknown ring fields: %s" % ", ".join(sorted(unknown)))
    if "n_sites" not in values:
      raise ValueError("The ring field n_sites is required")
    if values.get("coupling") is not None and values.get("couplings") is not None:
      raise ValueError("Only one of coupling and couplings should be set")
    n_sites = values["n_sites"]
    if isinstance(n_sites, bool) or not isinstance(n_sites, numbers.Integral):
      raise ValueError("n_sites must be an integer, got %r" % (n_sites,))
    for key in ("couplings", "site_disorder"):
      if values.get(key) is not None and not isinstance(values[key], (list, tuple)):
        raise ValueError("%s must be a list, got %r" % (key, values[key]))
    couplings = values.get("couplings")
    if couplings is None and values.get("coupling") is not None:
      couplings = [values["coupling"]] * n_sites
    return make_ring(
        n_sites,
        site_energy=values.get("site_energy", 0),
        couplings=couplings,
        site_disorder=values.get("site_disorder"),
        check=False)

  @classmethod
  def from_json(cls, text):
    """Parses the canonical JSON serialization."""
    return cls.from_dict(json.loads(text))


def make_ring(n_sites, site_energy=0, couplings=None, site_disorder=None, check=True):
  """Builds a ring specification.

  Args:
    n_sites: The number of sites.
    site_energy: The site energy shared by all sites.
    couplings: The list of bond couplings. Defaults to 1 on every bond.
    site_disorder: The list of site energy offsets. Defaults to 0 on every site.
    check: If ``True``, validate the specification.

  Returns:
    A :class:`excitonring.RingSpec` instance.

  Raises:
    excitonring.errors.InvalidSizeError: if :obj:`n_sites` is lower than 3.
    excitonring.errors.InvalidSpecError: if the specification is invalid.
  """
  if couplings is None:
    couplings = [1.0] * n_sites if isinstance(n_sites, int) else []
  if site_disorder is None:
    site_disorder = [0.0] * n_sites if isinstance(n_sites, int) else []
  spec = RingSpec(
      n_sites=n_sites,
      site_energy=_to_float(site_energy),
      couplings=tuple(_to_float(s) for s in couplings),
      site_disorder=tuple(_to_float(d) for d in site_disorder))
  if check:
    check_spec(spec)
  return spec

def make_uniform_ring(n_sites, site_energy=0, coupling=1):
  """Builds a ring with equal couplings and no disorder.

  Args:
    n_sites: The number of sites.
    site_energy: The site energy.
    coupling: The coupling on every bond.

  Returns:
    A uniform :class:`excitonring.RingSpec`.

  Raises:
    excitonring.errors.InvalidSizeError: if :obj:`n_sites` is lower than 3.
  """
  if isinstance(n_sites, int) and n_sites < 3:
    raise errors.InvalidSizeError("A ring needs at least 3 sites, got %d" % n_sites)
  return make_ring(n_sites, site_energy=site_energy, couplings=[coupling] * n_sites)

def validate(spec):
  """Lists the invariant violations of a ring specification.

  Args:
    spec: A :class:`excitonring.RingSpec`.

  Returns:
    A list of error messages, empty when the specification is valid.
  """
  messages = []
  n_sites = spec.n_sites
  if isinstance(n_sites, bool) or not isinstance(n_sites, numbers.Integral):
    messages.append("n_sites must be an integer, got %r" % (n_sites,))
    return messages
  if n_sites < 3:
    messages.append("n_sites must be at least 3, got %d" % n_sites)
  if len(spec.couplings) != n_sites:
    messages.append("couplings has %d entries but the ring has %d sites"
                    % (len(spec.couplings), n_sites))
  if len(spec.site_disorder) != n_sites:
    messages.append("site_disorder has %d entries but the ring has %d sites"
                    % (len(spec.site_disorder), n_sites))
  if not _is_finite(spec.site_energy):
    messages.append("site_energy must be a finite number")
  if not all(_is_finite(value) for value in spec.couplings):
    messages.append("couplings must be finite numbers")
  if not all(_is_finite(value) for value in spec.site_disorder):
    messages.append("site_disorder must be finite numbers")
  return messages

def check_spec(spec):
  """Raises if :obj:`spec` is invalid.

  Raises:
    excitonring.errors.InvalidSizeError: if the ring has fewer than 3 sites.
    excitonring.errors.InvalidSpecError: for any other violation.
  """
  messages = validate(spec)
  if not messages:
    return
  if (len(messages) == 1
      and isinstance(spec.n_sites, int)
      and spec.n_sites < 3):
    raise errors.InvalidSizeError(messages[0])
  raise errors.InvalidSpecError(messages)


def _to_float(value):
  if isinstance(value, numbers.Real) and not isinstance(value, bool):
    return float(value)
  return value

def _is_finite(value):
  return (isinstance(value, numbers.Real)
          and not isinstance(value, bool)
          and math.isfinite(value))
