"""Energy ladders, accidental degeneracy and the ring size law."""

import collections
import math

import numpy as np
import tensorflow as tf

from excitonring import analytic
from excitonring import constants
from excitonring import errors
from excitonring import fock
from excitonring import model as model_lib
from excitonring import optics


class EnergyLevel(collections.namedtuple("EnergyLevel",
                                         ("energy",
                                          "degeneracy",
                                          "states",
                                          "category_counts"))):
  """A group of degenerate states.

  ``states`` lists the member :class:`excitonring.analytic.ManifoldState` and
  is empty for levels grouped from raw eigenvalues. ``category_counts`` maps
  each :class:`excitonring.optics.Category` to its number of members and is
  empty when the states are not classified.
  """

  __slots__ = ()

  @property
  def mixed(self):
    """``True`` if the level holds states of both categories."""
    return sum(1 for count in self.category_counts.values() if count > 0) > 1

  def to_dict(self):
    return collections.OrderedDict([
        ("energy", self.energy),
        ("degeneracy", self.degeneracy),
        ("states", [list(state.labels) for state in self.states]),
        ("category_counts", collections.OrderedDict(
            (category.value, self.category_counts.get(category, 0))
            for category in optics.Category) if self.category_counts else {}),
        ("mixed", self.mixed)])


class TripleReport(collections.namedtuple("TripleReport",
                                          ("n_sites", "triples", "condition_holds"))):
  """Evenly spaced cosine triples of a ring size and whether each satisfies
  the midpoint condition.
  """

  __slots__ = ()

  @property
  def all_hold(self):
    return all(self.condition_holds)

  def to_dict(self):
    return collections.OrderedDict([
        ("n_sites", self.n_sites),
        ("triples", [list(triple) for triple in self.triples]),
        ("condition_holds", list(self.condition_holds))])


DiagramPoint = collections.namedtuple("DiagramPoint", ("label", "x", "y"))
StateDiagram = collections.namedtuple("StateDiagram", ("single_excitation", "component"))


def grouping_tolerance(spec):
  """Returns the energy gap separating two levels of :obj:`spec`."""
  scale = max([abs(coupling) for coupling in spec.couplings] or [0.0])
  return constants.LEVEL_GROUPING_TOLERANCE * max(1.0, 2 * scale)

def group_energies(energies, tolerance):
  """Groups sorted energies into levels.

  A new level starts when the gap to the previous energy exceeds
  :obj:`tolerance`.

  Args:
    energies: A 1D array of energies.
    tolerance: The gap threshold.

  Returns:
    A list of index arrays into :obj:`energies`, one per level, in ascending
    energy order.
  """
  energies = np.asarray(energies, dtype=np.float64)
  if energies.size == 0:
    return []
  order = np.argsort(energies, kind="stable")
  gaps = np.diff(energies[order])
  boundaries = np.nonzero(gaps > tolerance)[0] + 1
  return np.split(order, boundaries)

def energy_ladder(spec, n, method="analytic", exploratory=False):
  """Groups the n-excitation spectrum into degenerate levels.

  Args:
    spec: A :class:`excitonring.RingSpec`, uniform for the analytic method.
    n: The number of excitations.
    method: ``"analytic"`` to group the closed-form states, ``"oracle"`` to
      group the eigenvalues of the Fock Hamiltonian.
    exploratory: If ``True``, classify the states of any manifold by total
      momentum. Otherwise only double-excitation levels carry categories.

  Returns:
    A list of :class:`excitonring.degeneracy.EnergyLevel` in ascending energy.

  Raises:
    ValueError: if :obj:`method` is invalid.
  """
  tolerance = grouping_tolerance(spec)
  if method == "oracle":
    eigenvalues = fock.eigvals_hermitian(fock.build_hamiltonian(spec, n))
    return [
        EnergyLevel(
            energy=float(np.mean(eigenvalues[indices])),
            degeneracy=len(indices),
            states=(),
            category_counts={})
        for indices in group_energies(eigenvalues, tolerance)]
  if method != "analytic":
    raise ValueError("Invalid ladder method: %s" % method)

  states = analytic.manifold_states(spec, n)
  classify = n == 2 or exploratory
  levels = []
  for indices in group_energies([state.energy for state in states], tolerance):
    members = tuple(states[i] for i in sorted(indices))
    counts = {}
    if classify:
      counts = collections.Counter(
          optics.momentum_category(state.labels, spec.n_sites) for state in members)
    levels.append(EnergyLevel(
        energy=math.fsum(state.energy for state in members) / len(members),
        degeneracy=len(members),
        states=members,
        category_counts=dict(counts)))
  return levels

def find_accidental(spec, n=2, exploratory=False):
  """Returns the levels mixing both optical categories.

  Args:
    spec: A uniform :class:`excitonring.RingSpec`.
    n: The number of excitations. Only 2 is meaningful; other manifolds are
      classified by total momentum and require :obj:`exploratory`.
    exploratory: Allow manifolds other than the double-excitation one.

  Returns:
    The list of mixed :class:`excitonring.degeneracy.EnergyLevel`.

  Raises:
    excitonring.errors.InvalidManifoldError: if :obj:`n` is not 2 and
      :obj:`exploratory` is not set.
  """
  if n != 2 and not exploratory:
    raise errors.InvalidManifoldError(
        "Accidental degeneracy is defined for n=2, got n=%d" % n)
  return [level for level in energy_ladder(spec, n, exploratory=exploratory)
          if level.mixed]

def _fold(m, n_sites):
  # cos((2m + 1) pi / N) == cos((2(N - 1 - m) + 1) pi / N)
  return m if 2 * m + 1 <= n_sites else n_sites - 1 - m

def triple_condition(triple, n_sites):
  """Checks the midpoint condition of a triple in exact integer arithmetic.

  The middle angle must be ``pi / 2`` or ``3 pi / 2`` and the folded indices
  must be symmetric around it.
  """
  m1, m2, m3 = (_fold(m, n_sites) for m in triple)
  return 2 * (2 * m2 + 1) == n_sites and m1 + m3 == 2 * m2

def evenly_spaced_triples(n_sites):
  """Scans ``f(m) = cos((2m + 1) pi / N)`` for evenly spaced triples.

  Args:
    n_sites: The ring size.

  Returns:
    A :class:`excitonring.degeneracy.TripleReport` listing every triple
    ``(m1, m2, m3)`` with ``f(m1) > f(m2) > f(m3)`` and equal spacing.

  Raises:
    excitonring.errors.InvalidSizeError: if :obj:`n_sites` is lower than 3.
  """
  if n_sites < 3:
    raise errors.InvalidSizeError("A ring needs at least 3 sites, got %d" % n_sites)
  tolerance = constants.TRIPLE_SPACING_TOLERANCE
  f = np.cos((2 * np.arange(n_sites) + 1) * np.pi / n_sites)
  f1 = f[:, np.newaxis, np.newaxis]
  f2 = f[np.newaxis, :, np.newaxis]
  f3 = f[np.newaxis, np.newaxis, :]
  upper = f1 - f2
  lower = f2 - f3
  mask = (upper > tolerance) & (lower > tolerance) & (np.abs(upper - lower) <= tolerance)
  triples = [tuple(int(m) for m in index) for index in np.argwhere(mask)]
  return TripleReport(
      n_sites=n_sites,
      triples=triples,
      condition_holds=[triple_condition(triple, n_sites) for triple in triples])

def predicts_accidental(n_sites):
  """Returns ``True`` if a ring of :obj:`n_sites` sites has an accidental
  degeneracy, that is ``N = 4l + 2`` with ``l >= 1``.

  Raises:
    excitonring.errors.InvalidSizeError: if :obj:`n_sites` is lower than 3.
  """
  if n_sites < 3:
    raise errors.InvalidSizeError("A ring needs at least 3 sites, got %d" % n_sites)
  return n_sites % 4 == 2 and n_sites >= 6

def scan_law(n_sites, triples_only=False):
  """Compares the size law, the uniform ring spectrum and the triple scan.

  Args:
    n_sites: The ring size.
    triples_only: If ``True``, only run the triple scan.

  Returns:
    An ordered dictionary describing the row.
  """
  report = evenly_spaced_triples(n_sites)
  row = collections.OrderedDict([("n_sites", n_sites)])
  if not triples_only:
    predicted = predicts_accidental(n_sites)
    observed = bool(find_accidental(model_lib.make_uniform_ring(n_sites)))
    row["predicts"] = predicted
    row["observed"] = observed
  row["triples"] = len(report.triples)
  row["triples_hold"] = report.all_hold
  if not triples_only:
    row["agree"] = row["predicts"] == row["observed"] == bool(report.triples)
    if not row["agree"]:
      tf.get_logger().warning("Ring size law disagreement at N=%d", n_sites)
  return row

def _snap(value):
  return 0.0 if abs(value) < constants.ZERO_SNAP_TOLERANCE else value

def state_diagram(n_sites):
  """Places the component momenta of both manifold parities on the unit circle.

  Args:
    n_sites: The ring size.

  Returns:
    A :class:`excitonring.degeneracy.StateDiagram` whose point sets hold the
    even labels (single-excitation manifold) and the odd labels (component
    states of even manifolds). ``x`` is the energy in units of ``2S``.
  """
  if n_sites < 3:
    raise errors.InvalidSizeError("A ring needs at least 3 sites, got %d" % n_sites)

  def _points(n):
    return [
        DiagramPoint(
            label=label.q,
            x=_snap(math.cos(label.q * math.pi / n_sites)),
            y=_snap(math.sin(label.q * math.pi / n_sites)))
        for label in analytic.momentum_labels(n_sites, n)]

  return StateDiagram(single_excitation=_points(1), component=_points(2))

def render_ladder(levels, width=40):
  """Renders levels as an ASCII ladder, highest energy first.

  Args:
    levels: A list of :class:`excitonring.degeneracy.EnergyLevel`.
    width: Maximum width of the degeneracy bars.

  Returns:
    The ladder as a string.
  """
  lines = []
  for level in reversed(levels):
    bar = "=" * min(width, level.degeneracy)
    line = "%+12.6f  %-*s (%d)" % (level.energy, width, bar, level.degeneracy)
    if level.category_counts:
      line += "  bright:%d dark:%d" % (
          level.category_counts.get(optics.Category.BRIGHT_COUPLED, 0),
          level.category_counts.get(optics.Category.DARK_COUPLED, 0))
    if level.mixed:
      line += "  <- mixed"
    lines.append(line.rstrip())
  return "\n".join(lines)
