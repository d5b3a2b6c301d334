"""Main library entrypoint."""

import collections

import numpy as np
import tensorflow as tf

from excitonring import analytic
from excitonring import config as config_lib
from excitonring import degeneracy
from excitonring import disorder
from excitonring import errors
from excitonring import fock
from excitonring import model
from excitonring import optics
from excitonring import verification
from excitonring.version import __version__


_SPECTRUM_COLUMNS = ["index", "energy", "labels"]
_LADDER_COLUMNS = ["energy", "degeneracy", "bright_coupled", "dark_coupled", "mixed", "states"]
_TRANSITION_COLUMNS = [
    "from_labels", "to_labels", "allowed", "m", "dipole_oracle", "dipole_closed_form"]
_SCAN_COLUMNS = ["n_sites", "predicts", "observed", "triples", "triples_hold", "agree"]
_TRIPLES_ONLY_COLUMNS = ["n_sites", "triples", "triples_hold"]
_DIAGRAM_COLUMNS = ["set", "label", "x", "y"]
_SITE_DISORDER_COLUMNS = list(disorder.DisorderReport._fields)
_COUPLING_DISORDER_COLUMNS = [
    "n_sites", "seed", "spread", "preserved", "multiplicity",
    "uniform_multiplicity", "protected_multiplicity", "couplings"]
_VERIFY_COLUMNS = ["name", "passed", "checked", "worst", "failures"]


class Runner(object):
  """Runs the ring computations and packages their results as output
  envelopes.

  An envelope is a dictionary with the ``command``, ``spec_echo``,
  ``payload``, ``tool_version`` and ``seed`` keys. Tabular payloads also hold
  ``columns`` and ``rows`` so that they can be written as CSV.
  """

  def __init__(self, spec=None, seed=None):
    """Initializes the runner.

    Args:
      spec: The :class:`excitonring.RingSpec` to run on. Commands that scan
        ring sizes do not need it.
      seed: The seed echoed in the envelopes and used by disorder runs.
    """
    self._spec = spec
    self._seed = seed
    if spec is not None:
      tf.get_logger().info("Using ring: %s", spec.to_json())

  @property
  def spec(self):
    """The ring specification.

    Raises:
      excitonring.errors.InvalidSpecError: if the runner has no ring.
    """
    if self._spec is None:
      raise errors.InvalidSpecError("This command needs a ring: use -N or --spec-file")
    return self._spec

  def _envelope(self, command, payload, seed=None):
    return collections.OrderedDict([
        ("command", command),
        ("spec_echo", self._spec.to_dict() if self._spec is not None else None),
        ("payload", payload),
        ("tool_version", __version__),
        ("seed", seed if seed is not None else self._seed)])

  def spectrum(self, n, method="analytic"):
    """Lists the n-excitation energies in ascending order.

    Args:
      n: The number of excitations.
      method: ``"analytic"`` for the closed-form states with their labels,
        ``"oracle"`` for the Fock Hamiltonian eigenvalues.

    Returns:
      The output envelope.
    """
    spec = self.spec
    if method == "analytic":
      states = sorted(analytic.manifold_states(spec, n), key=lambda state: state.energy)
      entries = [(state.energy, list(state.labels)) for state in states]
    elif method == "oracle":
      eigenvalues = fock.eigvals_hermitian(fock.build_hamiltonian(spec, n))
      entries = [(float(value), None) for value in eigenvalues]
    else:
      raise ValueError("Invalid spectrum method: %s" % method)
    rows = [
        collections.OrderedDict([("index", i), ("energy", energy), ("labels", labels)])
        for i, (energy, labels) in enumerate(entries)]
    return self._envelope("spectrum", collections.OrderedDict([
        ("n", n),
        ("method", method),
        ("energies", [energy for energy, _ in entries]),
        ("columns", _SPECTRUM_COLUMNS),
        ("rows", rows)]))

  def ladder(self, n, method="analytic", exploratory=False):
    """Groups the n-excitation spectrum into levels.

    Returns:
      The output envelope, with an ASCII rendering of the ladder.
    """
    levels = degeneracy.energy_ladder(self.spec, n, method=method, exploratory=exploratory)
    rows = []
    for level in levels:
      rows.append(collections.OrderedDict([
          ("energy", level.energy),
          ("degeneracy", level.degeneracy),
          ("bright_coupled", level.category_counts.get(optics.Category.BRIGHT_COUPLED)),
          ("dark_coupled", level.category_counts.get(optics.Category.DARK_COUPLED)),
          ("mixed", level.mixed),
          ("states", ["{%s}" % ",".join(str(q) for q in state.labels)
                      for state in level.states])]))
    return self._envelope("ladder", collections.OrderedDict([
        ("n", n),
        ("method", method),
        ("levels", [level.to_dict() for level in levels]),
        ("ascii", degeneracy.render_ladder(levels)),
        ("columns", _LADDER_COLUMNS),
        ("rows", rows)]))

  def transitions(self, n, only_allowed=False):
    """Tabulates the transitions from manifold n to manifold n + 1.

    Returns:
      The output envelope.
    """
    records = optics.transition_table(self.spec, n, only_allowed=only_allowed)
    return self._envelope("transitions", collections.OrderedDict([
        ("n", n),
        ("only_allowed", only_allowed),
        ("columns", _TRANSITION_COLUMNS),
        ("rows", [record.to_dict() for record in records])]))

  def scan(self, n_min, n_max, triples_only=False):
    """Compares the ring size law with the spectra and the triple scan.

    Returns:
      The output envelope.
    """
    if n_min < 3 or n_max < n_min:
      raise errors.InvalidSizeError(
          "Invalid ring size range [%d, %d]: sizes start at 3" % (n_min, n_max))
    rows = []
    for n_sites in range(n_min, n_max + 1):
      rows.append(degeneracy.scan_law(n_sites, triples_only=triples_only))
      tf.get_logger().debug("Scanned N=%d", n_sites)
    payload = collections.OrderedDict([
        ("n_min", n_min),
        ("n_max", n_max),
        ("triples_only", triples_only)])
    if not triples_only:
      payload["all_agree"] = all(row["agree"] for row in rows)
    payload["all_triples_hold"] = all(row["triples_hold"] for row in rows)
    payload["columns"] = _TRIPLES_ONLY_COLUMNS if triples_only else _SCAN_COLUMNS
    payload["rows"] = rows
    return self._envelope("scan", payload)

  def statediagram(self):
    """Places the component momenta of both label parities on the unit circle.

    Returns:
      The output envelope.
    """
    diagram = degeneracy.state_diagram(self.spec.n_sites)
    rows = []
    for name, points in (("single_excitation", diagram.single_excitation),
                         ("component", diagram.component)):
      for point in points:
        rows.append(collections.OrderedDict([
            ("set", name), ("label", point.label), ("x", point.x), ("y", point.y)]))
    return self._envelope("statediagram", collections.OrderedDict([
        ("n_sites", self.spec.n_sites),
        ("columns", _DIAGRAM_COLUMNS),
        ("rows", rows)]))

  def disorder(self, mode="site", eta=1e-3, seeds=10, spread=0.5, exploratory=False):
    """Runs a disorder experiment over consecutive seeds.

    Seeds start at the runner seed (0 if unset).

    Args:
      mode: ``"site"`` for random site energies, ``"coupling"`` for random
        bond couplings.
      eta: The site disorder magnitude.
      seeds: The number of runs.
      spread: The bond disorder spread.
      exploratory: Allow coupling runs on ring sizes without accidental
        degeneracy.

    Returns:
      The output envelope.
    """
    if seeds < 1:
      raise ValueError("At least one seed is needed, got %d" % seeds)
    first_seed = self._seed if self._seed is not None else 0
    seed_range = range(first_seed, first_seed + seeds)
    payload = collections.OrderedDict([("mode", mode), ("seeds", seeds)])
    if mode == "site":
      reports = [disorder.site_disorder_splitting(self.spec, eta, seed) for seed in seed_range]
      splittings = [report.observed_splitting for report in reports]
      payload["eta"] = eta
      payload["median_splitting"] = float(np.median(splittings))
      payload["max_center_offset"] = max(
          abs(report.observed_center - report.predicted_center) for report in reports)
      payload["columns"] = _SITE_DISORDER_COLUMNS
    elif mode == "coupling":
      if not _is_reference_ring(self.spec):
        tf.get_logger().warning(
            "Coupling disorder draws bonds around 1 with zero site energy: the ring "
            "site energy, couplings and site disorder are ignored (got %s)",
            self.spec.to_json())
      reports = [
          disorder.coupling_disorder_check(
              self.spec.n_sites, seed, spread, exploratory=exploratory)
          for seed in seed_range]
      payload["spread"] = spread
      payload["all_preserved"] = all(report.preserved for report in reports)
      payload["columns"] = _COUPLING_DISORDER_COLUMNS
    else:
      raise ValueError("Invalid disorder mode: %s" % mode)
    payload["rows"] = [report.to_dict() for report in reports]
    return self._envelope("disorder", payload, seed=first_seed)

  def verify(self, n_max, names=None):
    """Checks the closed forms against the exact diagonalization.

    Returns:
      A tuple ``(envelope, passed)``.
    """
    results = verification.verify(n_max, names=names)
    passed = all(result.passed for result in results)
    for result in results:
      log = tf.get_logger().info if result.passed else tf.get_logger().error
      log("%s %s (%d cases)", "PASS" if result.passed else "FAIL", result.name, result.checked)
    envelope = self._envelope("verify", collections.OrderedDict([
        ("n_max", n_max),
        ("passed", passed),
        ("failed", [result.name for result in results if not result.passed]),
        ("properties", [result.to_dict() for result in results]),
        ("columns", _VERIFY_COLUMNS),
        ("rows", [result.to_dict() for result in results])]))
    return envelope, passed

  def dump(self, n, what="hamiltonian"):
    """Exports a sector matrix or the closed-form state vectors.

    Args:
      n: The number of excitations.
      what: ``"hamiltonian"``, ``"raising"`` (from sector n to n + 1) or
        ``"states"``.

    Returns:
      The output envelope.
    """
    spec = self.spec
    if what == "hamiltonian":
      content = fock.build_hamiltonian(spec, n).to_dict()
    elif what == "raising":
      matrix = fock.raising_matrix(spec.n_sites, n)
      content = {"shape": list(matrix.shape), "entries": matrix.tolist()}
    elif what == "states":
      content = [
          collections.OrderedDict([
              ("labels", list(state.labels)),
              ("energy", state.energy),
              ("vector", analytic.to_fock_vector(state, spec.n_sites).to_dict())])
          for state in analytic.manifold_states(spec, n)]
    else:
      raise ValueError("Invalid dump target: %s" % what)
    return self._envelope("dump", collections.OrderedDict([
        ("n", n), ("what", what), ("content", content)]))


def make_runner(config=None, n_sites=None, site_energy=None, coupling=None, seed=None,
                needs_spec=True):
  """Builds a runner from a configuration and flag overrides.

  Returns:
    A :class:`excitonring.Runner`.
  """
  spec = None
  if needs_spec:
    spec = config_lib.spec_from_config(
        config, n_sites=n_sites, site_energy=site_energy, coupling=coupling)
  return Runner(spec=spec, seed=seed)

def _is_reference_ring(spec):
  return spec == model.make_uniform_ring(spec.n_sites)
