"""Checks of the closed forms against the exact diagonalization.

Each property sweeps the uniform rings from 3 sites up to a maximum size and
reports whether the closed form and the brute force agree.
"""

import abc
import collections

import numpy as np
import tensorflow as tf

from excitonring import analytic
from excitonring import constants
from excitonring import degeneracy
from excitonring import fock
from excitonring import model as model_lib
from excitonring import optics
from excitonring.utils import misc


_MAX_REPORTED_FAILURES = 10


class PropertyResult(collections.namedtuple("PropertyResult",
                                            ("name", "passed", "checked", "failures", "worst"))):
  """Outcome of a property: number of checked cases, the first failure
  messages and the worst observed deviation, if any.
  """

  __slots__ = ()

  def to_dict(self):
    return collections.OrderedDict([
        ("name", self.name),
        ("passed", self.passed),
        ("checked", self.checked),
        ("failures", list(self.failures)),
        ("worst", self.worst)])


class Property(abc.ABC):
  """An invariant checked over a range of ring sizes."""

  def __init__(self, name):
    self._name = name

  @property
  def name(self):
    """The property name."""
    return self._name

  def __call__(self, n_max):
    """Checks the property on the rings with 3 to :obj:`n_max` sites.

    Returns:
      A :class:`excitonring.verification.PropertyResult`.
    """
    failures = []
    checked = 0
    worst = None
    for n_sites in range(3, n_max + 1):
      for case, deviation, ok in self._check(n_sites):
        checked += 1
        if deviation is not None:
          worst = deviation if worst is None else max(worst, deviation)
        if not ok:
          failures.append("N=%d %s" % (n_sites, case))
    tf.get_logger().info("Property %s: %d cases, %d failures", self._name, checked, len(failures))
    return PropertyResult(
        name=self._name,
        passed=not failures,
        checked=checked,
        failures=failures[:_MAX_REPORTED_FAILURES],
        worst=worst)

  @abc.abstractmethod
  def _check(self, n_sites):
    """Yields ``(case, deviation, ok)`` tuples for one ring size."""
    raise NotImplementedError()


_PROPERTIES_REGISTRY = misc.ClassRegistry(base_class=Property)
register_property = _PROPERTIES_REGISTRY.register  # pylint: disable=invalid-name


@register_property(name="eigenstate_residuals")
class EigenstateResiduals(Property):
  """Every closed-form state is an eigenvector of the Fock Hamiltonian."""

  def __init__(self):
    super(EigenstateResiduals, self).__init__("eigenstate_residuals")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    for n in range(1, n_sites + 1):
      states = analytic.manifold_states(spec, n)
      hamiltonian = fock.build_hamiltonian(spec, n).matrix
      vectors = analytic.to_fock_matrix(states, n_sites, n)
      energies = np.array([state.energy for state in states])
      residuals = np.linalg.norm(hamiltonian.dot(vectors) - vectors * energies, axis=0)
      residuals /= np.maximum(1.0, np.linalg.norm(vectors, axis=0))
      worst = float(np.max(residuals))
      yield "n=%d" % n, worst, worst <= constants.RESIDUAL_TOLERANCE


@register_property(name="orthonormality")
class Orthonormality(Property):
  """The closed-form states of a manifold form an orthonormal basis."""

  def __init__(self):
    super(Orthonormality, self).__init__("orthonormality")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    for n in range(1, n_sites + 1):
      vectors = analytic.to_fock_matrix(analytic.manifold_states(spec, n), n_sites, n)
      gram = vectors.conj().T.dot(vectors)
      worst = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
      yield "n=%d" % n, worst, worst <= constants.RESIDUAL_TOLERANCE


@register_property(name="spectrum_equality")
class SpectrumEquality(Property):
  """Closed-form energies and Fock eigenvalues coincide with multiplicities."""

  def __init__(self):
    super(SpectrumEquality, self).__init__("spectrum_equality")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    for n in range(1, n_sites + 1):
      energies = np.sort([state.energy for state in analytic.manifold_states(spec, n)])
      eigenvalues = fock.eigvals_hermitian(fock.build_hamiltonian(spec, n))
      worst = float(np.max(np.abs(energies - eigenvalues)))
      yield "n=%d" % n, worst, worst <= constants.SPECTRUM_TOLERANCE


@register_property(name="bright_dark")
class BrightDark(Property):
  """Only the zero momentum single excitation couples to the ground state."""

  def __init__(self):
    super(BrightDark, self).__init__("bright_dark")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    _, to_states, dipoles = optics.dipole_matrix(spec, 0)
    for state, dipole in zip(to_states, dipoles[0]):
      expected = n_sites if state.labels == (0,) else 0
      deviation = abs(float(dipole) - expected)
      yield "q=%d" % state.labels[0], deviation, deviation <= constants.RESIDUAL_TOLERANCE


@register_property(name="selection_rule")
class SelectionRule(Property):
  """The selection rule matches the brute force dipoles of n=1 and n=2."""

  def __init__(self):
    super(SelectionRule, self).__init__("selection_rule")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    for n in (1, 2):
      if n + 1 > n_sites:
        continue
      for record in optics.transition_table(spec, n):
        ok = record.rule_allowed != optics.is_forbidden(record.dipole_oracle)
        yield ("%s -> %s" % (record.from_state.labels, record.to_state.labels),
               None,
               ok)


@register_property(name="closed_form")
class ClosedForm(Property):
  """The closed-form single to double dipole matches the brute force."""

  def __init__(self):
    super(ClosedForm, self).__init__("closed_form")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    for record in optics.transition_table(spec, 1, only_allowed=True):
      deviation = abs(record.dipole_closed_form - record.dipole_oracle)
      deviation /= max(1.0, record.dipole_oracle)
      yield ("%s -> %s" % (record.from_state.labels, record.to_state.labels),
             deviation,
             deviation <= constants.RESIDUAL_TOLERANCE)


@register_property(name="category_energy")
class CategoryEnergy(Property):
  """Bright coupled double excitations are built from equal energy components."""

  def __init__(self):
    super(CategoryEnergy, self).__init__("category_energy")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    for state in analytic.manifold_states(spec, 2):
      s1, s2 = state.labels
      equal = abs(analytic.component_energy(spec, s1)
                  - analytic.component_energy(spec, s2)) <= constants.SYMMETRY_TOLERANCE
      bright = optics.classify_double(spec, state) == optics.Category.BRIGHT_COUPLED
      yield "%s" % (state.labels,), None, equal == bright


@register_property(name="oracle_concordance")
class OracleConcordance(Property):
  """Closed-form and brute force double-excitation ladders coincide."""

  def __init__(self):
    super(OracleConcordance, self).__init__("oracle_concordance")

  def _check(self, n_sites):
    spec = model_lib.make_uniform_ring(n_sites)
    analytic_levels = degeneracy.energy_ladder(spec, 2)
    oracle_levels = degeneracy.energy_ladder(spec, 2, method="oracle")
    if len(analytic_levels) != len(oracle_levels):
      yield "level count", None, False
      return
    for expected, actual in zip(analytic_levels, oracle_levels):
      deviation = abs(expected.energy - actual.energy)
      ok = (deviation <= constants.LEVEL_GROUPING_TOLERANCE
            and expected.degeneracy == actual.degeneracy)
      yield "E=%g" % expected.energy, deviation, ok


@register_property(name="accidental_law")
class AccidentalLaw(Property):
  """Mixed levels, the size law and evenly spaced triples agree."""

  def __init__(self):
    super(AccidentalLaw, self).__init__("accidental_law")

  def _check(self, n_sites):
    row = degeneracy.scan_law(n_sites)
    yield "law", None, row["agree"]
    yield "triples", None, row["triples_hold"]


@register_property(name="sublattice_symmetry")
class SublatticeSymmetry(Property):
  """Even rings have a single excitation spectrum symmetric around zero, and
  zero energy components in exactly one of the two label parities.
  """

  def __init__(self):
    super(SublatticeSymmetry, self).__init__("sublattice_symmetry")

  def _check(self, n_sites):
    if n_sites % 2 != 0:
      return
    spec = model_lib.make_uniform_ring(n_sites)
    eigenvalues = fock.eigvals_hermitian(fock.build_hamiltonian(spec, 1))
    deviation = float(np.max(np.abs(eigenvalues + eigenvalues[::-1])))
    yield "negation", deviation, deviation <= constants.SYMMETRY_TOLERANCE
    single = [analytic.component_energy(spec, label)
              for label in analytic.momentum_labels(n_sites, 1)]
    component = [analytic.component_energy(spec, label)
                 for label in analytic.momentum_labels(n_sites, 2)]
    single_zero = 0.0 in single
    component_zero = 0.0 in component
    if n_sites % 4 == 0:
      yield "zero energy", None, single_zero and not component_zero
    else:
      yield "zero energy", None, component_zero and not single_zero


def make_properties(names=None):
  """Returns a list of properties.

  Args:
    names: A list of property names, or ``None`` for all of them.

  Returns:
    A list of :class:`excitonring.verification.Property` instances.

  Raises:
    ValueError: if a property name is invalid.
  """
  if names is None:
    names = _PROPERTIES_REGISTRY.class_names
  elif not isinstance(names, list):
    names = [names]
  properties = []
  for name in names:
    property_class = _PROPERTIES_REGISTRY.get(name)
    if property_class is None:
      raise ValueError("No property associated with the name: {}".format(name))
    properties.append(property_class())
  return properties

def list_properties():
  """Lists the name of registered properties."""
  return _PROPERTIES_REGISTRY.class_names

def verify(n_max, names=None):
  """Runs properties on the rings with 3 to :obj:`n_max` sites.

  Returns:
    A list of :class:`excitonring.verification.PropertyResult`.
  """
  if n_max < 3:
    raise ValueError("The maximum ring size must be at least 3, got %d" % n_max)
  return [prop(n_max) for prop in make_properties(names)]
