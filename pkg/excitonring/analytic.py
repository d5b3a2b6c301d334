"""Closed-form eigenstates of the uniform ring.

An n-excitation eigenstate is labeled by n distinct momentum integers ``q``
of one parity: even when n is odd and odd when n is even. Its energy is the
sum of the component energies ``omega + 2 S cos(q pi / N)`` and its
amplitude on the occupation ``(j_1, ..., j_n)`` is the determinant of the
plane waves ``exp(i pi q_a j_b / N)``, normalized by ``N^(n / 2)``.
"""

import collections
import itertools
import math

import numpy as np

from excitonring import constants
from excitonring import errors
from excitonring import fock


class MomentumLabel(collections.namedtuple("MomentumLabel", ("q", "n_parity"))):
  """A component momentum ``q`` in ``[0, 2N - 1]`` and the parity of the
  excitation number it serves (``"odd"`` or ``"even"``).
  """

  __slots__ = ()

  def __int__(self):
    return self.q


class ManifoldState(collections.namedtuple("ManifoldState", ("labels", "energy"))):
  """An n-excitation eigenstate: ascending distinct labels and its energy."""

  __slots__ = ()

  @property
  def n(self):
    """The number of excitations."""
    return len(self.labels)

  def to_dict(self):
    return {"labels": list(self.labels), "energy": self.energy}


def label_parity(n):
  """Returns the parity (0 or 1) of the labels of the n-excitation manifold."""
  return (n + 1) % 2

def momentum_labels(n_sites, n):
  """Returns the N component labels of the n-excitation manifold.

  Args:
    n_sites: The ring size.
    n: The number of excitations.

  Returns:
    The ascending list of :class:`excitonring.analytic.MomentumLabel`: the
    even integers below ``2N`` when :obj:`n` is odd, the odd ones otherwise.

  Raises:
    excitonring.errors.InvalidSizeError: if :obj:`n_sites` is lower than 3.
    excitonring.errors.InvalidExcitationError: if :obj:`n` is lower than 1.
  """
  if n_sites < 3:
    raise errors.InvalidSizeError("A ring needs at least 3 sites, got %d" % n_sites)
  if n < 1:
    raise errors.InvalidExcitationError("Momentum labels need n >= 1, got %d" % n)
  n_parity = "odd" if n % 2 == 1 else "even"
  return [MomentumLabel(q, n_parity)
          for q in range(label_parity(n), 2 * n_sites, 2)]

def check_uniform(spec):
  """Raises :class:`excitonring.errors.AnalyticRequiresUniformError` if
  :obj:`spec` is not uniform.
  """
  if not spec.is_uniform():
    raise errors.AnalyticRequiresUniformError(
        "Closed-form eigenstates require equal couplings and no site disorder")

def component_energy(spec, label):
  """Returns the energy ``omega + 2 S cos(q pi / N)`` of a component.

  Args:
    spec: A uniform :class:`excitonring.RingSpec`.
    label: A :class:`excitonring.analytic.MomentumLabel` or an integer ``q``.

  Returns:
    The energy as a float. The cosine term is snapped to exactly 0 when it
    vanishes within rounding.

  Raises:
    excitonring.errors.AnalyticRequiresUniformError: if :obj:`spec` is not
      uniform.
  """
  check_uniform(spec)
  return _component_energy(spec.n_sites, spec.site_energy, spec.coupling, int(label))

def _component_energy(n_sites, site_energy, coupling, q):
  kinetic = 2 * coupling * math.cos(q * math.pi / n_sites)
  if abs(kinetic) < constants.ZERO_SNAP_TOLERANCE * max(1.0, abs(coupling)):
    kinetic = 0.0
  return site_energy + kinetic

def ground_state(spec):
  """Returns the ring ground state: no labels and zero energy."""
  del spec
  return ManifoldState(labels=(), energy=0.0)

def manifold_states(spec, n):
  """Enumerates the eigenstates of the n-excitation manifold.

  Args:
    spec: A uniform :class:`excitonring.RingSpec`.
    n: The number of excitations.

  Returns:
    The ``C(N, n)`` :class:`excitonring.analytic.ManifoldState` in
    lexicographic label order.

  Raises:
    excitonring.errors.AnalyticRequiresUniformError: if :obj:`spec` is not
      uniform.
    excitonring.errors.InvalidExcitationError: if :obj:`n` is not in
      ``[1, N]``.
  """
  check_uniform(spec)
  n_sites = spec.n_sites
  if n < 1 or n > n_sites:
    raise errors.InvalidExcitationError(
        "A %d-site ring has no manifold with %d excitations" % (n_sites, n))
  energies = {
      label.q: _component_energy(n_sites, spec.site_energy, spec.coupling, label.q)
      for label in momentum_labels(n_sites, n)}
  return [
      ManifoldState(labels=labels, energy=math.fsum(energies[q] for q in labels))
      for labels in itertools.combinations(sorted(energies), n)]

def _plane_wave_determinants(labels, occupations, n_sites):
  # occupations has shape [d, n]; the result has shape [d].
  labels = np.asarray(labels, dtype=np.float64)
  n = labels.shape[0]
  if n == 0:
    return np.ones([occupations.shape[0]], dtype=np.complex128)
  phases = np.exp(1j * np.pi / n_sites
                  * labels[np.newaxis, :, np.newaxis]
                  * occupations[:, np.newaxis, :])
  return np.linalg.det(phases) / n_sites ** (n / 2)

def amplitude(state, sites, n_sites):
  """Returns the amplitude of :obj:`state` on one occupation.

  Args:
    state: A :class:`excitonring.analytic.ManifoldState`.
    sites: The occupied sites, ascending and distinct, in ``[1, N]``.
    n_sites: The ring size.

  Returns:
    The complex amplitude.

  Raises:
    excitonring.errors.InvalidOccupationError: if :obj:`sites` is not a valid
      occupation of the state manifold.
  """
  sites = tuple(sites)
  if (len(sites) != state.n
      or any(site < 1 or site > n_sites for site in sites)
      or any(a >= b for a, b in zip(sites, sites[1:]))):
    raise errors.InvalidOccupationError(
        "%s is not an ascending set of %d distinct sites in 1..%d"
        % (sites, state.n, n_sites))
  occupations = np.array([sites], dtype=np.float64).reshape(1, len(sites))
  return complex(_plane_wave_determinants(state.labels, occupations, n_sites)[0])

def to_fock_vector(state, n_sites):
  """Expands :obj:`state` over the occupation basis.

  Args:
    state: A :class:`excitonring.analytic.ManifoldState`.
    n_sites: The ring size.

  Returns:
    A unit norm :class:`excitonring.fock.FockVector`.
  """
  basis = fock.enumerate_basis(n_sites, state.n)
  amplitudes = _plane_wave_determinants(
      state.labels, basis.as_array().astype(np.float64), n_sites)
  return fock.FockVector(basis, amplitudes)

def to_fock_matrix(states, n_sites, n):
  """Stacks the Fock vectors of :obj:`states` as the columns of a matrix.

  Args:
    states: A list of n-excitation :class:`excitonring.analytic.ManifoldState`.
    n_sites: The ring size.
    n: The number of excitations, needed when :obj:`states` is empty.

  Returns:
    A complex array of shape ``[C(N, n), len(states)]``.
  """
  basis = fock.enumerate_basis(n_sites, n)
  occupations = basis.as_array().astype(np.float64)
  columns = [_plane_wave_determinants(state.labels, occupations, n_sites)
             for state in states]
  if not columns:
    return np.zeros([len(basis), 0], dtype=np.complex128)
  return np.stack(columns, axis=1)
