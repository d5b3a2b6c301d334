"""Optical transitions between adjacent excitation manifolds.

The collective raising operator ``J+ = sum_j sigma_j^+`` couples a state of
the n-excitation manifold to a state of the (n + 1)-excitation manifold only
when their label sums differ by a multiple of ``2N``.
"""

import collections
import enum
import math

import numpy as np

from excitonring import analytic
from excitonring import constants
from excitonring import errors
from excitonring import fock


class Category(enum.Enum):
  """Optical category of a double-excitation state."""

  BRIGHT_COUPLED = "BrightCoupled"
  DARK_COUPLED = "DarkCoupled"


class TransitionRecord(collections.namedtuple("TransitionRecord",
                                              ("from_state",
                                               "to_state",
                                               "rule_allowed",
                                               "winding",
                                               "dipole_oracle",
                                               "dipole_closed_form"))):
  """A pair of states of adjacent manifolds with their squared dipole.

  ``winding`` is the integer ``m`` of the selection rule, or ``None`` when the
  transition is forbidden. ``dipole_closed_form`` is ``None`` outside of the
  allowed single to double transitions.
  """

  __slots__ = ()

  def to_dict(self):
    return collections.OrderedDict([
        ("from_labels", list(self.from_state.labels)),
        ("to_labels", list(self.to_state.labels)),
        ("allowed", self.rule_allowed),
        ("m", self.winding),
        ("dipole_oracle", self.dipole_oracle),
        ("dipole_closed_form", self.dipole_closed_form)])


def _check_labels(labels, n_sites, what):
  parity = analytic.label_parity(len(labels))
  for q in labels:
    if q < 0 or q >= 2 * n_sites or q % 2 != parity:
      raise errors.InvalidManifoldPairError(
          "Label %d is not a valid %s label of the %d-excitation manifold"
          % (q, what, len(labels)))
  if len(set(labels)) != len(labels):
    raise errors.InvalidManifoldPairError("%s labels are not distinct: %s" % (what, labels))

def selection_rule(from_labels, to_labels, n_sites):
  """Applies the phase matching selection rule.

  Args:
    from_labels: The labels of the n-excitation state.
    to_labels: The labels of the (n + 1)-excitation state.
    n_sites: The ring size.

  Returns:
    A tuple ``(allowed, m)`` where ``m`` is the integer such that
    ``sum(from_labels) - sum(to_labels) = 2 m N``, or ``None`` when no such
    integer exists.

  Raises:
    excitonring.errors.InvalidManifoldPairError: if the label sets are not
      from adjacent manifolds of opposite label parity.
  """
  from_labels = [int(q) for q in from_labels]
  to_labels = [int(q) for q in to_labels]
  if len(to_labels) != len(from_labels) + 1:
    raise errors.InvalidManifoldPairError(
        "Expected %d target labels for %d source labels, got %d"
        % (len(from_labels) + 1, len(from_labels), len(to_labels)))
  _check_labels(from_labels, n_sites, "source")
  _check_labels(to_labels, n_sites, "target")
  difference = sum(from_labels) - sum(to_labels)
  if difference % (2 * n_sites) != 0:
    return False, None
  return True, difference // (2 * n_sites)

def _state_vector(state, n_sites):
  return analytic.to_fock_vector(state, n_sites).amplitudes

def dipole_oracle(spec, from_state, to_state):
  """Computes a squared transition dipole by brute force.

  Args:
    spec: A uniform :class:`excitonring.RingSpec`.
    from_state: A :class:`excitonring.analytic.ManifoldState` with n labels
      (the ground state has none).
    to_state: A :class:`excitonring.analytic.ManifoldState` with n + 1 labels.

  Returns:
    ``|<to| J+ |from>|^2`` evaluated in the occupation basis.

  Raises:
    excitonring.errors.AnalyticRequiresUniformError: if :obj:`spec` is not
      uniform.
    excitonring.errors.InvalidManifoldPairError: if the states are not from
      adjacent manifolds.
  """
  analytic.check_uniform(spec)
  if to_state.n != from_state.n + 1:
    raise errors.InvalidManifoldPairError(
        "Cannot couple a %d-excitation state to a %d-excitation state"
        % (from_state.n, to_state.n))
  n_sites = spec.n_sites
  raised = fock.raising_matrix(n_sites, from_state.n).dot(
      _state_vector(from_state, n_sites))
  return float(abs(np.vdot(_state_vector(to_state, n_sites), raised)) ** 2)

def gamma12_closed_form(n_sites, k, s1, s2):
  """Returns the squared dipole of an allowed single to double transition.

  The value is ``(cot(-s2 pi / 2N) + cot((k - s2) pi / 2N))^2 / N``. It is
  symmetric in :obj:`s1` and :obj:`s2` on the allowed transitions.

  Args:
    n_sites: The ring size.
    k: The label of the single-excitation state.
    s1: The first label of the double-excitation state.
    s2: The second label of the double-excitation state.

  Returns:
    The squared dipole.

  Raises:
    excitonring.errors.InvalidManifoldPairError: if the labels have the wrong
      parity.
    excitonring.errors.SelectionRuleViolatedError: if the transition is
      forbidden or :obj:`s1` equals :obj:`s2`.
  """
  if s1 == s2:
    raise errors.SelectionRuleViolatedError("Component labels must differ, got %d twice" % s1)
  allowed, _ = selection_rule([k], sorted([s1, s2]), n_sites)
  if not allowed:
    raise errors.SelectionRuleViolatedError(
        "Transition %d -> {%d, %d} is forbidden for N=%d" % (k, s1, s2, n_sites))
  scale = math.pi / (2 * n_sites)
  value = 1 / math.tan(-s2 * scale) + 1 / math.tan((k - s2) * scale)
  return value ** 2 / n_sites

def momentum_category(labels, n_sites):
  """Returns :obj:`Category.BRIGHT_COUPLED` for states of zero total momentum."""
  if sum(labels) % (2 * n_sites) == 0:
    return Category.BRIGHT_COUPLED
  return Category.DARK_COUPLED

def classify_double(spec, state):
  """Classifies a double-excitation state.

  Args:
    spec: A uniform :class:`excitonring.RingSpec`.
    state: A :class:`excitonring.analytic.ManifoldState` with 2 labels.

  Returns:
    :obj:`Category.BRIGHT_COUPLED` if the state is reachable from the bright
    single-excitation state, :obj:`Category.DARK_COUPLED` otherwise.

  Raises:
    excitonring.errors.AnalyticRequiresUniformError: if :obj:`spec` is not
      uniform.
    excitonring.errors.InvalidManifoldError: if :obj:`state` does not have 2
      excitations.
  """
  analytic.check_uniform(spec)
  if state.n != 2:
    raise errors.InvalidManifoldError(
        "Only double-excitation states have a category, got n=%d" % state.n)
  allowed, _ = selection_rule([0], state.labels, spec.n_sites)
  return Category.BRIGHT_COUPLED if allowed else Category.DARK_COUPLED

def _manifold(spec, n):
  if n == 0:
    return [analytic.ground_state(spec)]
  return analytic.manifold_states(spec, n)

def dipole_matrix(spec, n):
  """Computes all squared dipoles from manifold n to manifold n + 1.

  Args:
    spec: A uniform :class:`excitonring.RingSpec`.
    n: The number of excitations of the source manifold, 0 for the ground
      state.

  Returns:
    A tuple ``(from_states, to_states, dipoles)`` where ``dipoles[i, j]`` is
    the squared dipole from ``from_states[i]`` to ``to_states[j]``.

  Raises:
    excitonring.errors.InvalidExcitationError: if manifold n + 1 does not
      exist.
  """
  analytic.check_uniform(spec)
  n_sites = spec.n_sites
  if n < 0 or n + 1 > n_sites:
    raise errors.InvalidExcitationError(
        "A %d-site ring has no transitions from %d excitations" % (n_sites, n))
  from_states = _manifold(spec, n)
  to_states = _manifold(spec, n + 1)
  source = analytic.to_fock_matrix(from_states, n_sites, n)
  target = analytic.to_fock_matrix(to_states, n_sites, n + 1)
  amplitudes = target.conj().T.dot(fock.raising_matrix(n_sites, n).dot(source))
  return from_states, to_states, np.abs(amplitudes.T) ** 2

def transition_table(spec, n, only_allowed=False):
  """Builds the table of all transitions from manifold n to manifold n + 1.

  Args:
    spec: A uniform :class:`excitonring.RingSpec`.
    n: The number of excitations of the source manifold, 0 for the ground
      state.
    only_allowed: If ``True``, keep only the transitions allowed by the
      selection rule.

  Returns:
    A list of :class:`excitonring.optics.TransitionRecord` ordered by source
    then target labels.
  """
  n_sites = spec.n_sites
  from_states, to_states, dipoles = dipole_matrix(spec, n)
  records = []
  for i, from_state in enumerate(from_states):
    for j, to_state in enumerate(to_states):
      allowed, winding = selection_rule(from_state.labels, to_state.labels, n_sites)
      if only_allowed and not allowed:
        continue
      closed_form = None
      if allowed and n == 1:
        closed_form = gamma12_closed_form(n_sites, from_state.labels[0], *to_state.labels)
      records.append(TransitionRecord(
          from_state=from_state,
          to_state=to_state,
          rule_allowed=allowed,
          winding=winding,
          dipole_oracle=float(dipoles[i, j]),
          dipole_closed_form=closed_form))
  return records

def is_forbidden(dipole):
  """Returns ``True`` if a squared dipole counts as zero."""
  return dipole <= constants.FORBIDDEN_DIPOLE_THRESHOLD
