"""Robustness of the accidental degeneracy against disorder.

Site energy disorder ``V = sum_j delta_j n_j`` is treated with degenerate
perturbation theory on the uniform accidental level and compared with the
exact spectrum of the disordered ring. Bond disorder is checked exactly.

Random draws use the Philox counter-based generator of NumPy, so a seed gives
the same disorder on every platform.
"""

import collections

import numpy as np
import tensorflow as tf

from excitonring import analytic
from excitonring import constants
from excitonring import degeneracy
from excitonring import errors
from excitonring import fock
from excitonring import model as model_lib


class DisorderReport(collections.namedtuple("DisorderReport",
                                            ("n_sites",
                                             "seed",
                                             "eta",
                                             "alpha",
                                             "beta",
                                             "gamma",
                                             "predicted_first_order",
                                             "predicted_center",
                                             "observed_center",
                                             "observed_splitting",
                                             "cluster_energies",
                                             "level_corrections",
                                             "level_spread"))):
  """Outcome of one site disorder run.

  The tracked cluster holds the states of the accidental level whose first
  order correction is exactly ``2 alpha``. ``level_corrections`` lists the
  first order corrections of the whole level and ``level_spread`` the exact
  width of the whole perturbed level.
  """

  __slots__ = ()

  def to_dict(self):
    values = self._asdict()
    values["beta"] = [self.beta.real, self.beta.imag]
    values["cluster_energies"] = list(self.cluster_energies)
    values["level_corrections"] = list(self.level_corrections)
    return collections.OrderedDict(values)


class CouplingDisorderReport(collections.namedtuple("CouplingDisorderReport",
                                                    ("n_sites",
                                                     "seed",
                                                     "spread",
                                                     "couplings",
                                                     "preserved",
                                                     "level",
                                                     "multiplicity",
                                                     "uniform_multiplicity",
                                                     "protected_multiplicity"))):
  """Outcome of one bond disorder run."""

  __slots__ = ()

  def to_dict(self):
    values = self._asdict()
    values["couplings"] = list(self.couplings)
    values["level"] = self.level.to_dict() if self.level is not None else None
    return collections.OrderedDict(values)


def _generator(seed):
  if seed is None or seed < 0:
    raise ValueError("Disorder draws need a non negative integer seed, got %r" % (seed,))
  return np.random.Generator(np.random.Philox(int(seed)))

def draw_site_disorder(n_sites, eta, seed):
  """Draws site energy offsets uniformly in ``[-eta, eta]``.

  Args:
    n_sites: The ring size.
    eta: The disorder magnitude.
    seed: The generator seed.

  Returns:
    A tuple of :obj:`n_sites` floats.
  """
  uniform = _generator(seed).random(n_sites)
  return tuple(float(value) for value in eta * (2 * uniform - 1))

def draw_couplings(n_sites, spread, seed):
  """Draws bond couplings uniformly in ``[1 - spread, 1 + spread]``."""
  uniform = _generator(seed).random(n_sites)
  return tuple(float(value) for value in 1 + spread * (2 * uniform - 1))

def pt_coefficients(spec):
  """Returns the perturbation coefficients of the site disorder.

  Args:
    spec: A :class:`excitonring.RingSpec`.

  Returns:
    A tuple ``(alpha, beta, gamma)``: the mean offset, its first Fourier
    component and its alternating mean.
  """
  delta = np.asarray(spec.site_disorder, dtype=np.float64)
  n_sites = spec.n_sites
  sites = np.arange(1, n_sites + 1)
  alpha = float(np.sum(delta) / n_sites)
  beta = complex(np.sum(delta * np.exp(2j * np.pi * sites / n_sites)) / n_sites)
  gamma = float(np.sum(delta * (-1.0) ** sites) / n_sites)
  return alpha, beta, gamma

def _check_perturbative(spec):
  if not spec.has_uniform_couplings():
    raise errors.AnalyticRequiresUniformError(
        "Perturbation theory is built on a ring with equal couplings")
  if not degeneracy.predicts_accidental(spec.n_sites):
    raise errors.NoAccidentalLevelError(
        "A %d-site ring has no accidental degeneracy" % spec.n_sites)

def first_order_level_correction(spec):
  """Returns the first order correction ``2 alpha`` of the accidental level.

  Args:
    spec: A :class:`excitonring.RingSpec` with equal couplings.

  Returns:
    The correction as a float.

  Raises:
    excitonring.errors.NoAccidentalLevelError: if the ring size is not
      ``4l + 2``.
    excitonring.errors.AnalyticRequiresUniformError: if the couplings differ.
  """
  _check_perturbative(spec)
  alpha, _, _ = pt_coefficients(spec)
  return 2 * alpha

def _accidental_level(spec):
  uniform = spec.with_site_disorder([0.0] * spec.n_sites)
  levels = degeneracy.find_accidental(uniform)
  target = 2 * spec.site_energy
  return min(levels, key=lambda level: abs(level.energy - target))

def first_order_corrections(spec):
  """Diagonalizes the site disorder within the uniform accidental level.

  Args:
    spec: A :class:`excitonring.RingSpec` with equal couplings.

  Returns:
    The ascending first order corrections of the level states.
  """
  _check_perturbative(spec)
  level = _accidental_level(spec)
  vectors = analytic.to_fock_matrix(level.states, spec.n_sites, 2)
  perturbation = fock.disorder_operator(spec, 2).matrix
  projected = vectors.conj().T.dot(perturbation).dot(vectors)
  projected = (projected + projected.conj().T) / 2
  return fock.eigvals_hermitian(projected)

def component_level_shifts(spec):
  """Returns the first order shifts of the degenerate component pairs.

  These are derived quantities without an independent reference.
  """
  alpha, beta, gamma = pt_coefficients(spec)
  return collections.OrderedDict([
      ("alpha_plus_beta", alpha + abs(beta)),
      ("alpha_minus_beta", alpha - abs(beta)),
      ("alpha_plus_gamma", alpha + gamma),
      ("alpha_minus_gamma", alpha - gamma)])

def _nearest(eigenvalues, center, count):
  order = np.argsort(np.abs(eigenvalues - center), kind="stable")
  return np.sort(eigenvalues[order[:count]]), np.sort(eigenvalues[order[count:]])

def site_disorder_splitting(spec_base, eta, seed):
  """Measures how the accidental level splits under random site energies.

  Args:
    spec_base: A uniform :class:`excitonring.RingSpec` of size ``4l + 2``.
    eta: The disorder magnitude.
    seed: The generator seed.

  Returns:
    A :class:`excitonring.disorder.DisorderReport`.

  Raises:
    ValueError: if :obj:`eta` is negative.
    excitonring.errors.AnalyticRequiresUniformError: if :obj:`spec_base` is not
      uniform.
    excitonring.errors.NoAccidentalLevelError: if the ring size is not
      ``4l + 2``.
    excitonring.errors.TrackingAmbiguousError: if the tracked cluster is not
      well separated from the rest of the spectrum.
  """
  if eta < 0:
    raise ValueError("The disorder magnitude must be non negative, got %g" % eta)
  analytic.check_uniform(spec_base)
  _check_perturbative(spec_base)
  n_sites = spec_base.n_sites
  spec = spec_base.with_site_disorder(draw_site_disorder(n_sites, eta, seed))

  alpha, beta, gamma = pt_coefficients(spec)
  predicted = first_order_level_correction(spec)
  center = 2 * spec.site_energy + predicted
  corrections = first_order_corrections(spec)
  tolerance = 1e-6 * eta + 1e-12
  protected = int(np.sum(np.abs(corrections - predicted) <= tolerance))

  eigenvalues = fock.eigvals_hermitian(fock.build_hamiltonian(spec, 2))
  cluster, rest = _nearest(eigenvalues, center, protected)
  width = float(cluster[-1] - cluster[0])
  if rest.size:
    separation = float(np.min(np.maximum(cluster[0] - rest, rest - cluster[-1])))
    if separation < constants.CLUSTER_SEPARATION_FACTOR * width:
      raise errors.TrackingAmbiguousError(
          "Cluster of width %g is only %g away from its neighbors (eta=%g, seed=%d)"
          % (width, separation, eta, seed))
  level, _ = _nearest(eigenvalues, center, len(corrections))

  tf.get_logger().info(
      "N=%d seed=%d eta=%g: splitting %g, center offset %g",
      n_sites, seed, eta, width, float(np.mean(cluster)) - center)
  return DisorderReport(
      n_sites=n_sites,
      seed=seed,
      eta=eta,
      alpha=alpha,
      beta=beta,
      gamma=gamma,
      predicted_first_order=predicted,
      predicted_center=center,
      observed_center=float(np.mean(cluster)),
      observed_splitting=width,
      cluster_energies=tuple(float(value) for value in cluster),
      level_corrections=tuple(float(value) for value in corrections),
      level_spread=float(level[-1] - level[0]))

def splitting_slope(spec_base, etas, seed):
  """Fits ``log(splitting)`` against ``log(eta)`` for one seed.

  Returns:
    The least squares slope.
  """
  splittings = [site_disorder_splitting(spec_base, eta, seed).observed_splitting
                for eta in etas]
  slope, _ = np.polyfit(np.log(etas), np.log(splittings), 1)
  return float(slope)

def coupling_disorder_check(n_sites, seed, spread, exploratory=False):
  """Checks that a zero energy double-excitation level survives random bonds.

  The sublattice symmetry pairs every single-particle energy with its
  opposite for any bond couplings, so ``N / 2`` zero energy pair states
  remain. The extra degeneracy of the uniform level is lifted.

  Args:
    n_sites: The ring size.
    seed: The generator seed.
    spread: Couplings are drawn in ``[1 - spread, 1 + spread]``.
    exploratory: Allow ring sizes without accidental degeneracy, as a control.

  Returns:
    A :class:`excitonring.disorder.CouplingDisorderReport`.

  Raises:
    ValueError: if :obj:`spread` is not in ``(0, 1)``.
    excitonring.errors.NoAccidentalLevelError: if the ring size is not
      ``4l + 2`` and :obj:`exploratory` is not set.
  """
  if not 0 < spread < 1:
    raise ValueError("The coupling spread must be in (0, 1), got %g" % spread)
  if not degeneracy.predicts_accidental(n_sites):
    if not exploratory:
      raise errors.NoAccidentalLevelError(
          "A %d-site ring has no accidental degeneracy" % n_sites)
    tf.get_logger().warning("Control run on a %d-site ring without accidental degeneracy",
                            n_sites)

  couplings = draw_couplings(n_sites, spread, seed)
  spec = model_lib.make_ring(n_sites, site_energy=0, couplings=couplings)
  zero_level = None
  for level in degeneracy.energy_ladder(spec, 2, method="oracle"):
    if abs(level.energy) <= constants.ZERO_LEVEL_TOLERANCE:
      zero_level = level
      break
  uniform_levels = degeneracy.find_accidental(model_lib.make_uniform_ring(n_sites))
  uniform_multiplicity = uniform_levels[0].degeneracy if uniform_levels else 0
  protected = n_sites // 2 if n_sites % 2 == 0 else 0
  multiplicity = zero_level.degeneracy if zero_level is not None else 0
  preserved = bool(uniform_levels) and zero_level is not None and multiplicity >= protected
  return CouplingDisorderReport(
      n_sites=n_sites,
      seed=seed,
      spread=spread,
      couplings=couplings,
      preserved=preserved,
      level=zero_level,
      multiplicity=multiplicity,
      uniform_multiplicity=uniform_multiplicity,
      protected_multiplicity=protected)
