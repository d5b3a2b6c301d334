"""Exact diagonalization in the occupation basis.

The n-excitation sector of an N-site ring is spanned by the ascending
n-subsets of the sites. This module builds the ring Hamiltonian restricted to
a sector directly in that basis, so it serves as the reference every closed
form in the library is checked against.
"""

import functools
import itertools

import numpy as np
import tensorflow as tf

from excitonring import constants
from excitonring import errors
from excitonring import model as model_lib


class FockBasis(object):
  """Lexicographically ordered occupation basis of one excitation sector."""

  def __init__(self, n_sites, n):
    """Initializes the basis.

    Args:
      n_sites: The ring size.
      n: The number of excitations.

    Raises:
      excitonring.errors.InvalidExcitationError: if :obj:`n` is not in
        ``[0, n_sites]``.
    """
    if n < 0 or n > n_sites:
      raise errors.InvalidExcitationError(
          "A %d-site ring has no sector with %d excitations" % (n_sites, n))
    self._n_sites = n_sites
    self._n = n
    self._states = tuple(itertools.combinations(range(1, n_sites + 1), n))
    self._index = {state: i for i, state in enumerate(self._states)}

  @property
  def n_sites(self):
    """The ring size."""
    return self._n_sites

  @property
  def n(self):
    """The number of excitations."""
    return self._n

  @property
  def states(self):
    """The occupied sites of each basis state, as ascending tuples."""
    return self._states

  def index_of(self, occupation):
    """Returns the position of :obj:`occupation` in the basis.

    Raises:
      excitonring.errors.InvalidOccupationError: if :obj:`occupation` is not
        a state of this basis.
    """
    index = self._index.get(tuple(occupation))
    if index is None:
      raise errors.InvalidOccupationError(
          "%s is not an ascending %d-subset of the sites 1..%d"
          % (tuple(occupation), self._n, self._n_sites))
    return index

  def as_array(self):
    """Returns the basis states as an integer array of shape [d, n]."""
    return np.array(self._states, dtype=np.int64).reshape(len(self._states), self._n)

  def __len__(self):
    return len(self._states)

  def __iter__(self):
    return iter(self._states)


class FockVector(object):
  """A complex amplitude vector over a :class:`excitonring.fock.FockBasis`."""

  def __init__(self, basis, amplitudes):
    amplitudes = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if amplitudes.shape[0] != len(basis):
      raise errors.DimensionMismatchError(
          "Expected %d amplitudes, got %d" % (len(basis), amplitudes.shape[0]))
    self._basis = basis
    self._amplitudes = amplitudes

  @property
  def basis(self):
    """The occupation basis."""
    return self._basis

  @property
  def amplitudes(self):
    """The amplitudes as a complex128 array."""
    return self._amplitudes

  def norm(self):
    """Returns the 2-norm."""
    return float(np.linalg.norm(self._amplitudes))

  def overlap(self, other):
    """Returns the inner product with the bra ``self``."""
    if len(other.basis) != len(self._basis):
      raise errors.DimensionMismatchError("Vectors live in different sectors")
    return complex(np.vdot(self._amplitudes, other.amplitudes))

  def to_dict(self):
    """Returns a JSON serializable representation."""
    return {
        "n_sites": self._basis.n_sites,
        "n": self._basis.n,
        "basis": [list(state) for state in self._basis],
        "amplitudes": _complex_pairs(self._amplitudes)}

  def __len__(self):
    return self._amplitudes.shape[0]


class HermitianMatrix(object):
  """A dense complex matrix checked to be Hermitian."""

  def __init__(self, matrix, tolerance=constants.HERMITIAN_TOLERANCE):
    """Wraps :obj:`matrix`.

    Raises:
      excitonring.errors.SymmetryViolationError: if :obj:`matrix` is not square
        or differs from its conjugate transpose by more than :obj:`tolerance`.
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
      raise errors.SymmetryViolationError(
          "Expected a square matrix, got shape %s" % (matrix.shape,))
    deviation = np.max(np.abs(matrix - matrix.conj().T)) if matrix.size else 0.0
    if deviation > tolerance:
      raise errors.SymmetryViolationError(
          "Matrix is not Hermitian: max |H - H^dagger| = %g" % deviation)
    self._matrix = matrix

  @property
  def matrix(self):
    """The matrix entries as a complex128 array."""
    return self._matrix

  @property
  def dimension(self):
    """The matrix dimension."""
    return self._matrix.shape[0]

  def norm(self):
    """Returns the spectral norm."""
    if self.dimension == 0:
      return 0.0
    return float(np.linalg.norm(self._matrix, ord=2))

  def to_dict(self):
    """Returns a JSON serializable representation (row-major re/im pairs)."""
    return {
        "dimension": self.dimension,
        "entries": [_complex_pairs(row) for row in self._matrix]}


@functools.lru_cache(maxsize=None)
def enumerate_basis(n_sites, n):
  """Returns the occupation basis of the n-excitation sector.

  Args:
    n_sites: The ring size.
    n: The number of excitations.

  Returns:
    A :class:`excitonring.fock.FockBasis`. Instances are cached and shared.

  Raises:
    excitonring.errors.InvalidExcitationError: if :obj:`n` is not in
      ``[0, n_sites]``.
  """
  return FockBasis(n_sites, n)

def build_hamiltonian(spec, n):
  """Builds the ring Hamiltonian restricted to the n-excitation sector.

  The diagonal holds ``sum(site_energy + site_disorder[j])`` over the occupied
  sites. An excitation on site ``j`` hops to an empty neighbor through the bond
  between them, with the bond coupling as amplitude.

  Args:
    spec: A :class:`excitonring.RingSpec`.
    n: The number of excitations.

  Returns:
    A :class:`excitonring.fock.HermitianMatrix`.

  Raises:
    excitonring.errors.InvalidSpecError: if :obj:`spec` is invalid.
    excitonring.errors.InvalidExcitationError: if :obj:`n` is out of range.
  """
  model_lib.check_spec(spec)
  n_sites = spec.n_sites
  basis = enumerate_basis(n_sites, n)
  matrix = np.zeros((len(basis), len(basis)), dtype=np.complex128)
  site_energies = [spec.site_energy + delta for delta in spec.site_disorder]
  for col, occupation in enumerate(basis):
    occupied = set(occupation)
    matrix[col, col] = sum(site_energies[site - 1] for site in occupation)
    for site in occupation:
      # Bond j couples site j to site j + 1, the last bond closes the ring.
      for target, bond in ((site % n_sites + 1, site),
                           ((site - 2) % n_sites + 1, (site - 2) % n_sites + 1)):
        if target in occupied:
          continue
        row = basis.index_of(sorted(occupied - {site} | {target}))
        matrix[row, col] += spec.couplings[bond - 1]
  return HermitianMatrix(matrix)

def disorder_operator(spec, n):
  """Returns the diagonal site disorder operator on the n-excitation sector.

  Args:
    spec: A :class:`excitonring.RingSpec`.
    n: The number of excitations.

  Returns:
    A :class:`excitonring.fock.HermitianMatrix` holding only the
    ``site_disorder`` contribution of :func:`build_hamiltonian`.
  """
  bare = model_lib.make_ring(
      spec.n_sites,
      site_energy=0,
      couplings=[0.0] * spec.n_sites,
      site_disorder=spec.site_disorder)
  return build_hamiltonian(bare, n)

def residual(hamiltonian, vector, energy):
  """Measures how far :obj:`vector` is from an eigenvector.

  Args:
    hamiltonian: A :class:`excitonring.fock.HermitianMatrix`.
    vector: A :class:`excitonring.fock.FockVector` or a 1D array.
    energy: The candidate eigenvalue.

  Returns:
    ``|H v - E v| / max(1, |v|)``.

  Raises:
    excitonring.errors.DimensionMismatchError: if the dimensions differ.
  """
  amplitudes = vector.amplitudes if isinstance(vector, FockVector) else np.asarray(vector)
  if amplitudes.shape != (hamiltonian.dimension,):
    raise errors.DimensionMismatchError(
        "Vector of shape %s does not match a matrix of dimension %d"
        % (amplitudes.shape, hamiltonian.dimension))
  delta = hamiltonian.matrix.dot(amplitudes) - energy * amplitudes
  return float(np.linalg.norm(delta) / max(1.0, np.linalg.norm(amplitudes)))

def eig_hermitian(hamiltonian):
  """Diagonalizes a Hermitian matrix.

  Args:
    hamiltonian: A :class:`excitonring.fock.HermitianMatrix` or a square array,
      which is then checked for Hermiticity.

  Returns:
    A tuple ``(eigenvalues, eigenvectors)``: ascending real eigenvalues and
    the matching orthonormal eigenvectors as the columns of a complex array.

  Raises:
    excitonring.errors.SymmetryViolationError: if the input is not Hermitian.
  """
  if not isinstance(hamiltonian, HermitianMatrix):
    hamiltonian = HermitianMatrix(hamiltonian)
  if hamiltonian.dimension == 0:
    return np.zeros([0]), np.zeros([0, 0], dtype=np.complex128)
  eigenvalues, eigenvectors = tf.linalg.eigh(tf.constant(hamiltonian.matrix))
  eigenvalues = np.real(eigenvalues.numpy()).astype(np.float64)
  return eigenvalues, eigenvectors.numpy()

def eigvals_hermitian(hamiltonian):
  """Returns the ascending eigenvalues of a Hermitian matrix."""
  if not isinstance(hamiltonian, HermitianMatrix):
    hamiltonian = HermitianMatrix(hamiltonian)
  if hamiltonian.dimension == 0:
    return np.zeros([0])
  eigenvalues = tf.linalg.eigvalsh(tf.constant(hamiltonian.matrix))
  return np.real(eigenvalues.numpy()).astype(np.float64)

@functools.lru_cache(maxsize=None)
def _raising_matrix(n_sites, n):
  source = enumerate_basis(n_sites, n)
  target = enumerate_basis(n_sites, n + 1)
  matrix = np.zeros((len(target), len(source)), dtype=np.float64)
  for col, occupation in enumerate(source):
    occupied = set(occupation)
    for site in range(1, n_sites + 1):
      if site not in occupied:
        matrix[target.index_of(sorted(occupied | {site})), col] = 1.0
  matrix.setflags(write=False)
  return matrix

def raising_matrix(n_sites, n):
  """Returns the collective raising operator from sector n to sector n + 1.

  The entry is 1 between an occupation ``B`` and ``B + {j}`` for every empty
  site ``j``.

  Args:
    n_sites: The ring size.
    n: The number of excitations of the source sector.

  Returns:
    A read-only float array of shape ``[C(N, n + 1), C(N, n)]``.

  Raises:
    excitonring.errors.InvalidExcitationError: if the target sector does not
      exist.
  """
  if n < 0 or n + 1 > n_sites:
    raise errors.InvalidExcitationError(
        "Cannot raise a %d-site ring from %d excitations" % (n_sites, n))
  return _raising_matrix(n_sites, n)


def _complex_pairs(values):
  return [[float(value.real), float(value.imag)] for value in values]
