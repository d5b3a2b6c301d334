from parameterized import parameterized

import numpy as np
import tensorflow as tf

from excitonring import analytic
from excitonring import errors
from excitonring import fock
from excitonring import model
from excitonring.tests import test_util


class FockTest(tf.test.TestCase):

  def testEnumerateBasis(self):
    basis = fock.enumerate_basis(6, 2)
    self.assertLen(basis, 15)
    self.assertEqual(basis.states[0], (1, 2))
    self.assertEqual(basis.states[-1], (5, 6))
    for i, state in enumerate(basis):
      self.assertEqual(basis.index_of(state), i)
    self.assertEqual(len(set(basis.states)), 15)

  def testEnumerateBasisEdges(self):
    self.assertEqual(fock.enumerate_basis(3, 3).states, ((1, 2, 3),))
    self.assertEqual(fock.enumerate_basis(4, 0).states, ((),))
    with self.assertRaises(errors.InvalidExcitationError):
      fock.enumerate_basis(4, 5)

  def testIndexOfInvalidOccupation(self):
    basis = fock.enumerate_basis(6, 2)
    with self.assertRaises(errors.InvalidOccupationError):
      basis.index_of((2, 1))
    with self.assertRaises(errors.InvalidOccupationError):
      basis.index_of((1, 7))

  def testSingleExcitationHamiltonian(self):
    hamiltonian = fock.build_hamiltonian(test_util.uniform_ring(6), 1).matrix
    expected = np.zeros((6, 6))
    for i in range(6):
      expected[i, (i + 1) % 6] = 1
      expected[(i + 1) % 6, i] = 1
    self.assertAllClose(hamiltonian, expected)

  def testDoubleExcitationHamiltonian(self):
    basis = fock.enumerate_basis(6, 2)
    hamiltonian = fock.build_hamiltonian(test_util.uniform_ring(6), 2).matrix
    self.assertEqual(hamiltonian.shape, (15, 15))
    self.assertAllEqual(np.diag(hamiltonian), np.zeros(15))
    column = hamiltonian[:, basis.index_of((1, 2))]
    self.assertEqual(np.count_nonzero(column), 2)
    self.assertEqual(column[basis.index_of((1, 3))], 1)
    self.assertEqual(column[basis.index_of((2, 6))], 1)
    column = hamiltonian[:, basis.index_of((1, 3))]
    self.assertEqual(np.count_nonzero(column), 4)
    for occupation in ((2, 3), (3, 6), (1, 2), (1, 4)):
      self.assertEqual(column[basis.index_of(occupation)], 1)

  def testBoundaryBondCoupling(self):
    spec = model.make_ring(4, couplings=[1.0, 2.0, 3.0, 4.0])
    hamiltonian = fock.build_hamiltonian(spec, 1).matrix
    self.assertEqual(hamiltonian[0, 1], 1.0)
    self.assertEqual(hamiltonian[1, 2], 2.0)
    self.assertEqual(hamiltonian[2, 3], 3.0)
    self.assertEqual(hamiltonian[3, 0], 4.0)
    self.assertEqual(hamiltonian[0, 3], 4.0)

  def testSiteDisorderIsDiagonal(self):
    d = 0.3
    spec = model.make_uniform_ring(6).with_site_disorder([d, 0, 0, 0, 0, 0])
    uniform = fock.build_hamiltonian(test_util.uniform_ring(6), 1).matrix
    disordered = fock.build_hamiltonian(spec, 1).matrix
    expected = uniform.copy()
    expected[0, 0] += d
    self.assertAllClose(disordered, expected)
    self.assertAllClose(np.diag(fock.disorder_operator(spec, 1).matrix), [d, 0, 0, 0, 0, 0])

  @parameterized.expand([(seed,) for seed in range(5)])
  def testHermitianWithRandomParameters(self, seed):
    rng = np.random.default_rng(seed)
    spec = model.make_ring(
        7, site_energy=0.3, couplings=rng.uniform(0.1, 1.9, 7), site_disorder=rng.normal(size=7))
    for n in range(0, 8):
      matrix = fock.build_hamiltonian(spec, n).matrix
      self.assertAllClose(matrix, matrix.conj().T, atol=0)

  def testResidual(self):
    spec = test_util.uniform_ring(6)
    bright = analytic.ManifoldState(labels=(0,), energy=2.0)
    hamiltonian = fock.build_hamiltonian(spec, 1)
    vector = analytic.to_fock_vector(bright, 6)
    self.assertLessEqual(fock.residual(hamiltonian, vector, 2.0), 1e-10)
    self.assertGreaterEqual(fock.residual(hamiltonian, vector, 3.0), 0.5)

    state = analytic.ManifoldState(labels=(3, 9), energy=0.0)
    hamiltonian = fock.build_hamiltonian(spec, 2)
    self.assertLessEqual(fock.residual(hamiltonian, analytic.to_fock_vector(state, 6), 0.0), 1e-10)

  def testResidualDimensionMismatch(self):
    hamiltonian = fock.build_hamiltonian(test_util.uniform_ring(6), 2)
    with self.assertRaises(errors.DimensionMismatchError):
      fock.residual(hamiltonian, np.ones(6), 0.0)

  def testEigOneByOne(self):
    eigenvalues, eigenvectors = fock.eig_hermitian(np.array([[2.5]]))
    self.assertAllClose(eigenvalues, [2.5])
    self.assertAllClose(np.abs(eigenvectors), [[1.0]])

  def testEigSingleExcitation(self):
    eigenvalues, _ = fock.eig_hermitian(fock.build_hamiltonian(test_util.uniform_ring(6), 1))
    self.assertAllClose(eigenvalues, [-2, -1, -1, 1, 1, 2], atol=1e-12)

  def testEigDoubleExcitationZeroLevel(self):
    eigenvalues = fock.eigvals_hermitian(fock.build_hamiltonian(test_util.uniform_ring(6), 2))
    self.assertLen(eigenvalues, 15)
    self.assertEqual(int(np.sum(np.abs(eigenvalues) < 1e-9)), 5)

  @parameterized.expand([(seed,) for seed in range(3)])
  def testEigContract(self, seed):
    rng = np.random.default_rng(seed)
    matrix = rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))
    matrix = matrix + matrix.conj().T
    hamiltonian = fock.HermitianMatrix(matrix)
    eigenvalues, eigenvectors = fock.eig_hermitian(hamiltonian)
    self.assertTrue(np.all(np.diff(eigenvalues) >= 0))
    residuals = np.linalg.norm(matrix.dot(eigenvectors) - eigenvectors * eigenvalues, axis=0)
    self.assertLessEqual(np.max(residuals), 1e-10 * hamiltonian.norm())
    self.assertAllClose(eigenvectors.conj().T.dot(eigenvectors), np.eye(12), atol=1e-10)

  def testNonHermitianInput(self):
    with self.assertRaises(errors.SymmetryViolationError):
      fock.eig_hermitian(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with self.assertRaises(errors.SymmetryViolationError):
      fock.HermitianMatrix(np.zeros((2, 3)))

  def testRaisingMatrix(self):
    self.assertAllEqual(fock.raising_matrix(3, 0), np.ones((3, 1)))
    matrix = fock.raising_matrix(6, 2)
    self.assertEqual(matrix.shape, (20, 15))
    self.assertAllEqual(np.sum(matrix, axis=0), np.full(15, 4))
    with self.assertRaises(errors.InvalidExcitationError):
      fock.raising_matrix(3, 3)

  def testGroundToBrightDipole(self):
    for n_sites in range(3, 9):
      bright = analytic.to_fock_vector(analytic.ManifoldState(labels=(0,), energy=2.0), n_sites)
      raised = fock.raising_matrix(n_sites, 0).dot([1.0])
      self.assertNear(abs(np.vdot(bright.amplitudes, raised)) ** 2, n_sites, 1e-10)

  def testToDict(self):
    hamiltonian = fock.build_hamiltonian(test_util.uniform_ring(3), 1)
    values = hamiltonian.to_dict()
    self.assertEqual(values["dimension"], 3)
    self.assertEqual(values["entries"][0][1], [1.0, 0.0])
    vector = analytic.to_fock_vector(analytic.ManifoldState(labels=(0,), energy=2.0), 3)
    self.assertEqual(vector.to_dict()["basis"], [[1], [2], [3]])


if __name__ == "__main__":
  tf.test.main()
