"""ExcitonRing module."""

from excitonring.analytic import ManifoldState
from excitonring.analytic import MomentumLabel
from excitonring.analytic import amplitude
from excitonring.analytic import component_energy
from excitonring.analytic import manifold_states
from excitonring.analytic import momentum_labels
from excitonring.analytic import to_fock_vector

from excitonring.config import load_config
from excitonring.config import spec_from_config

from excitonring.degeneracy import EnergyLevel
from excitonring.degeneracy import TripleReport
from excitonring.degeneracy import energy_ladder
from excitonring.degeneracy import evenly_spaced_triples
from excitonring.degeneracy import find_accidental
from excitonring.degeneracy import predicts_accidental
from excitonring.degeneracy import state_diagram

from excitonring.disorder import DisorderReport
from excitonring.disorder import coupling_disorder_check
from excitonring.disorder import first_order_level_correction
from excitonring.disorder import pt_coefficients
from excitonring.disorder import site_disorder_splitting

from excitonring.fock import FockBasis
from excitonring.fock import FockVector
from excitonring.fock import HermitianMatrix
from excitonring.fock import build_hamiltonian
from excitonring.fock import eig_hermitian
from excitonring.fock import enumerate_basis
from excitonring.fock import raising_matrix
from excitonring.fock import residual

from excitonring.model import RingSpec
from excitonring.model import make_ring
from excitonring.model import make_uniform_ring
from excitonring.model import validate

from excitonring.optics import Category
from excitonring.optics import TransitionRecord
from excitonring.optics import classify_double
from excitonring.optics import dipole_oracle
from excitonring.optics import gamma12_closed_form
from excitonring.optics import selection_rule
from excitonring.optics import transition_table

from excitonring.runner import Runner

from excitonring.version import __version__
