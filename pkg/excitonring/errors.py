"""Errors raised by the library.

Every error carries a stable ``code`` that the command line reports in its
JSON error document.
"""


class RingError(Exception):
  """Base class of all library errors."""

  code = "ring-error"


class InvalidSizeError(RingError, ValueError):
  """The ring has fewer than 3 sites."""

  code = "invalid-size"


class InvalidSpecError(RingError, ValueError):
  """A ring specification violates its invariants."""

  code = "invalid-spec"

  def __init__(self, errors):
    if isinstance(errors, str):
      errors = [errors]
    self.errors = list(errors)
    super(InvalidSpecError, self).__init__("; ".join(self.errors))


class InvalidExcitationError(RingError, ValueError):
  """The excitation number is outside of the ring sectors."""

  code = "invalid-excitation"


class InvalidOccupationError(RingError, ValueError):
  """A site tuple is not an ascending set of distinct ring sites."""

  code = "invalid-occupation"


class AnalyticRequiresUniformError(RingError, ValueError):
  """Closed-form eigenstates are only defined for uniform rings."""

  code = "analytic-requires-uniform"


class SymmetryViolationError(RingError, ValueError):
  """A matrix expected to be Hermitian is not."""

  code = "symmetry-violation"


class DimensionMismatchError(RingError, ValueError):
  """Operands live in sectors of different dimensions."""

  code = "dimension-mismatch"


class InvalidManifoldPairError(RingError, ValueError):
  """Two label sets do not describe adjacent excitation manifolds."""

  code = "invalid-manifold-pair"


class InvalidManifoldError(RingError, ValueError):
  """An operation received a state of the wrong excitation number."""

  code = "invalid-manifold"


class SelectionRuleViolatedError(RingError, ValueError):
  """The closed-form dipole was requested for a forbidden transition."""

  code = "selection-rule-violated"


class NoAccidentalLevelError(RingError, ValueError):
  """The ring size admits no accidental degeneracy."""

  code = "no-accidental-level"


class TrackingAmbiguousError(RingError, RuntimeError):
  """A perturbed eigenvalue cluster cannot be told apart from its neighbors."""

  code = "tracking-ambiguous"
