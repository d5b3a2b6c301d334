"""Define constant values used thoughout the project."""

# Component energies closer to the site energy than this (times max(1, |S|))
# are snapped to it.
ZERO_SNAP_TOLERANCE = 1e-12

# Entrywise tolerance on H - H^dagger.
HERMITIAN_TOLERANCE = 1e-14

# Squared dipoles at or below this value count as forbidden.
FORBIDDEN_DIPOLE_THRESHOLD = 1e-10

# Relative gap (times max(1, |2S|)) above which two energies form distinct levels.
LEVEL_GROUPING_TOLERANCE = 1e-9

# Equality window for the spacing of cosine triples.
TRIPLE_SPACING_TOLERANCE = 1e-12

# Window around 0 in which a level counts as the zero-energy level.
ZERO_LEVEL_TOLERANCE = 1e-9

# A tracked eigenvalue cluster must be this many times its width away from
# the rest of the spectrum.
CLUSTER_SEPARATION_FACTOR = 5

# Tolerances used by the verification properties.
RESIDUAL_TOLERANCE = 1e-10
SPECTRUM_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-12
