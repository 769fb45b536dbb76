"""Exact analyzer for line arrangements in the projective plane: weak
combinatorics, underlying rank-3 matroids, Jacobian syzygies and Milnor
algebra resolutions, matroid realization families, and the pair verdicts
built from them."""

from .arrangement import (Arrangement, DensePolynomial, IntersectionPoint,
                          Line, WeakCombinatorics, defining_polynomial,
                          intersection_points, parse_arrangement,
                          serialize_arrangement, transform,
                          weak_combinatorics)
from .exactnum import (QQ, ExactMatrix, FieldElement, QuadField, Rational,
                       element_arithmetic, kernel_basis, matrix_rank)
from .matroid import (CharPoly, Matroid3, characteristic_polynomial,
                      divisionally_free_rank3, matroid_from_arrangement,
                      matroids_isomorphic, nonfree_by_multiplicity,
                      validate_matroid, weak_combinatorics_of_matroid)
from .syzygy import (JacobianData, RelationDegrees, ResolutionSummary,
                     SyzygyVector, ar_dimension, jacobian, mdr,
                     milnor_hilbert, minimal_generators, relation_degrees,
                     resolution_summary, syzygy_matrix)

__version__ = "0.1.0"
