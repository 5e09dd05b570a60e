"""Exact Calabi-Yau decisions for enveloping algebras of Lie algebras.

Everything is computed over cyclotomic extensions of the rationals with no
floating point anywhere: structure constants, Chevalley-Eilenberg homology,
PBW rewriting for cocycle deformations, cyclic potentials, and finite group
actions with their smash products.
"""

from .errors import (CheckResult, CocycleInvalid, ConfluenceFailure,
                     CyalgError, DimensionMismatch, DivisionByZero,
                     GeneratorMismatch, InvalidOneCocycle, JacobiViolation,
                     NotCYForm, NotDimensionThree, NotInvertible, NotLieAction,
                     NotSquare, NotUnimodular, OrderExceedsCap, ParseError)
from .groupact import (IntegralCharacter, MatrixGroup, group_closure,
                       in_special_linear, integral_character, is_lie_action,
                       skew_is_cy, skew_integral_invariants)
from .homology import (ChainComplex, CYReport, CYRoutes, betti_numbers,
                       ce_chain_complex, is_cy_universal)
from .lie import (CY3Class, LieAlgebra, Sextuple, adjoint_matrix,
                  adjoint_trace, classify_cy3, cy3_from_sextuple, derived_dim,
                  is_unimodular, new_lie_algebra, sextuple_extract)
from .linalg import (Matrix, determinant, fixed_space, invert, rank_kernel,
                     stack_rows)
from .potential import (CyclicPotential, cyclic_derivative, cyclic_reduce,
                        parse_potential, verify_potential)
from .problemfile import (CATALOG_CASE_NAMES, CATALOG_NAMES, Problem,
                          dump_text, load, load_catalog, loads,
                          problem_from_dict, problem_to_dict)
from .scalar import ONE, ZERO, Scalar, as_scalar, scalar_arith, zeta
from .sridharan import (Endomorphism, NCPolynomial, OneCocycle,
                        SridharanAlgebra, TwoCocycle, build_sridharan,
                        catalog, check_two_cocycle, format_ncpoly,
                        is_cy_sridharan, normal_form, parse_ncpoly,
                        xi_automorphism, zeta_dualizing_automorphism)

__version__ = "0.1.0"
