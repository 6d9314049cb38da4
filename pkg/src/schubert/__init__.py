"""Schubert derivations on exterior algebras, Pluecker quadrics and truncated KP checks."""

from .derivations import (SIGMA_BAR_MINUS, SIGMA_BAR_PLUS, SIGMA_MINUS, SIGMA_PLUS, SchubertKind,
                          apply_component, apply_series, giambelli, pieri_expand)
from .exterior import ExteriorElement, basis, contract, wedge, wedge_basis
from .kp import (KPVerdict, QPolynomial, diff_x, gamma_boson, h_in_x, kp_integer_check,
                 kp_residue_check, x_in_h)
from .laurent import Laurent, Tensor, WindowError
from .partitions import InvalidArguments, Partition, enumerate_partitions
from .pluecker import (SymbolicQuadric, Variant, classical_criterion, gamma_r, gamma_star_r,
                       pluecker_ideal, random_decomposable, theorem1_check, theorem2_check)
from .symmetric import (EPolynomial, TensorCoefficients, h, laksov_thorup, phi, phi_inverse,
                        schur_delta, schur_delta_transformed, sigma_minus_h, sigma_minus_poly,
                        truncated_reduce)

__version__ = "0.1.0"
