"""hnkit: exact experiments on Hessian-nilpotent polynomials.

Sparse polynomials over the Gaussian rationals, constant-coefficient
differential operators and the apolarity form, graded ideal and PDE solution
slices with saturation certificates, vanishing experiments for iterated
Laplacians of powers, and the gradient map z - grad P.
"""

from .analysis import (
    FixedPointReport,
    SymmetricMap,
    VanishReport,
    VanishRow,
    VanishingCertificate,
    certify_vanishing,
    check_product_expansion,
    fixed_point_check,
    gradient_system_generators,
    hessian_nilpotency_by_laplacian,
    hessian_nilpotency_by_matrix,
    is_hessian_nilpotent,
    iterate_in_solution_space,
    jacobian_det,
    product_expansion_rhs,
    shifted_vanishing_threshold,
    symmetric_map,
    vanish_experiment,
)
from .diffop import (
    apolar_form,
    apolar_gram,
    apply_diffop,
    derivative,
    gradient,
    hessian,
    laplacian,
    laplacian_power,
    matrix_power_is_zero,
    monomial_factorial,
)
from .errors import InternalCheckError, ParseError, ThresholdNotObserved
from .families import (
    FamilyKind,
    FamilySpec,
    dump_family_specs,
    isotropic_power,
    load_family_specs,
    ortho_isotropic_sum,
    random_homogeneous,
)
from .graded import (
    Certificate,
    CertificateStatus,
    SubspaceBasis,
    common_zero_certificate,
    default_probe_bound,
    ideal_graded_piece,
    orthogonal_complement,
    pde_solution_slice,
)
from .matrix import PolyMatrix, exact_divide
from .poly import (
    Polynomial,
    coefficient_vector,
    monomial_basis,
    polynomial_from_vector,
    slice_dimension,
    sum_of_squares,
)
from .scalars import GaussianRational, I, ONE, ZERO
from .textform import format_polynomial, parse_gaussian, parse_polynomial

__version__ = "0.1.0"
