"""Frobenius n-homomorphisms, n-transfers and n-branched coverings on finite
and exact models."""

from .algebra import (
    AlgebraElement,
    CommutativeAlgebra,
    LinearMap,
    make_function_algebra,
    mul,
    power,
)
from .coverings import (
    FiniteCovering,
    IntervalCoveringSpec,
    Multiset,
    build_interval_covering,
    check_covering,
    compose_coverings,
    group_quotient_covering,
    pullback_covering,
    resolve_covering,
    subgroup_quotient_covering,
)
from .frobenius import (
    char_poly,
    gugnin_kernel,
    is_frobenius,
    newton_transform,
    phi_cycle_sum,
    phi_diagonal_determinant,
    phi_recursive,
    series_identity_check,
)
from .partitions import SetPartition, join, partition_adjacent
from .polycover import PolynomialCovering, poly_covering_numeric_check, poly_transfer, polynomial_fiber
from .sympower import diagonal_map, induced_ring_hom, symmetric_power
from .transfer import (
    TransferTriple,
    check_transfer,
    check_transfer_consequences,
    compose_transfers,
    direct_image,
    frobenius_to_map,
    kernel_triviality,
    pullback_hom,
    theorem_5_2_roundtrip,
)

__version__ = "0.1.0"
