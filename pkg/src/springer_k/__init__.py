"""Presentations of equivariant K-rings and cohomology of type-A Springer fibers."""

from .partitions import Partition, dual_partition, enumerate_partitions, multinomial, p_function, phi_sequence
from .polynomials import Polynomial, VariableSpace, complete_symmetric, elementary_symmetric, series_coefficient, substitute
from .presentations import (
    IdealPresentation,
    build_presentation,
    classical_tanisaki_ideal,
    equivariant_cohomology_ideal,
    equivariant_k_ideal,
    equivariant_k_ideal_compact,
    flag_ideal,
    ordinary_k_ideal,
    specialize_ideal,
)
from .fixed_points import fixed_points, gkm_image, restrict
from .groebner import buchberger, ideal_equality, normal_form, quotient_dimension, standard_monomials
from .verify import generic_rank, localization_injectivity

__version__ = "0.1.0"
