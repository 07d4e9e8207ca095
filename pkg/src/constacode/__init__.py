"""Constacyclic codes over GF(q): the families C'(q,m,r,l) and C(q,m,r,l),
reference codes, evaluation codes, weight distributions and distances."""

from .algebra import FiniteField, Polynomial, Subfield, field_for, get_field, minimal_poly, parse_field_spec
from .analysis import (
    DistanceResult,
    macwilliams,
    min_distance,
    self_dual_check,
    sphere_packing_check,
    table1_table2_check,
    weight_distribution,
)
from .codes import (
    ConstacyclicCode,
    GeneratorMatrix,
    bch_bound,
    bch_lower_bound,
    code_equal,
    contains,
    dual,
    encode,
    from_generator,
    generator_matrix,
)
from .families import (
    Exact,
    Range,
    cfamily,
    cfamily_dual_generator,
    companion_sequence,
    cprime,
    dilix,
    distance_witness,
    evaluation_code,
    ngrm,
    predict_params,
    prm2_weight_distribution,
    prm_params,
)
from .weights import WeightDistribution

__version__ = "0.1.0"
