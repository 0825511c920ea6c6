"""Exact intersection with principal Cartier divisors on polynomial rings over Q.

Cycles on Spec A, the operators div and (u)∩, the commutativity formula
(u)∩(v)∩[A] - (v)∩(u)∩[A] = sum_i div(p_i, a_i/b_i) with its witness data,
the supporting length computations, and the tame symbol.
"""

from .commutativity import (
    CommutatorReport,
    IdentityReport,
    commutator,
    verify_ab_swap,
    verify_boxed,
    verify_equal_orders,
    verify_formula6,
    verify_lemma51,
    verify_on_divisor,
    verify_principal_P_length,
    verify_single_prime,
)
from .cycles import (
    AutoSetting,
    Cycle,
    MonomialSetting,
    PlaneSetting,
    UnitPrime,
    cap,
    cap_chain,
    div_cycle,
    div_frac,
    make_setting,
    parse_cycle,
)
from .errors import (
    ContextError,
    IrrationalPoints,
    ParseError,
    PreconditionError,
    UnsupportedSetting,
    VerificationFailure,
)
from .factored import FactoredElement, FracElement, reduce_fraction
from .lengths import (
    CoordinatePrime,
    PIDMatrix,
    PointPrime,
    check_chi,
    check_det_length,
    coord_local_length,
    intersection_points,
    pid_coker_length,
    plane_mult,
)
from .parse import parse_element, parse_frac, parse_poly
from .poly import Poly
from .primes import (
    HeightOnePrime,
    Prime,
    Witness,
    WitnessEntry,
    alpha_sequence,
    make_witness,
    perturb_witness,
    support_partition,
    valuation,
)
from .resultant import resultant
from .tame import gersten_compose, tame

__all__ = [
    "alpha_sequence",
    "AutoSetting",
    "cap",
    "cap_chain",
    "check_chi",
    "check_det_length",
    "commutator",
    "CommutatorReport",
    "ContextError",
    "coord_local_length",
    "CoordinatePrime",
    "Cycle",
    "div_cycle",
    "div_frac",
    "FactoredElement",
    "FracElement",
    "gersten_compose",
    "HeightOnePrime",
    "IdentityReport",
    "intersection_points",
    "IrrationalPoints",
    "make_setting",
    "make_witness",
    "MonomialSetting",
    "parse_cycle",
    "parse_element",
    "parse_frac",
    "parse_poly",
    "ParseError",
    "perturb_witness",
    "pid_coker_length",
    "PIDMatrix",
    "plane_mult",
    "PlaneSetting",
    "PointPrime",
    "Poly",
    "PreconditionError",
    "Prime",
    "reduce_fraction",
    "resultant",
    "support_partition",
    "tame",
    "UnitPrime",
    "UnsupportedSetting",
    "valuation",
    "VerificationFailure",
    "verify_ab_swap",
    "verify_boxed",
    "verify_equal_orders",
    "verify_formula6",
    "verify_lemma51",
    "verify_on_divisor",
    "verify_principal_P_length",
    "verify_single_prime",
    "Witness",
    "WitnessEntry",
]
