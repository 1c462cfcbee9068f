"""Optimal p-ary cyclic codes C_p(0,1,w): finite-field arithmetic, code
construction, direct verification, and the algebraic families that predict
minimum distance 4."""

from .code import (
    CodeReport,
    CodeSpec,
    LowWeightWitness,
    brute_force_min_distance,
    brute_force_witness,
    build_code,
    classify,
    sphere_packing_max_d,
    weight2_exists,
    weight3_search,
)
from .constructions import (
    FAMILIES,
    FamilyInstance,
    criterion_systems,
    derive_u,
    family_T1,
    family_T2,
    family_T4,
    family_T5,
    residue_criteria,
    theorem5_condition,
    verify_instance,
)
from .cyclotomic import Coset, all_cosets, coset, gcd_power_forms, mod_inverse, solve_linear_congruence
from .errors import *  # noqa: F401,F403
from .field import FieldCtx, legendre, make_field
from .poly import minimal_polynomial

__version__ = "0.1.0"
