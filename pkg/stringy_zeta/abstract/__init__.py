from .blowup import Center, blowup_transform
from .duality import DualityReport, duality_check
from .from_germ import BlowupCheck, blowup_crosscheck, random_blowup_checks, stratification_of_model
from .oracle import OracleResult, hyperplane_oracle, hyperplane_stratum_class, projective_class
from .stratified import Divisor, StratifiedResolution, StratumClass, create_stratified_resolution
from .synthetic import Block, curve_block, point_block, product, projective_block, synthetic_resolution
from .zeta import closed_strata_form, zeta_abstract

__all__ = [
    "Center",
    "blowup_transform",
    "DualityReport",
    "duality_check",
    "BlowupCheck",
    "blowup_crosscheck",
    "random_blowup_checks",
    "stratification_of_model",
    "OracleResult",
    "hyperplane_oracle",
    "hyperplane_stratum_class",
    "projective_class",
    "Divisor",
    "StratifiedResolution",
    "StratumClass",
    "create_stratified_resolution",
    "Block",
    "curve_block",
    "point_block",
    "product",
    "projective_block",
    "synthetic_resolution",
    "closed_strata_form",
    "zeta_abstract",
]
