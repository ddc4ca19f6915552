from .partial_model import DivisorData, PartialModel, contract, create_partial_model
from .run import canonical_model, contraction_thresholds, model_near_one, nu_N, run_mmp

__all__ = [
    "DivisorData",
    "PartialModel",
    "contract",
    "create_partial_model",
    "canonical_model",
    "contraction_thresholds",
    "model_near_one",
    "nu_N",
    "run_mmp",
]
