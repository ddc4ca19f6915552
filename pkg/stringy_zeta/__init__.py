"""
Exact stringy zeta functions of normal surface germs and of stratified log
resolutions in any dimension.
"""
from .errors import StringyError
from .pipeline import GermPipeline

__all__ = ["GermPipeline", "StringyError"]
