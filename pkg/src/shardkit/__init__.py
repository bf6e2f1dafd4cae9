# shardkit: threshold secret sharing with crucial and redundant shares
from .sharing import (
    PrimeModulus,
    ShareBundle,
    Threshold,
    deal_extended,
    deal_tree,
    make_rng,
    reconstruct_extended,
    reconstruct_tree,
)
from .access import compile_formula, perfectness_check, verify_equivalence
from .utils import LoggingPolicy, LogConfig, timer

__all__ = [
    'PrimeModulus',
    'ShareBundle',
    'Threshold',
    'deal_extended',
    'deal_tree',
    'make_rng',
    'reconstruct_extended',
    'reconstruct_tree',
    'compile_formula',
    'perfectness_check',
    'verify_equivalence',
    'LoggingPolicy',
    'LogConfig',
    'timer',
]
__version__ = "0.1.0"
