from .formula import (
    AccessFormula,
    And,
    Literal,
    MinimalClauseSet,
    Or,
    ThresholdGate,
    evaluate_formula,
    minimal_clauses,
)
from .equivalence import EquivalenceReport, verify_equivalence
from .perfectness import PerfectnessEnumerator, SecretDistribution, perfectness_check
from .counting import NaiveCounts, naive_scheme, naive_share_counts
from .compiler import CompileReport, compile_formula

__all__ = [
    'AccessFormula',
    'And',
    'Literal',
    'MinimalClauseSet',
    'Or',
    'ThresholdGate',
    'evaluate_formula',
    'minimal_clauses',
    'EquivalenceReport',
    'verify_equivalence',
    'PerfectnessEnumerator',
    'SecretDistribution',
    'perfectness_check',
    'NaiveCounts',
    'naive_scheme',
    'naive_share_counts',
    'CompileReport',
    'compile_formula',
]
