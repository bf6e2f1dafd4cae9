from .field import (
    DEFAULT_PRIME,
    FieldElement,
    OpCounter,
    PrimeModulus,
    add,
    div,
    inv,
    make_rng,
    mul,
    sample_uniform,
)
from .shamir import Point, PolynomialSpec, deal_shamir, evaluate, reconstruct_shamir
from .scheme import (
    Child,
    CrucialValue,
    ExtendedShare,
    Leaf,
    PointValue,
    SchemeNode,
    ShareBundle,
    ShareSlot,
    SlotKind,
    Threshold,
    randomness_dimension,
    scheme_fingerprint,
)
from .extended import (
    ExtendedParams,
    authorized_extended,
    deal_additive,
    deal_extended,
    reconstruct_additive,
    reconstruct_extended,
)
from .compartments import deal_tree, reconstruct_tree, tree_authorized

__all__ = [
    'DEFAULT_PRIME',
    'FieldElement',
    'OpCounter',
    'PrimeModulus',
    'add',
    'div',
    'inv',
    'make_rng',
    'mul',
    'sample_uniform',
    'Point',
    'PolynomialSpec',
    'deal_shamir',
    'evaluate',
    'reconstruct_shamir',
    'Child',
    'CrucialValue',
    'ExtendedShare',
    'Leaf',
    'PointValue',
    'SchemeNode',
    'ShareBundle',
    'ShareSlot',
    'SlotKind',
    'Threshold',
    'randomness_dimension',
    'scheme_fingerprint',
    'ExtendedParams',
    'authorized_extended',
    'deal_additive',
    'deal_extended',
    'reconstruct_additive',
    'reconstruct_extended',
    'deal_tree',
    'reconstruct_tree',
    'tree_authorized',
]
