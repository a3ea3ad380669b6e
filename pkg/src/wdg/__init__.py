"""Weighted Dynkin diagrams of classical type and the Gram matrices of their
degree-one root spaces: which diagrams admit a unimodular pairing."""

from .construct import Construction, NotSpecial, construct_lambda
from .diagrams import (
    InvalidInput,
    PartitionInput,
    WeightedDiagram,
    diagram_from_divisors,
    diagram_from_input,
    enumerate_inputs,
    is_odd,
    is_special,
    odd_sequence,
    reduce_to_odd,
)
from .gram import CoefficientRing, LambdaAssignment, build_gram, gram_det, is_unimodular
from .roots import build_root_system
from .verify import Settings, check_input, verify_theorem

__all__ = [
    "CoefficientRing",
    "Construction",
    "InvalidInput",
    "LambdaAssignment",
    "NotSpecial",
    "PartitionInput",
    "Settings",
    "WeightedDiagram",
    "build_gram",
    "build_root_system",
    "check_input",
    "construct_lambda",
    "diagram_from_divisors",
    "diagram_from_input",
    "enumerate_inputs",
    "gram_det",
    "is_odd",
    "is_special",
    "is_unimodular",
    "odd_sequence",
    "reduce_to_odd",
    "verify_theorem",
]
