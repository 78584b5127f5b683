"""Exact computations with the extended affine Lie algebra E(q) of a
connected non-negative unit form q."""

from .eala import ExtendedAffineLieAlgebra, GradedElement, dimensions
from .equiv import FormInvariants, are_equivalent, invariants, random_unimodular
from .gauge import Gauge, canonical_gauge, epsilon, xi_eval
from .roots import Root, RootKind, check_ears, classify, decompose, enumerate_roots, root_string
from .serre import eval_word, generator_image, parse_word
from .unitform import (
    DynkinType,
    UnitForm,
    bilinear,
    dynkin_type,
    evaluate,
    from_coefficients,
    from_json,
    is_connected,
    is_nonnegative,
    radical_data,
)

__version__ = "0.1.0"
