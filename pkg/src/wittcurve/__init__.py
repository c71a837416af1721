"""Exact Witt ring calculator for smooth projective curves with good reduction
over non-dyadic local fields.

Two independent decision engines are provided and cross-checked: one based on
the classifying invariants (rank parity, signed discriminant, Clifford class)
and one based on the group-ring model over the residue Witt classes.
"""

from .cli import FormSyntaxError, format_form, parse_form, run_command
from .engine import (
    CanonicalShape,
    CensusReport,
    InvariantProfile,
    QuaternionDistinctnessReport,
    RankOneStructureReport,
    RelationSuiteReport,
    Shape,
    canonical_form,
    enumerate_classes,
    equals,
    invariant_profile,
    is_trivial,
    rank_one_group_structure,
    verify_generator_relations,
    verify_quaternion_distinctness,
)
from .forms import (
    DiagonalForm,
    Generator,
    discriminant,
    enumerate_generators,
    negate,
    orthogonal_sum,
    quaternion_norm_form,
    signed_discriminant,
    tensor,
)
from .group_ring import (
    GroupRingElement,
    ResidueWittClass,
    RingIsoReport,
    check_ring_iso,
    enumerate_group_ring_elements,
    enumerate_residue_classes,
    from_group_ring,
    inclusion,
    residue_add,
    residue_mul,
    splitting_map,
    to_group_ring,
)
from .groups import (
    BrauerClass,
    CurveConfig,
    GlobalSquareClass,
    PicTorsionClass,
    UnitSquareClass,
    enumerate_groups,
    enumerate_pic,
    make_config,
    minus_one_class,
)
from .symbols import hasse_invariant, symbol, witt_invariant

__version__ = "0.1.0"

__all__ = [
    "BrauerClass",
    "CanonicalShape",
    "CensusReport",
    "CurveConfig",
    "DiagonalForm",
    "FormSyntaxError",
    "Generator",
    "GlobalSquareClass",
    "GroupRingElement",
    "InvariantProfile",
    "PicTorsionClass",
    "QuaternionDistinctnessReport",
    "RankOneStructureReport",
    "RelationSuiteReport",
    "ResidueWittClass",
    "RingIsoReport",
    "Shape",
    "UnitSquareClass",
    "canonical_form",
    "check_ring_iso",
    "discriminant",
    "enumerate_classes",
    "enumerate_generators",
    "enumerate_group_ring_elements",
    "enumerate_groups",
    "enumerate_pic",
    "enumerate_residue_classes",
    "equals",
    "format_form",
    "from_group_ring",
    "hasse_invariant",
    "inclusion",
    "invariant_profile",
    "is_trivial",
    "make_config",
    "minus_one_class",
    "negate",
    "orthogonal_sum",
    "parse_form",
    "quaternion_norm_form",
    "rank_one_group_structure",
    "residue_add",
    "residue_mul",
    "run_command",
    "signed_discriminant",
    "splitting_map",
    "symbol",
    "tensor",
    "to_group_ring",
    "verify_generator_relations",
    "verify_quaternion_distinctness",
    "witt_invariant",
]
