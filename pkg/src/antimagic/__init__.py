"""Strongly antimagic edge labelings of double spider trees.

Construct labelings case by case, verify the antimagic and strongly
antimagic properties, cross-check against an exact search oracle, and sweep
whole instance families.
"""

from .compose import (
    CompositionError,
    ConstructionBug,
    ReductionStep,
    attach_pendants_to_degree_class,
    delete_leaf_level,
    extend_leaves,
    insert_unit_path,
    remove_unit_path,
)
from .driver import strongly_antimagic_label
from .labelers import (
    SPECIAL_INSTANCE,
    EvenCaseContext,
    StepEvent,
    TypeBCContext,
    UnsupportedCase,
    even_right_steps,
    special_instance_labeling,
    label_even_right,
    label_odd_right,
    label_type_a,
    label_type_bc,
    odd_right_steps,
    type_a_steps,
    type_bc_steps,
)
from .labeling import (
    EdgeLabeling,
    LabeledTree,
    LabelingError,
    SumViolation,
    VertexSumReport,
    labeled_spider,
    labeled_tree,
    verify_antimagic,
    verify_bijection,
    verify_strongly_antimagic,
    vertex_sums,
)
from .oracle import SearchBudget, SearchResult, find_antimagic, find_strongly_antimagic
from .spiders import (
    CanonicalDoubleSpider,
    CaseTag,
    DoubleSpiderSpec,
    EdgeAddress,
    InvalidSpider,
    Parameters,
    SpiderTree,
    canonicalize,
    classify,
    derive_parameters,
    enumerate_instances,
    materialize_tree,
    parse_address,
)
from .sweep import SweepRecord, SweepReport, check_instance, run_sweep
from .trees import Edge, Tree, edge_key, make_tree, path_tree, star_tree

__all__ = [
    "CanonicalDoubleSpider",
    "CaseTag",
    "CompositionError",
    "ConstructionBug",
    "DoubleSpiderSpec",
    "Edge",
    "EdgeAddress",
    "EdgeLabeling",
    "EvenCaseContext",
    "SPECIAL_INSTANCE",
    "InvalidSpider",
    "LabeledTree",
    "LabelingError",
    "Parameters",
    "ReductionStep",
    "SearchBudget",
    "SearchResult",
    "SpiderTree",
    "StepEvent",
    "SumViolation",
    "SweepRecord",
    "SweepReport",
    "Tree",
    "TypeBCContext",
    "UnsupportedCase",
    "VertexSumReport",
    "attach_pendants_to_degree_class",
    "canonicalize",
    "check_instance",
    "classify",
    "delete_leaf_level",
    "derive_parameters",
    "edge_key",
    "enumerate_instances",
    "even_right_steps",
    "extend_leaves",
    "special_instance_labeling",
    "find_antimagic",
    "find_strongly_antimagic",
    "insert_unit_path",
    "label_even_right",
    "label_odd_right",
    "label_type_a",
    "label_type_bc",
    "labeled_spider",
    "labeled_tree",
    "make_tree",
    "materialize_tree",
    "odd_right_steps",
    "parse_address",
    "path_tree",
    "remove_unit_path",
    "run_sweep",
    "star_tree",
    "strongly_antimagic_label",
    "type_a_steps",
    "type_bc_steps",
    "verify_antimagic",
    "verify_bijection",
    "verify_strongly_antimagic",
    "vertex_sums",
]
