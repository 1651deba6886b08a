"""Parenthesis sequences: splay-backed depth first tours with monoid folds."""

from dftree.parenseq.annotations import (
    Annotation,
    ItemAnnotation,
    LcaAnnotation,
    MomentAnnotation,
    PathAnnotation,
    RcAnnotation,
    RcsAnnotation,
    Source,
)
from dftree.parenseq.sequence import LCA_SLOT, SIZE_SLOT, Kind, SeqNode, SeqRef, SequenceStore
from dftree.parenseq.summaries import (
    DepthSummary,
    LcaSummary,
    MomentSummary,
    Monoid,
    RcsSummary,
    RcSummary,
    concat_depth,
    concat_lca,
    concat_moment,
    concat_rc,
    concat_rcs,
)

__all__ = [
    "Annotation",
    "ItemAnnotation",
    "LcaAnnotation",
    "MomentAnnotation",
    "PathAnnotation",
    "RcAnnotation",
    "RcsAnnotation",
    "Source",
    "LCA_SLOT",
    "SIZE_SLOT",
    "Kind",
    "SeqNode",
    "SeqRef",
    "SequenceStore",
    "DepthSummary",
    "LcaSummary",
    "MomentSummary",
    "Monoid",
    "RcSummary",
    "RcsSummary",
    "concat_depth",
    "concat_lca",
    "concat_moment",
    "concat_rc",
    "concat_rcs",
]
