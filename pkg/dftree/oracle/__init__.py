"""Slow reference implementations for differential testing."""

from dftree.oracle.naive_forest import (
    NaiveForest,
    naive_ancestor,
    naive_betweenness,
    naive_children,
    naive_closeness,
    naive_combine,
    naive_depth,
    naive_distance,
    naive_down_dists,
    naive_effective_val,
    naive_farness,
    naive_is_descendant,
    naive_lca,
    naive_maxsum_child,
    naive_parent,
    naive_path,
    naive_reduce_child_subtrees,
    naive_reduce_children,
    naive_root,
    naive_same_tree,
    naive_subtree,
    naive_subtree_max,
    naive_subtree_size,
    naive_subtree_sum,
)
from dftree.oracle.naive_graph import (
    NaiveGraph,
    naive_articulations,
    naive_blocks,
    naive_bridges,
    naive_component_size,
    naive_connected,
    naive_impact,
    naive_is_articulation,
    naive_is_bridge,
)

__all__ = [
    "NaiveForest",
    "NaiveGraph",
    "naive_ancestor",
    "naive_articulations",
    "naive_betweenness",
    "naive_blocks",
    "naive_bridges",
    "naive_children",
    "naive_closeness",
    "naive_combine",
    "naive_component_size",
    "naive_connected",
    "naive_depth",
    "naive_distance",
    "naive_down_dists",
    "naive_effective_val",
    "naive_farness",
    "naive_impact",
    "naive_is_articulation",
    "naive_is_bridge",
    "naive_is_descendant",
    "naive_lca",
    "naive_maxsum_child",
    "naive_parent",
    "naive_path",
    "naive_reduce_child_subtrees",
    "naive_reduce_children",
    "naive_root",
    "naive_same_tree",
    "naive_subtree",
    "naive_subtree_max",
    "naive_subtree_size",
    "naive_subtree_sum",
]
