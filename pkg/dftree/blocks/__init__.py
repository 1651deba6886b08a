"""Block forests for incremental biconnectivity."""

from dftree.blocks.block_forest import BLOCK_AGGREGATIONS, BlockForest, Round, Square

__all__ = ["BlockForest", "Square", "Round", "BLOCK_AGGREGATIONS"]
