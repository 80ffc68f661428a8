from .knapsack import KnapsackSolution, knapsack_01
from .maxflow import Arc, FlowNetwork, MaxFlow, max_flow
from .mst import (
    MstResult,
    PrimState,
    enumerate_spanning_trees_min,
    is_spanning_tree,
    kruskal_mst,
    prim_init,
    prim_mst,
    prim_step,
)
from .shortest_path import shortest_path

__all__ = [
    "Arc",
    "FlowNetwork",
    "KnapsackSolution",
    "MaxFlow",
    "MstResult",
    "PrimState",
    "enumerate_spanning_trees_min",
    "is_spanning_tree",
    "knapsack_01",
    "kruskal_mst",
    "max_flow",
    "prim_init",
    "prim_mst",
    "prim_step",
    "shortest_path",
]
