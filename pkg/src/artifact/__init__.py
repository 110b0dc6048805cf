"""Fully dynamic bridges and 2-edge-connectivity on top trees."""

from .bridge_connectivity import BridgeConnectivity, GraphEdge
from .combined_forest import CombinedForest, InstrumentedForest
from .matching import MatchingVerdict, enumerate_perfect_matchings, unique_perfect_matching
from .oracle import SnapshotGraph

__all__ = [
    "BridgeConnectivity",
    "CombinedForest",
    "GraphEdge",
    "InstrumentedForest",
    "MatchingVerdict",
    "SnapshotGraph",
    "enumerate_perfect_matchings",
    "unique_perfect_matching",
]
