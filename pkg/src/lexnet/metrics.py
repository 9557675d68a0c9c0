"""Degree, distance, path length, diameter and clustering measures.

Conventions where the textbook formulas leave room:

* L is the mean hop count over *reachable* ordered pairs, so it stays
  defined on disconnected graphs. ``L_literal`` divides the same sum by N^2
  instead, which equals ``L * (N - 1) / N`` on a strongly connected graph.
* D is the largest finite pairwise distance.
* Directed clustering uses the direction-free neighbourhood of a node (size
  k) and counts directed links among those neighbours over k(k-1).
* Nodes with fewer than two neighbours have clustering 0 and still count in
  the average.
"""
from __future__ import annotations

import math
import threading
from dataclasses import asdict, dataclass, fields

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .errors import EmptyGraph, NoPaths
from .graph import LexNetwork

# the parallel kernel already spreads over all cores; callers in several
# threads take turns (the workqueue threading layer is not re-entrant)
_parallel_lock = threading.Lock()


@dataclass(frozen=True)
class MetricsRecord:
    directedness: str
    N: int
    K: int
    avg_degree: float
    avg_out_degree: float
    C: float
    L: float | None
    L_literal: float | None
    D: int | None
    reachable_pairs: int
    component_count: int
    largest_component_size: int

    @property
    def k_avg(self) -> float:
        """Average degree as tabulated: K/N for directed, 2K/N for undirected."""
        return self.avg_out_degree if self.directedness == "directed" else self.avg_degree

    @property
    def has_paths(self) -> bool:
        return self.L is not None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "MetricsRecord":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})


@dataclass(frozen=True)
class DistanceRow:
    source: int
    distances: dict
    d_i: float | None

    @property
    def reachable(self) -> int:
        return len(self.distances)


def _check_node(graph, node):
    graph.successors(node)  # raises NodeOutOfRange


def degree(graph: LexNetwork, node: int) -> tuple[int, int, int]:
    """``(in_degree, out_degree, k)``; k is in + out for directed graphs."""
    _check_node(graph, node)
    out_deg = len(graph.successors(node))
    if not graph.directed:
        return out_deg, out_deg, out_deg
    in_deg = len(graph.predecessors(node))
    return in_deg, out_deg, in_deg + out_deg


def avg_degree(graph: LexNetwork) -> float:
    if graph.N == 0:
        raise EmptyGraph("average degree of a graph with no nodes")
    return 2 * graph.K / graph.N


def avg_out_degree(graph: LexNetwork) -> float:
    if graph.N == 0:
        raise EmptyGraph("average degree of a graph with no nodes")
    return graph.K / graph.N


def bfs_distances(graph: LexNetwork, source: int, csr=None) -> np.ndarray:
    """Hop counts from ``source`` following link direction; -1 where unreachable."""
    _check_node(graph, source)
    indptr, indices = csr if csr is not None else graph.csr()
    return _kernels.bfs(indptr, indices, source)


def all_pairs_distances(graph: LexNetwork):
    """Yield one :class:`DistanceRow` per source node, in id order."""
    csr = graph.csr()
    for s in range(graph.N):
        dist = _kernels.bfs(csr[0], csr[1], s)
        targets = np.flatnonzero(dist > 0)
        row = {int(t): int(dist[t]) for t in targets}
        d_i = float(dist[targets].sum()) / len(targets) if len(targets) else None
        yield DistanceRow(s, row, d_i)


def _path_summary(graph: LexNetwork):
    indptr, indices = graph.csr()
    if graph.N == 0:
        return 0, 0, 0
    with _parallel_lock:
        sums, reach, ecc = _kernels.all_pairs_summary(indptr, indices)
    return int(sums.sum()), int(reach.sum()), int(ecc.max())


def avg_path_length(graph: LexNetwork) -> float:
    total, pairs, _ = _path_summary(graph)
    if pairs == 0:
        raise NoPaths("no pair of distinct nodes is connected")
    return total / pairs


def diameter(graph: LexNetwork) -> int:
    _, pairs, far = _path_summary(graph)
    if pairs == 0:
        raise NoPaths("no pair of distinct nodes is connected")
    return far


def local_clustering(graph: LexNetwork, node: int) -> float:
    nbrs = graph.neighbors(node)
    k = len(nbrs)
    if k < 2:
        return 0.0
    if graph.directed:
        links = sum(len(graph.successors(u) & nbrs) for u in nbrs)
        return links / (k * (k - 1))
    links = sum(len(graph.successors(u) & nbrs) for u in nbrs) // 2
    return 2 * links / (k * (k - 1))


def clustering_coefficients(graph: LexNetwork) -> np.ndarray:
    """Local clustering of all nodes (compiled path)."""
    nb_ptr, nb_idx = graph.csr(undirected_view=True)
    if graph.directed:
        out_ptr, out_idx = graph.csr()
    else:
        out_ptr, out_idx = nb_ptr, nb_idx
    return _kernels.local_clustering_all(nb_ptr, nb_idx, out_ptr, out_idx, graph.directed)


def avg_clustering(graph: LexNetwork) -> float:
    if graph.N == 0:
        raise EmptyGraph("clustering of a graph with no nodes")
    return math.fsum(clustering_coefficients(graph)) / graph.N


def weak_components(graph: LexNetwork) -> tuple[int, int]:
    """``(component count, size of the largest)`` ignoring link direction."""
    if graph.N == 0:
        return 0, 0
    indptr, indices = graph.csr(undirected_view=True)
    adj = csr_matrix((np.ones(len(indices), dtype=np.int8), indices, indptr),
                     shape=(graph.N, graph.N))
    count, labels = connected_components(adj, directed=False)
    return int(count), int(np.bincount(labels).max())


def compute_metrics(graph: LexNetwork) -> MetricsRecord:
    """All measures in one pass. L, L_literal and D are None when no pair is connected."""
    n = graph.N
    if n == 0:
        raise EmptyGraph("cannot measure a graph with no nodes")
    total, pairs, far = _path_summary(graph)
    comps, largest = weak_components(graph)
    return MetricsRecord(
        directedness=graph.directedness,
        N=n,
        K=graph.K,
        avg_degree=2 * graph.K / n,
        avg_out_degree=graph.K / n,
        C=avg_clustering(graph),
        L=total / pairs if pairs else None,
        L_literal=total / (n * n) if pairs else None,
        D=far if pairs else None,
        reachable_pairs=pairs,
        component_count=comps,
        largest_component_size=largest,
    )
