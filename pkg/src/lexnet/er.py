"""Erdős–Rényi G(n, m) graphs matched to a network's node and link counts."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooManyLinks
from .graph import LexNetwork
from .metrics import MetricsRecord, compute_metrics


@dataclass(frozen=True)
class ERSpec:
    N: int
    K: int
    directed: bool = False
    seed: int = 42
    samples: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("ER graph needs at least one node")
        if self.K < 0:
            raise ValueError("link count must be non-negative")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.K > self.max_links:
            raise TooManyLinks(
                f"K={self.K} exceeds the {self.max_links} possible "
                f"{'directed' if self.directed else 'undirected'} links on N={self.N} nodes"
            )

    @property
    def max_links(self) -> int:
        pairs = self.N * (self.N - 1)
        return pairs if self.directed else pairs // 2

    @classmethod
    def matching(cls, graph: LexNetwork, seed: int = 42, samples: int = 1) -> "ERSpec":
        return cls(graph.N, graph.K, graph.directed, seed, samples)


def sample_rng(seed: int, sample: int) -> np.random.Generator:
    """Independent PCG64 stream for one (seed, sample index)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(sample,))))


def _draw_pairs(rng, n, count, directed):
    """``count`` distinct non-self pairs by rejection, encoded as u * n + v."""
    chosen = set()
    order = []
    while len(chosen) < count:
        need = count - len(chosen)
        batch = rng.integers(0, n, size=(max(need, 16) + need // 4, 2))
        for u, v in batch.tolist():
            if u == v:
                continue
            if not directed and u > v:
                u, v = v, u
            code = u * n + v
            if code in chosen:
                continue
            chosen.add(code)
            order.append(code)
            if len(chosen) == count:
                break
    return order


def _all_pairs(n, directed):
    for u in range(n):
        for v in range(n) if directed else range(u + 1, n):
            if u != v:
                yield u * n + v


def generate_er(spec: ERSpec, sample: int = 0) -> LexNetwork:
    """One G(n, m) draw; the same (seed, sample) always gives the same link set.

    Above half density the excluded pairs are drawn instead, which keeps the
    rejection loop short near the complete graph.
    """
    rng = sample_rng(spec.seed, sample)
    n = spec.N
    if 2 * spec.K <= spec.max_links:
        codes = _draw_pairs(rng, n, spec.K, spec.directed)
    else:
        excluded = set(_draw_pairs(rng, n, spec.max_links - spec.K, spec.directed))
        codes = [c for c in _all_pairs(n, spec.directed) if c not in excluded]
    g = LexNetwork(spec.directed)
    g.add_nodes(n)
    for code in codes:
        g.add_link(*divmod(code, n))
    return g


def generate_er_samples(spec: ERSpec) -> list[LexNetwork]:
    return [generate_er(spec, i) for i in range(spec.samples)]


def _mean_or_none(values):
    if any(v is None for v in values):
        return None
    return float(np.mean(values))


def er_reference_metrics(spec: ERSpec) -> MetricsRecord:
    """Per-measure mean over ``spec.samples`` draws.

    With one sample this is the record of that single graph. D is the
    rounded mean diameter when averaging.
    """
    records = [compute_metrics(generate_er(spec, i)) for i in range(spec.samples)]
    if len(records) == 1:
        return records[0]
    d = _mean_or_none([r.D for r in records])
    first = records[0]
    return MetricsRecord(
        directedness=first.directedness,
        N=first.N,
        K=first.K,
        avg_degree=first.avg_degree,
        avg_out_degree=first.avg_out_degree,
        C=float(np.mean([r.C for r in records])),
        L=_mean_or_none([r.L for r in records]),
        L_literal=_mean_or_none([r.L_literal for r in records]),
        D=None if d is None else int(round(d)),
        reachable_pairs=int(round(np.mean([r.reachable_pairs for r in records]))),
        component_count=int(round(np.mean([r.component_count for r in records]))),
        largest_component_size=int(round(np.mean([r.largest_component_size for r in records]))),
    )
