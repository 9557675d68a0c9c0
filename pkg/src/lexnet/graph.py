"""Simple unweighted graphs with dense integer node ids and an optional word table."""
from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .errors import DuplicateLabel, FormatError, NodeOutOfRange

DIRECTED = "directed"
UNDIRECTED = "undirected"


class LexNetwork:
    """Directed or undirected simple graph.

    Nodes are ``0..N-1``. Self-loops and duplicate links are refused by
    :meth:`add_link`, so ``K`` is always the size of the link set. An
    undirected link is stored once per endpoint but counted once.
    """

    def __init__(self, directed: bool = True):
        self.directed = bool(directed)
        self._out: list[set[int]] = []
        self._in: list[set[int]] = []  # directed only
        self._labels: list[str | None] = []
        self._index: dict[str, int] = {}
        self._k = 0

    @property
    def directedness(self) -> str:
        return DIRECTED if self.directed else UNDIRECTED

    @property
    def N(self) -> int:
        return len(self._out)

    @property
    def K(self) -> int:
        return self._k

    def __repr__(self):
        return f"LexNetwork({self.directedness}, N={self.N}, K={self.K})"

    def add_node(self, label: str | None = None) -> int:
        if label is not None:
            if label in self._index:
                raise DuplicateLabel(label)
            self._index[label] = len(self._out)
        self._out.append(set())
        if self.directed:
            self._in.append(set())
        self._labels.append(label)
        return len(self._out) - 1

    def add_nodes(self, count: int) -> None:
        for _ in range(count):
            self.add_node()

    def intern(self, label: str) -> int:
        """Id of ``label``, adding the node on first sight."""
        node = self._index.get(label)
        if node is None:
            node = self.add_node(label)
        return node

    def node_id(self, label: str) -> int:
        return self._index[label]

    def label(self, node: int) -> str | None:
        self._check(node)
        return self._labels[node]

    @property
    def labels(self) -> list:
        return list(self._labels)

    def _check(self, node: int) -> None:
        if not 0 <= node < len(self._out):
            raise NodeOutOfRange(f"node {node} not in graph with N={len(self._out)}")

    def add_link(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        if u == v or v in self._out[u]:
            return False
        self._out[u].add(v)
        if self.directed:
            self._in[v].add(u)
        else:
            self._out[v].add(u)
        self._k += 1
        return True

    def has_link(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._out[u]

    def successors(self, node: int) -> set[int]:
        self._check(node)
        return self._out[node]

    def predecessors(self, node: int) -> set[int]:
        self._check(node)
        return self._in[node] if self.directed else self._out[node]

    def neighbors(self, node: int) -> set[int]:
        """Nodes adjacent to ``node`` ignoring direction."""
        self._check(node)
        if self.directed:
            return self._out[node] | self._in[node]
        return self._out[node]

    def links(self):
        """Each link once: ``(u, v)`` for u->v, or ``u < v`` for undirected."""
        for u, nbrs in enumerate(self._out):
            for v in sorted(nbrs):
                if self.directed or u < v:
                    yield u, v

    def copy(self) -> "LexNetwork":
        g = LexNetwork(self.directed)
        g._out = [set(s) for s in self._out]
        g._in = [set(s) for s in self._in]
        g._labels = list(self._labels)
        g._index = dict(self._index)
        g._k = self._k
        return g

    def csr(self, undirected_view: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` of out-adjacency, neighbour lists sorted.

        With ``undirected_view`` a directed graph is read with directions
        ignored.
        """
        n = self.N
        if undirected_view and self.directed:
            rows = [self._out[u] | self._in[u] for u in range(n)]
        else:
            rows = self._out
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum([len(r) for r in rows], out=indptr[1:])
        indices = np.empty(indptr[-1], dtype=np.int32)
        for u, r in enumerate(rows):
            indices[indptr[u]:indptr[u + 1]] = sorted(r)
        return indptr, indices

    def to_undirected(self) -> "LexNetwork":
        if not self.directed:
            raise ValueError("graph is already undirected")
        g = LexNetwork(directed=False)
        g._labels = list(self._labels)
        g._index = dict(self._index)
        g._out = [self._out[u] | self._in[u] for u in range(self.N)]
        g._k = sum(len(s) for s in g._out) // 2
        return g

    def write_edge_list(self, path) -> None:
        """CSV with header ``source,target``, labels quoted; unlabeled nodes use their id."""
        names = [str(i) if lab is None else lab for i, lab in enumerate(self._labels)]
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, quoting=csv.QUOTE_ALL, lineterminator="\n")
            writer.writerow(["source", "target"])
            for u, v in self.links():
                writer.writerow([names[u], names[v]])

    @classmethod
    def read_edge_list(cls, path, directed: bool = True) -> "LexNetwork":
        """Inverse of :meth:`write_edge_list`. Isolated nodes are not representable."""
        g = cls(directed)
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip().lower() for h in header[:2]] != ["source", "target"]:
                raise FormatError(f"{path}: edge list must start with header 'source,target'")
            for row in reader:
                if not row:
                    continue
                if len(row) < 2:
                    raise FormatError(f"{path}: bad row {row!r}")
                g.add_link(g.intern(row[0]), g.intern(row[1]))
        return g


def to_undirected(graph: LexNetwork) -> LexNetwork:
    return graph.to_undirected()


def from_links(n: int, links, directed: bool = True) -> LexNetwork:
    g = LexNetwork(directed)
    g.add_nodes(n)
    for u, v in links:
        g.add_link(u, v)
    return g


def write_edge_list(graph: LexNetwork, path) -> None:
    graph.write_edge_list(Path(path))
