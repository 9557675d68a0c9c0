"""Compiled inner loops over CSR adjacency (``indptr``, ``indices``).

Every reduction is over integers or runs in a fixed order, so results do not
depend on the number of threads numba uses.
"""
import os

import numpy as np
from numba import config, njit, prange

if "NUMBA_THREADING_LAYER" not in os.environ:
    config.THREADING_LAYER_PRIORITY = ["omp", "tbb", "workqueue"]


@njit(cache=True, nogil=True)
def bfs(indptr, indices, source):
    """Hop counts from ``source``; -1 marks unreachable nodes."""
    n = indptr.size - 1
    dist = np.full(n, -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return dist


@njit(cache=True, nogil=True)
def _bfs_summary(indptr, indices, source, dist, queue):
    # dist must be all -1 on entry and is restored before returning
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    total = 0
    far = 0
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
                total += du
                if du > far:
                    far = du
    for i in range(tail):
        dist[queue[i]] = -1
    return total, tail - 1, far


@njit(cache=True, nogil=True, parallel=True)
def all_pairs_summary(indptr, indices, chunk=256):
    """Per-source (sum of distances, reachable targets, eccentricity) by BFS."""
    n = indptr.size - 1
    sums = np.zeros(n, dtype=np.int64)
    reach = np.zeros(n, dtype=np.int64)
    ecc = np.zeros(n, dtype=np.int64)
    nchunks = (n + chunk - 1) // chunk
    for c in prange(nchunks):
        dist = np.full(n, -1, dtype=np.int32)
        queue = np.empty(n, dtype=np.int32)
        stop = min(n, (c + 1) * chunk)
        for s in range(c * chunk, stop):
            t, r, f = _bfs_summary(indptr, indices, s, dist, queue)
            sums[s] = t
            reach[s] = r
            ecc[s] = f
    return sums, reach, ecc


@njit(cache=True, nogil=True)
def local_clustering_all(nb_ptr, nb_idx, out_ptr, out_idx, directed):
    """Clustering of every node.

    ``nb_*`` is the direction-free neighbourhood; ``out_*`` the link set that
    is counted among neighbours (out-links for directed graphs, the same
    adjacency for undirected ones).
    """
    n = nb_ptr.size - 1
    mark = np.full(n, -1, dtype=np.int64)
    c = np.zeros(n, dtype=np.float64)
    for i in range(n):
        k = nb_ptr[i + 1] - nb_ptr[i]
        if k < 2:
            continue
        for p in range(nb_ptr[i], nb_ptr[i + 1]):
            mark[nb_idx[p]] = i
        links = 0
        for p in range(nb_ptr[i], nb_ptr[i + 1]):
            u = nb_idx[p]
            for q in range(out_ptr[u], out_ptr[u + 1]):
                if mark[out_idx[q]] == i:
                    links += 1
        # undirected links were seen from both ends: 2E/(k(k-1)) == links/(k(k-1))
        c[i] = links / (k * (k - 1))
    return c
