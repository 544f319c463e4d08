"""Hot graph kernels over CSR adjacency arrays.

Every kernel has a numba ``@njit`` build and a pure-numpy twin with the same
signature.  The numba path is used unless ``PANTSDIST_DISABLE_NUMBA`` is set to
a non-empty value other than ``0`` (or numba cannot be imported).  Both paths
must return identical results; ``tests/test_kernels.py`` checks that.

CSR layout: ``indptr`` (n+1,), ``indices`` (2|E|,), ``edge_ids`` (2|E|,).  A
loop at ``v`` contributes two entries ``v`` to the row of ``v`` carrying the
same edge id; parallel edges contribute separate entries with distinct ids.
"""

from __future__ import annotations

import os
from collections import deque

import numpy as np

UNREACHED = -1
NO_CYCLE = np.iinfo(np.int64).max


def _numba_requested() -> bool:
    flag = os.environ.get("PANTSDIST_DISABLE_NUMBA", "")
    return flag in ("", "0")


# ---------------------------------------------------------------------------
# pure-numpy reference path


def bfs_distances_py(indptr, indices, source):
    n = indptr.shape[0] - 1
    dist = np.full(n, UNREACHED, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in indices[indptr[u] : indptr[u + 1]]:
            if dist[w] == UNREACHED:
                dist[w] = du
                queue.append(w)
    return dist


def girth_py(indptr, indices, edge_ids):
    n = indptr.shape[0] - 1
    best = NO_CYCLE
    dist = np.empty(n, dtype=np.int64)
    parent_edge = np.empty(n, dtype=np.int64)
    for root in range(n):
        dist.fill(UNREACHED)
        dist[root] = 0
        parent_edge[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                eid = edge_ids[k]
                if eid == parent_edge[u]:
                    continue
                if dist[w] == UNREACHED:
                    dist[w] = dist[u] + 1
                    parent_edge[w] = eid
                    queue.append(w)
                else:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def component_labels_py(indptr, indices, removed):
    n = indptr.shape[0] - 1
    labels = np.full(n, UNREACHED, dtype=np.int64)
    count = 0
    for s in range(n):
        if removed[s] or labels[s] != UNREACHED:
            continue
        labels[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for w in indices[indptr[u] : indptr[u + 1]]:
                if not removed[w] and labels[w] == UNREACHED:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return labels, count


# ---------------------------------------------------------------------------
# numba path

try:
    if not _numba_requested():
        raise ImportError("numba disabled by PANTSDIST_DISABLE_NUMBA")
    from numba import njit

    @njit(cache=True)
    def bfs_distances_nb(indptr, indices, source):
        n = indptr.shape[0] - 1
        dist = np.full(n, -1, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        dist[source] = 0
        queue[0] = source
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        return dist

    @njit(cache=True)
    def girth_nb(indptr, indices, edge_ids):
        n = indptr.shape[0] - 1
        best = np.iinfo(np.int64).max
        dist = np.empty(n, dtype=np.int64)
        parent_edge = np.empty(n, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        for root in range(n):
            dist[:] = -1
            dist[root] = 0
            parent_edge[root] = -1
            queue[0] = root
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                if 2 * dist[u] + 1 >= best:
                    break
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    eid = edge_ids[k]
                    if eid == parent_edge[u]:
                        continue
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        parent_edge[w] = eid
                        queue[tail] = w
                        tail += 1
                    else:
                        cand = dist[u] + dist[w] + 1
                        if cand < best:
                            best = cand
        return best

    @njit(cache=True)
    def component_labels_nb(indptr, indices, removed):
        n = indptr.shape[0] - 1
        labels = np.full(n, -1, dtype=np.int64)
        stack = np.empty(n, dtype=np.int64)
        count = 0
        for s in range(n):
            if removed[s] or labels[s] != -1:
                continue
            labels[s] = count
            stack[0] = s
            top = 1
            while top > 0:
                top -= 1
                u = stack[top]
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if not removed[w] and labels[w] == -1:
                        labels[w] = count
                        stack[top] = w
                        top += 1
            count += 1
        return labels, count

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


if HAVE_NUMBA:
    bfs_distances = bfs_distances_nb
    girth_kernel = girth_nb
    component_labels = component_labels_nb
else:
    bfs_distances = bfs_distances_py
    girth_kernel = girth_py
    component_labels = component_labels_py

BACKEND = "numba" if HAVE_NUMBA else "numpy"
