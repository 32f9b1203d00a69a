"""Pure-Python reference implementations of the hot graph kernels.

All kernels operate on an undirected graph in CSR form: ``indptr`` has length
n + 1, ``indices`` lists the neighbours of vertex ``v`` (0-based) in
``indices[indptr[v]:indptr[v + 1]]``, and every edge appears in both
directions.  The compiled extension in ``_fastkernels.pyx`` implements the
same contracts; ``actdag.kernels`` picks one of the two at import time.
"""

import numpy as np

__all__ = ["lex_bfs_csr", "greedy_color_csr", "components_csr", "check_peo_csr"]


def lex_bfs_csr(indptr, indices, order):
    """Lexicographic BFS via partition refinement, O(n + m).

    ``order`` is the input ordering (a permutation of 0..n-1).  Ties between
    equal lexicographic labels are broken by input-ordering position, so the
    output is deterministic and any clique prefix of the input ordering is
    preserved.
    """
    n = len(indptr) - 1
    if n == 0:
        return np.empty(0, dtype=np.int32)
    indptr = list(indptr)
    indices = list(indices)
    order = list(order)

    prio = [0] * n
    for pos, v in enumerate(order):
        prio[v] = pos
    # Adjacency re-sorted so each vertex lists its neighbours by ascending
    # input priority; this is what makes the refinement splits stable.
    adj = [[] for _ in range(n)]
    for pos in range(n):
        u = order[pos]
        for k in range(indptr[u], indptr[u + 1]):
            adj[indices[k]].append(u)

    HEAD = n
    TAIL = n + 1
    nxt = [0] * (n + 2)
    prv = [0] * (n + 2)
    prev = HEAD
    for v in order:
        nxt[prev] = v
        prv[v] = prev
        prev = v
    nxt[prev] = TAIL
    prv[TAIL] = prev

    EMPTY = -1
    cls = [0] * n
    inlist = [True] * n
    # Per-class state; classes are contiguous runs of the linked list.
    cfirst = [order[0]]
    ctail = [HEAD]
    cstamp = [-1]
    csplit = [-1]

    out = []
    for step in range(n):
        v = nxt[HEAD]
        c0 = cls[v]
        u = nxt[v]
        if cfirst[c0] == v:
            cfirst[c0] = u if (u < n and cls[u] == c0) else EMPTY
        pv = prv[v]
        nx = nxt[v]
        nxt[pv] = nx
        prv[nx] = pv
        inlist[v] = False
        out.append(v)

        for w in adj[v]:
            if not inlist[w]:
                continue
            c = cls[w]
            if cstamp[c] != step:
                # First neighbour seen in class c this step: open the split
                # class immediately in front of c.
                cfirst.append(EMPTY)
                ctail.append(prv[cfirst[c]])
                cstamp.append(-1)
                csplit.append(-1)
                cstamp[c] = step
                csplit[c] = len(cfirst) - 1
            c2 = csplit[c]
            if cfirst[c] == w:
                u2 = nxt[w]
                cfirst[c] = u2 if (u2 < n and cls[u2] == c) else EMPTY
            pv = prv[w]
            nx = nxt[w]
            nxt[pv] = nx
            prv[nx] = pv
            t = ctail[c2]
            nx2 = nxt[t]
            nxt[t] = w
            prv[w] = t
            nxt[w] = nx2
            prv[nx2] = w
            ctail[c2] = w
            cls[w] = c2
            if cfirst[c2] == EMPTY:
                cfirst[c2] = w
    return np.array(out, dtype=np.int32)


def greedy_color_csr(indptr, indices, sigma):
    """Greedy coloring along the ordering ``sigma``; colors are 1-based."""
    n = len(indptr) - 1
    if n == 0:
        return np.empty(0, dtype=np.int32)
    indptr = list(indptr)
    indices = list(indices)
    sigma = list(sigma)
    pos = [0] * n
    for i, v in enumerate(sigma):
        pos[v] = i
    color = [0] * n
    mark = [-1] * (n + 2)
    for i, v in enumerate(sigma):
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if pos[w] < i:
                mark[color[w]] = v
        c = 1
        while mark[c] == v:
            c += 1
        color[v] = c
    return np.array(color, dtype=np.int32)


def components_csr(indptr, indices):
    """Connected components; returns (labels, count) with labels by discovery."""
    n = len(indptr) - 1
    indptr = list(indptr)
    indices = list(indices)
    labels = [-1] * n
    comp = 0
    for s in range(n):
        if labels[s] != -1:
            continue
        labels[s] = comp
        stack = [s]
        while stack:
            u = stack.pop()
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if labels[w] == -1:
                    labels[w] = comp
                    stack.append(w)
        comp += 1
    return np.array(labels, dtype=np.int32), comp


def check_peo_csr(indptr, indices, sigma):
    """True iff each vertex's earlier-ordered neighbours form a clique.

    Linear-time variant of the Rose-Tarjan-Lueker test: for every vertex, all
    earlier neighbours except the latest one must be adjacent to that latest
    one.
    """
    n = len(indptr) - 1
    indptr = list(indptr)
    indices = list(indices)
    sigma = list(sigma)
    pos = [0] * n
    for i, v in enumerate(sigma):
        pos[v] = i
    demands = [[] for _ in range(n)]
    for i, v in enumerate(sigma):
        best = -1
        u = -1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if i > pos[w] > best:
                best = pos[w]
                u = w
        if u < 0:
            continue
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if pos[w] < best:
                demands[u].append(w)
    mark = [-1] * n
    for u in range(n):
        if not demands[u]:
            continue
        for k in range(indptr[u], indptr[u + 1]):
            mark[indices[k]] = u
        for w in demands[u]:
            if mark[w] != u:
                return False
    return True
