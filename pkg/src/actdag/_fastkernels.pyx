# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled implementations of the hot graph kernels.

Same contracts as ``_purekernels``: undirected CSR input (0-based, every
edge in both directions).  See that module for the documented semantics.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def lex_bfs_csr(indptr, indices, order):
    cdef cnp.int64_t[::1] iptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int32_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef cnp.int32_t[::1] order_in = np.ascontiguousarray(order, dtype=np.int32)
    cdef Py_ssize_t n = iptr.shape[0] - 1
    cdef Py_ssize_t m = idx.shape[0]
    out_arr = np.empty(n, dtype=np.int32)
    if n == 0:
        return out_arr
    cdef cnp.int32_t[::1] out = out_arr

    cdef cnp.int32_t[::1] prio = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t pos, k, v
    for pos in range(n):
        prio[order_in[pos]] = <cnp.int32_t> pos

    # Adjacency bucketed so neighbour lists come out sorted by input priority.
    cdef cnp.int64_t[::1] aptr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int32_t[::1] aidx = np.empty(m, dtype=np.int32)
    cdef Py_ssize_t u, w
    for u in range(n):
        for k in range(iptr[u], iptr[u + 1]):
            aptr[idx[k] + 1] += 1
    for u in range(n):
        aptr[u + 1] += aptr[u]
    cdef cnp.int64_t[::1] fill = np.empty(n, dtype=np.int64)
    for u in range(n):
        fill[u] = aptr[u]
    for pos in range(n):
        u = order_in[pos]
        for k in range(iptr[u], iptr[u + 1]):
            w = idx[k]
            aidx[fill[w]] = <cnp.int32_t> u
            fill[w] += 1

    cdef Py_ssize_t HEAD = n
    cdef Py_ssize_t TAIL = n + 1
    cdef cnp.int64_t[::1] nxt = np.empty(n + 2, dtype=np.int64)
    cdef cnp.int64_t[::1] prv = np.empty(n + 2, dtype=np.int64)
    cdef Py_ssize_t prev = HEAD
    for pos in range(n):
        v = order_in[pos]
        nxt[prev] = v
        prv[v] = prev
        prev = v
    nxt[prev] = TAIL
    prv[TAIL] = prev

    cdef cnp.int64_t EMPTY = -1
    cdef cnp.int64_t[::1] cls = np.zeros(n, dtype=np.int64)
    cdef cnp.uint8_t[::1] inlist = np.ones(n, dtype=np.uint8)
    # At most one split class per (vertex, incident edge) event.
    cdef Py_ssize_t maxc = n + m + 2
    cdef cnp.int64_t[::1] cfirst = np.empty(maxc, dtype=np.int64)
    cdef cnp.int64_t[::1] ctail = np.empty(maxc, dtype=np.int64)
    cdef cnp.int64_t[::1] cstamp = np.empty(maxc, dtype=np.int64)
    cdef cnp.int64_t[::1] csplit = np.empty(maxc, dtype=np.int64)
    cfirst[0] = order_in[0]
    ctail[0] = HEAD
    cstamp[0] = -1
    csplit[0] = -1
    cdef Py_ssize_t nclasses = 1

    cdef Py_ssize_t step, c0, c, c2, pv, nx, t, nx2
    cdef Py_ssize_t uu
    for step in range(n):
        v = nxt[HEAD]
        c0 = cls[v]
        uu = nxt[v]
        if cfirst[c0] == v:
            cfirst[c0] = uu if (uu < n and cls[uu] == c0) else EMPTY
        pv = prv[v]
        nx = nxt[v]
        nxt[pv] = nx
        prv[nx] = pv
        inlist[v] = 0
        out[step] = <cnp.int32_t> v

        for k in range(aptr[v], aptr[v + 1]):
            w = aidx[k]
            if not inlist[w]:
                continue
            c = cls[w]
            if cstamp[c] != step:
                cfirst[nclasses] = EMPTY
                ctail[nclasses] = prv[cfirst[c]]
                cstamp[nclasses] = -1
                csplit[nclasses] = -1
                cstamp[c] = step
                csplit[c] = nclasses
                nclasses += 1
            c2 = csplit[c]
            if cfirst[c] == w:
                uu = nxt[w]
                cfirst[c] = uu if (uu < n and cls[uu] == c) else EMPTY
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
    return out_arr


def greedy_color_csr(indptr, indices, sigma):
    cdef cnp.int64_t[::1] iptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int32_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef cnp.int32_t[::1] sig = np.ascontiguousarray(sigma, dtype=np.int32)
    cdef Py_ssize_t n = iptr.shape[0] - 1
    color_arr = np.zeros(n, dtype=np.int32)
    if n == 0:
        return color_arr
    cdef cnp.int32_t[::1] color = color_arr
    cdef cnp.int32_t[::1] pos = np.empty(n, dtype=np.int32)
    cdef cnp.int64_t[::1] mark = np.full(n + 2, -1, dtype=np.int64)
    cdef Py_ssize_t i, k, v, w, c
    for i in range(n):
        pos[sig[i]] = <cnp.int32_t> i
    for i in range(n):
        v = sig[i]
        for k in range(iptr[v], iptr[v + 1]):
            w = idx[k]
            if pos[w] < i:
                mark[color[w]] = v
        c = 1
        while mark[c] == v:
            c += 1
        color[v] = <cnp.int32_t> c
    return color_arr


def components_csr(indptr, indices):
    cdef cnp.int64_t[::1] iptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int32_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef Py_ssize_t n = iptr.shape[0] - 1
    labels_arr = np.full(n, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] labels = labels_arr
    cdef cnp.int64_t[::1] stack = np.empty(n if n else 1, dtype=np.int64)
    cdef Py_ssize_t comp = 0, top, s, u, w, k
    for s in range(n):
        if labels[s] != -1:
            continue
        labels[s] = <cnp.int32_t> comp
        top = 0
        stack[top] = s
        top += 1
        while top:
            top -= 1
            u = stack[top]
            for k in range(iptr[u], iptr[u + 1]):
                w = idx[k]
                if labels[w] == -1:
                    labels[w] = <cnp.int32_t> comp
                    stack[top] = w
                    top += 1
        comp += 1
    return labels_arr, comp


def check_peo_csr(indptr, indices, sigma):
    cdef cnp.int64_t[::1] iptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int32_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef cnp.int32_t[::1] sig = np.ascontiguousarray(sigma, dtype=np.int32)
    cdef Py_ssize_t n = iptr.shape[0] - 1
    cdef Py_ssize_t m = idx.shape[0]
    if n == 0:
        return True
    cdef cnp.int32_t[::1] pos = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t i, k, v, w, u, best
    for i in range(n):
        pos[sig[i]] = <cnp.int32_t> i
    # Demands bucketed per pivot vertex: every earlier neighbour of v other
    # than the latest one must be adjacent to that latest one.
    cdef cnp.int64_t[::1] dptr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] pivot = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        v = sig[i]
        best = -1
        u = -1
        for k in range(iptr[v], iptr[v + 1]):
            w = idx[k]
            if pos[w] < i and pos[w] > best:
                best = pos[w]
                u = w
        pivot[v] = u
        if u < 0:
            continue
        for k in range(iptr[v], iptr[v + 1]):
            w = idx[k]
            if pos[w] < best:
                dptr[u + 1] += 1
    for u in range(n):
        dptr[u + 1] += dptr[u]
    cdef cnp.int64_t[::1] dem = np.empty(dptr[n] if dptr[n] else 1, dtype=np.int64)
    cdef cnp.int64_t[::1] fill = np.empty(n, dtype=np.int64)
    for u in range(n):
        fill[u] = dptr[u]
    for i in range(n):
        v = sig[i]
        u = pivot[v]
        if u < 0:
            continue
        best = pos[u]
        for k in range(iptr[v], iptr[v + 1]):
            w = idx[k]
            if pos[w] < best:
                dem[fill[u]] = w
                fill[u] += 1
    cdef cnp.int64_t[::1] mark = np.full(n, -1, dtype=np.int64)
    for u in range(n):
        if dptr[u] == dptr[u + 1]:
            continue
        for k in range(iptr[u], iptr[u + 1]):
            mark[idx[k]] = u
        for k in range(dptr[u], dptr[u + 1]):
            if mark[dem[k]] != u:
                return False
    return True
