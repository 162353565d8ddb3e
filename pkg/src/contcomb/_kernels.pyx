# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py.sparse_eliminate``.

Columns are sorted ``(row, value)`` vectors updated by linear merges.  Rows
keep an exact nonzero count (the Markowitz cost) and a lazily pruned list of
candidate columns, so pivot choices coincide with the Python kernel.

Integer entries are held in int64 and kept below 2**31 in magnitude so that
every product fits; anything larger raises OverflowError and the caller
falls back to the arbitrary-precision Python path.
"""

from libc.stdint cimport int64_t
from libcpp.algorithm cimport sort, unique
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue
from libcpp.vector cimport vector

ctypedef pair[int, int64_t] entry
ctypedef vector[entry] column

cdef int64_t BOUND = 2147483648


cdef inline int64_t _mod(int64_t a, int64_t m) noexcept nogil:
    cdef int64_t r = a % m
    if r < 0:
        r += m
    return r


cdef int64_t _inverse(int64_t a, int64_t m) noexcept nogil:
    cdef int64_t t = 0, newt = 1, r = m, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += m
    return t


cdef Py_ssize_t _find(column& col, int r) noexcept nogil:
    # binary search; -1 when absent
    cdef Py_ssize_t lo = 0, hi = <Py_ssize_t>col.size(), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if col[mid].first < r:
            lo = mid + 1
        else:
            hi = mid
    if lo < <Py_ssize_t>col.size() and col[lo].first == r:
        return lo
    return -1


def sparse_eliminate(columns, Py_ssize_t nrows, int64_t modulus=0):
    cdef Py_ssize_t ncols = len(columns)
    cdef vector[column] cols
    cdef vector[vector[int]] rows
    cdef vector[int] rowcount
    cdef priority_queue[pair[int64_t, int]] heap
    cdef vector[entry] rowi
    cdef column colj
    cdef column merged
    cdef vector[int] cand
    cdef pair[int64_t, int] top
    cdef int j, i, r, c, best_r
    cdef int64_t v, p, pinv, aic, nv
    cdef Py_ssize_t k, a, b, na, nb, pos, best_cost, cost
    cdef bint found, overflow = False
    cdef list pivots = []
    cdef list pivot_rows = []

    cols.resize(ncols)
    rows.resize(nrows)
    rowcount.resize(nrows, 0)
    for j in range(ncols):
        for key, val in columns[j].items():
            r = key
            if modulus:
                v = _mod(val % modulus, modulus)
            else:
                if val >= BOUND or val <= -BOUND:
                    raise OverflowError("entry too large for the compiled kernel")
                v = val
            if v != 0:
                cols[j].push_back(entry(r, v))
        sort(cols[j].begin(), cols[j].end())
        for k in range(<Py_ssize_t>cols[j].size()):
            r = cols[j][k].first
            rows[r].push_back(j)
            rowcount[r] += 1
        if cols[j].size() > 0:
            heap.push(pair[int64_t, int](-<int64_t>cols[j].size(), -j))

    with nogil:
        while not heap.empty():
            top = heap.top()
            heap.pop()
            j = -top.second
            if cols[j].size() == 0 or <int64_t>cols[j].size() != -top.first:
                continue
            found = False
            best_cost = 0
            best_r = -1
            p = 0
            for k in range(<Py_ssize_t>cols[j].size()):
                v = cols[j][k].second
                if modulus or v == 1 or v == -1:
                    cost = rowcount[cols[j][k].first]
                    # rows ascend within a column, so ties keep the first
                    if not found or cost < best_cost:
                        found = True
                        best_cost = cost
                        best_r = cols[j][k].first
                        p = v
            if not found:
                continue
            i = best_r
            pinv = _inverse(p, modulus) if modulus else p

            # live columns of row i other than j, with their entries
            cand.swap(rows[i])
            rows[i].clear()
            sort(cand.begin(), cand.end())
            cand.erase(unique(cand.begin(), cand.end()), cand.end())
            rowi.clear()
            for k in range(<Py_ssize_t>cand.size()):
                c = cand[k]
                if c == j:
                    continue
                pos = _find(cols[c], i)
                if pos >= 0:
                    rowi.push_back(entry(c, cols[c][pos].second))
                    cols[c].erase(cols[c].begin() + pos)
            rowcount[i] = 0

            # pivot column scaled by pinv, without row i
            colj.clear()
            for k in range(<Py_ssize_t>cols[j].size()):
                r = cols[j][k].first
                if r != i:
                    v = cols[j][k].second * pinv
                    if modulus:
                        v = _mod(v, modulus)
                    colj.push_back(entry(r, v))
                    rowcount[r] -= 1
            cols[j].clear()

            # col_c -= a_ic * colj
            for k in range(<Py_ssize_t>rowi.size()):
                c = rowi[k].first
                aic = rowi[k].second
                merged.clear()
                a = 0
                b = 0
                na = <Py_ssize_t>cols[c].size()
                nb = <Py_ssize_t>colj.size()
                while a < na or b < nb:
                    if b >= nb or (a < na and cols[c][a].first < colj[b].first):
                        merged.push_back(cols[c][a])
                        a += 1
                    elif a >= na or colj[b].first < cols[c][a].first:
                        r = colj[b].first
                        nv = -colj[b].second * aic
                        if modulus:
                            nv = _mod(nv, modulus)
                        elif nv >= BOUND or nv <= -BOUND:
                            overflow = True
                            break
                        if nv != 0:
                            merged.push_back(entry(r, nv))
                            rows[r].push_back(c)
                            rowcount[r] += 1
                        b += 1
                    else:
                        r = colj[b].first
                        nv = cols[c][a].second - colj[b].second * aic
                        if modulus:
                            nv = _mod(nv, modulus)
                        elif nv >= BOUND or nv <= -BOUND:
                            overflow = True
                            break
                        if nv != 0:
                            merged.push_back(entry(r, nv))
                        else:
                            rowcount[r] -= 1
                        a += 1
                        b += 1
                if overflow:
                    break
                cols[c].swap(merged)
            if overflow:
                break
            with gil:
                pivots.append(1 if modulus else (p if p > 0 else -p))
                pivot_rows.append(i)
            for k in range(<Py_ssize_t>rowi.size()):
                c = rowi[k].first
                if cols[c].size() > 0:
                    heap.push(pair[int64_t, int](-<int64_t>cols[c].size(), -c))

    if overflow:
        raise OverflowError("intermediate value too large for the compiled kernel")
    leftover = []
    for j in range(ncols):
        if cols[j].size() > 0:
            d = {}
            for k in range(<Py_ssize_t>cols[j].size()):
                d[cols[j][k].first] = cols[j][k].second
            leftover.append(d)
    return pivots, leftover, pivot_rows
