# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernel_pure: identical subset sums, two lanes.

The caller (backend.subset_power_sum) decides per query whether every
intermediate fits in a signed 64-bit word, using the L1 bound
prod C(k,j) * 2^{k(k-1)} (genus 0) or * 2^{k(n-k)(g-1)} (genus >= 2)
times the number of accumulated terms.  When it fits, the whole loop
runs on C arrays; otherwise the same algorithm runs on Python ints,
still with compiled control flow.  Both lanes return the same list as
the pure implementation, element for element.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef int _unrank(int n, int k, long long rank, int* out) except -1:
    cdef int slot, c, prev = -1
    cdef long long block
    cdef int i, j
    for slot in range(k, 0, -1):
        c = prev + 1
        while True:
            # block = C(n - c - 1, slot - 1) without overflow for the sizes here
            block = 1
            j = n - c - 1
            for i in range(1, slot):
                block = block * (j - i + 1) // i
            if rank < block:
                break
            rank -= block
            c += 1
        out[k - slot] = c
        prev = c
    return 0


cdef bint _next_comb(int* comb_, int k, int n):
    cdef int i = k - 1, j
    while i >= 0 and comb_[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    comb_[i] += 1
    for j in range(i + 1, k):
        comb_[j] = comb_[j - 1] + 1
    return True


cdef inline void _conv_ll(long long* a, long long* b, long long* out, int n):
    cdef int i, j, t
    cdef long long ai
    memset(out, 0, n * sizeof(long long))
    for i in range(n):
        ai = a[i]
        if ai:
            for j in range(n):
                if b[j]:
                    t = i + j
                    if t >= n:
                        t -= n
                    out[t] += ai * b[j]


cdef list _lane_ll(int n, int k, int genus, tuple sigma_indices,
                   long long lo, long long hi):
    cdef int jmax = 0, j, a, b, c, t, p, q, shift, seen
    cdef long long count = hi - lo
    for j in sigma_indices:
        if j > jmax:
            jmax = j
    cdef long long* acc = <long long*> calloc(n, sizeof(long long))
    cdef long long* e = <long long*> calloc((jmax + 1) * n, sizeof(long long))
    cdef long long* delta = <long long*> calloc(n, sizeof(long long))
    cdef long long* work = <long long*> calloc(n, sizeof(long long))
    cdef long long* work2 = <long long*> calloc(n, sizeof(long long))
    cdef long long* work3 = <long long*> calloc(n, sizeof(long long))
    cdef int* subset = <int*> calloc(k, sizeof(int))
    cdef bint* in_set = <bint*> calloc(n, sizeof(bint))
    cdef long long* swap
    cdef bint have_delta
    cdef int d_sign = -1 if (k * (k - 1) // 2) % 2 else 1

    try:
        _unrank(n, k, lo, subset)
        while True:
            # elementary symmetric vectors of the subset's root monomials
            memset(delta, 0, n * sizeof(long long))
            if jmax:
                memset(e, 0, (jmax + 1) * n * sizeof(long long))
                e[0] = 1
                seen = 0
                for a in range(k):
                    c = subset[a]
                    seen += 1
                    j = jmax if jmax < seen else seen
                    while j > 0:
                        for t in range(n):
                            p = t - c
                            if p < 0:
                                p += n
                            e[j * n + t] += e[(j - 1) * n + p]
                        j -= 1
                have_delta = False
                for j in sigma_indices:
                    if j == 0:
                        continue
                    if not have_delta:
                        for t in range(n):
                            delta[t] = e[j * n + t]
                        have_delta = True
                    else:
                        _conv_ll(delta, e + j * n, work, n)
                        swap = delta; delta = work; work = swap
                if not have_delta:
                    delta[0] = 1
            else:
                delta[0] = 1

            if genus == 1:
                for t in range(n):
                    acc[t] += delta[t]
            elif genus == 0:
                memset(work, 0, n * sizeof(long long))
                work[0] = 1
                for a in range(k):
                    for b in range(a + 1, k):
                        for t in range(n):
                            p = t - subset[a]
                            if p < 0:
                                p += n
                            q = t - subset[b]
                            if q < 0:
                                q += n
                            work2[t] = work[p] - work[q]
                        swap = work; work = work2; work2 = swap
                _conv_ll(work, work, work2, n)
                shift = 0
                for a in range(k):
                    shift += subset[a]
                shift %= n
                for t in range(n):
                    p = t - shift
                    if p < 0:
                        p += n
                    work[t] = work2[p] if d_sign > 0 else -work2[p]
                _conv_ll(delta, work, work2, n)
                for t in range(n):
                    acc[t] += work2[t]
            else:
                memset(in_set, 0, n * sizeof(bint))
                for a in range(k):
                    in_set[subset[a]] = True
                memset(work, 0, n * sizeof(long long))
                work[0] = 1
                for a in range(k):
                    c = subset[a]
                    for b in range(n):
                        if not in_set[b]:
                            for t in range(n):
                                p = t - c
                                if p < 0:
                                    p += n
                                q = t - b
                                if q < 0:
                                    q += n
                                work2[t] = work[p] - work[q]
                            swap = work; work = work2; work2 = swap
                for t in range(n):
                    work2[t] = work[t]
                for j in range(genus - 2):
                    _conv_ll(work2, work, work3, n)
                    swap = work2; work2 = work3; work3 = swap
                _conv_ll(delta, work2, work3, n)
                for t in range(n):
                    acc[t] += work3[t]

            count -= 1
            if count == 0:
                break
            _next_comb(subset, k, n)
        return [acc[t] for t in range(n)]
    finally:
        free(acc); free(e); free(delta); free(work); free(work2); free(work3)
        free(subset); free(in_set)


cdef list _conv_obj(list a, list b, int n):
    cdef int i, j, t
    out = [0] * n
    for i in range(n):
        ai = a[i]
        if ai:
            for j in range(n):
                bj = b[j]
                if bj:
                    t = i + j
                    if t >= n:
                        t -= n
                    out[t] = out[t] + ai * bj
    return out


cdef list _lane_obj(int n, int k, int genus, tuple sigma_indices,
                    long long lo, long long hi):
    cdef int jmax = 0, j, a, b, c, t, p, q, shift, seen, i
    cdef long long count = hi - lo
    for j in sigma_indices:
        if j > jmax:
            jmax = j
    cdef int* subset = <int*> calloc(k, sizeof(int))
    cdef bint* in_set = <bint*> calloc(n, sizeof(bint))
    cdef int d_sign = -1 if (k * (k - 1) // 2) % 2 else 1
    acc = [0] * n

    try:
        _unrank(n, k, lo, subset)
        while True:
            if jmax:
                e = [[0] * n for _ in range(jmax + 1)]
                e[0][0] = 1
                seen = 0
                for a in range(k):
                    c = subset[a]
                    seen += 1
                    j = jmax if jmax < seen else seen
                    while j > 0:
                        row = e[j]
                        prev = e[j - 1]
                        for t in range(n):
                            p = t - c
                            if p < 0:
                                p += n
                            if prev[p]:
                                row[t] = row[t] + prev[p]
                        j -= 1
                delta = None
                for j in sigma_indices:
                    if j == 0:
                        continue
                    delta = list(e[j]) if delta is None else _conv_obj(delta, e[j], n)
                if delta is None:
                    delta = [0] * n
                    delta[0] = 1
            else:
                delta = [0] * n
                delta[0] = 1

            if genus == 1:
                term = delta
            elif genus == 0:
                v = [0] * n
                v[0] = 1
                for a in range(k):
                    for b in range(a + 1, k):
                        w = [0] * n
                        for t in range(n):
                            p = t - subset[a]
                            if p < 0:
                                p += n
                            q = t - subset[b]
                            if q < 0:
                                q += n
                            w[t] = v[p] - v[q]
                        v = w
                d = _conv_obj(v, v, n)
                shift = 0
                for a in range(k):
                    shift += subset[a]
                shift %= n
                w = [0] * n
                for t in range(n):
                    p = t - shift
                    if p < 0:
                        p += n
                    w[t] = d[p] if d_sign > 0 else -d[p]
                term = _conv_obj(delta, w, n)
            else:
                memset(in_set, 0, n * sizeof(bint))
                for a in range(k):
                    in_set[subset[a]] = True
                r = [0] * n
                r[0] = 1
                for a in range(k):
                    c = subset[a]
                    for b in range(n):
                        if not in_set[b]:
                            w = [0] * n
                            for t in range(n):
                                p = t - c
                                if p < 0:
                                    p += n
                                q = t - b
                                if q < 0:
                                    q += n
                                w[t] = r[p] - r[q]
                            r = w
                power = r
                for i in range(genus - 2):
                    power = _conv_obj(power, r, n)
                term = _conv_obj(delta, power, n)

            for t in range(n):
                if term[t]:
                    acc[t] = acc[t] + term[t]
            count -= 1
            if count == 0:
                break
            _next_comb(subset, k, n)
        return acc
    finally:
        free(subset); free(in_set)


def unrank_combination(n, k, rank):
    """The rank-th k-subset of range(n) in lexicographic order."""
    cdef int* buf = <int*> calloc(k, sizeof(int))
    try:
        _unrank(n, k, rank, buf)
        return [buf[i] for i in range(k)]
    finally:
        free(buf)


def subset_power_sum(n, k, genus, sigma_indices, lo, hi, fits):
    """Sum the per-subset terms over lex ranks [lo, hi) as a length-n vector.

    fits=True selects the signed-64-bit lane; the caller is responsible
    for the overflow bound.
    """
    if lo >= hi:
        return [0] * n
    sig = tuple(sigma_indices)
    if fits:
        return _lane_ll(n, k, genus, sig, lo, hi)
    return _lane_obj(n, k, genus, sig, lo, hi)
