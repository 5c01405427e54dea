# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same surface as :mod:`symtor._kernels._py`.

Integer elimination runs on 64-bit words with overflow checks; an overflow
hands the matrix back to the Python big-integer routine.
"""

from libc.stdlib cimport malloc, calloc, free

from symtor._kernels import _py

cdef extern from *:
    """
    static inline int symtor_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int symtor_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int symtor_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int symtor_mul_ovf(long long a, long long b, long long *r) nogil
    int symtor_sub_ovf(long long a, long long b, long long *r) nogil
    int symtor_popcount(unsigned long long x) nogil

# products of two residues must fit in a signed 64-bit word
cdef long long MAX_PRIME = 3037000499


cdef long long _inv_mod(long long a, long long p) nogil:
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int _rank_mod_p(long long *m, int nrows, int ncols, long long p) nogil:
    cdef int r = 0, col, i, j, piv
    cdef long long inv, f, tmp
    cdef long long *top
    cdef long long *row
    for i in range(nrows * ncols):
        m[i] %= p
        if m[i] < 0:
            m[i] += p
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = tmp
        top = m + r * ncols
        inv = _inv_mod(top[col], p)
        for i in range(r + 1, nrows):
            row = m + i * ncols
            f = row[col]
            if f != 0:
                f = f * inv % p
                for j in range(col, ncols):
                    row[j] = (row[j] - f * top[j]) % p
                    if row[j] < 0:
                        row[j] += p
        r += 1
    return r


cdef int _rank_bareiss(long long *m, int nrows, int ncols) nogil:
    """Fraction-free rank; returns -1 on 64-bit overflow."""
    cdef int r = 0, col, i, j, piv
    cdef long long prev = 1, a, b, x, y, tmp
    cdef long long *top
    cdef long long *row
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = tmp
        top = m + r * ncols
        a = top[col]
        for i in range(r + 1, nrows):
            row = m + i * ncols
            b = row[col]
            for j in range(col + 1, ncols):
                if symtor_mul_ovf(a, row[j], &x):
                    return -1
                if symtor_mul_ovf(b, top[j], &y):
                    return -1
                if symtor_sub_ovf(x, y, &x):
                    return -1
                row[j] = x // prev
            row[col] = 0
        prev = a
        r += 1
    return r


cdef long long *_to_buffer(rows, int *nrows, int *ncols) except? NULL:
    cdef int i, j
    nrows[0] = len(rows)
    ncols[0] = len(rows[0]) if nrows[0] else 0
    if nrows[0] == 0 or ncols[0] == 0:
        return NULL
    cdef long long *buf = <long long *> malloc(nrows[0] * ncols[0] * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(nrows[0]):
        row = rows[i]
        for j in range(ncols[0]):
            buf[i * ncols[0] + j] = row[j]
    return buf


def rank_mod_p(rows, p):
    """Rank over GF(p) by Gaussian elimination."""
    cdef int nrows, ncols, r
    if p > MAX_PRIME:
        return _py.rank_mod_p(rows, p)
    cdef long long *buf = _to_buffer([[x % p for x in row] for row in rows],
                                     &nrows, &ncols)
    if buf == NULL:
        return 0
    try:
        r = _rank_mod_p(buf, nrows, ncols, p)
    finally:
        free(buf)
    return r


def rank_integer(rows):
    """Rank over Q by fraction-free (Bareiss) elimination."""
    cdef int nrows, ncols, r
    cdef long long *buf
    try:
        buf = _to_buffer(rows, &nrows, &ncols)
    except OverflowError:
        return _py.rank_integer(rows)
    if buf == NULL:
        return 0
    try:
        r = _rank_bareiss(buf, nrows, ncols)
    finally:
        free(buf)
    if r < 0:
        return _py.rank_integer(rows)
    return r


cdef int _find(unsigned long long *faces, int lo, int hi, unsigned long long key) nogil:
    cdef int mid
    while lo < hi:
        mid = (lo + hi) // 2
        if faces[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef int _boundary_rank(unsigned long long *faces, int *start, int k, long long p,
                        int *overflow) nogil:
    # faces of size k live in [start[k], start[k+1]), sorted ascending
    cdef int nrows = start[k] - start[k - 1]
    cdef int ncols = start[k + 1] - start[k]
    cdef int j, row, below, r
    cdef unsigned long long face, bit
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *m = <long long *> calloc(nrows * ncols, sizeof(long long))
    if m == NULL:
        overflow[0] = 2
        return 0
    for j in range(ncols):
        face = faces[start[k] + j]
        below = 0
        bit = 1
        while bit <= face:
            if face & bit:
                below += 1
                row = _find(faces, start[k - 1], start[k], face ^ bit) - start[k - 1]
                m[row * ncols + j] = -1 if below & 1 else 1
            bit <<= 1
    if p == 0:
        r = _rank_bareiss(m, nrows, ncols)
        if r < 0:
            overflow[0] = 1
            r = 0
    else:
        r = _rank_mod_p(m, nrows, ncols, p)
    free(m)
    return r


def reduced_homology(masks, characteristic):
    """Reduced Betti numbers of the complex with the given face bitmasks.

    Entry ``j + 1`` of the result is ``dim H~_j`` for ``j >= -1``.
    """
    cdef int nfaces = len(masks)
    cdef int i, k, top = 0, overflow = 0
    cdef long long p = characteristic
    if nfaces == 0:
        return []
    if p > MAX_PRIME:
        return _py.reduced_homology(masks, characteristic)
    ordered = sorted(masks, key=lambda f: (bin(f).count("1"), f))
    cdef unsigned long long *faces = <unsigned long long *> malloc(
        nfaces * sizeof(unsigned long long))
    if faces == NULL:
        raise MemoryError()
    for i in range(nfaces):
        faces[i] = ordered[i]
    top = symtor_popcount(faces[nfaces - 1])
    cdef int *start = <int *> calloc(top + 3, sizeof(int))
    cdef int *ranks = <int *> calloc(top + 2, sizeof(int))
    if start == NULL or ranks == NULL:
        free(faces)
        free(start)
        free(ranks)
        raise MemoryError()
    try:
        k = 0
        for i in range(nfaces):
            while symtor_popcount(faces[i]) > k:
                k += 1
                start[k] = i
        for k in range(k + 1, top + 2):
            start[k] = nfaces
        with nogil:
            for k in range(1, top + 1):
                ranks[k] = _boundary_rank(faces, start, k, p, &overflow)
                if overflow:
                    break
        if overflow == 2:
            raise MemoryError()
        if overflow:
            return _py.reduced_homology(masks, characteristic)
        return [(start[k + 1] - start[k]) - ranks[k] - ranks[k + 1]
                for k in range(top + 1)]
    finally:
        free(faces)
        free(start)
        free(ranks)


def lower_complex_masks(a, gens):
    """Faces ``F`` with ``a - e_F >= g`` for some generator ``g``, as bitmasks."""
    cdef int n = len(a)
    cdef int ngens = len(gens)
    cdef int i, gi
    cdef unsigned long long slack, sub
    cdef bint ok
    if n > 62:
        return _py.lower_complex_masks(a, gens)
    cdef long long *av = <long long *> malloc(n * sizeof(long long) + 1)
    if av == NULL:
        raise MemoryError()
    for i in range(n):
        av[i] = a[i]
    faces = set()
    try:
        for gi in range(ngens):
            g = gens[gi]
            slack = 0
            ok = True
            for i in range(n):
                if av[i] < <long long> g[i]:
                    ok = False
                    break
                if av[i] > <long long> g[i]:
                    slack |= (<unsigned long long> 1) << i
            if not ok or slack in faces:
                continue
            sub = slack
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & slack
    finally:
        free(av)
    return sorted(faces)
