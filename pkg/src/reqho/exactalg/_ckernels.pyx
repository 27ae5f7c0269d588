# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels (same contract as _pykernels)."""

from math import gcd
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    """
    typedef __int128 i128;
    static inline int i128_fits64(__int128 v) {
        return v >= (__int128)INT64_MIN && v <= (__int128)INT64_MAX;
    }
    static inline int64_t i128_hi(__int128 v) { return (int64_t)(v >> 64); }
    static inline uint64_t i128_lo(__int128 v) { return (uint64_t)v; }
    """
    ctypedef long long i128
    bint i128_fits64(i128 v)
    int64_t i128_hi(i128 v)
    uint64_t i128_lo(i128 v)

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef object _i128_to_py(i128 v):
    if i128_fits64(v):
        return <int64_t>v
    return (<object>i128_hi(v) << 64) | <object>i128_lo(v)


cpdef list strip(list a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n] if n != len(a) else a


cpdef list add(list a, list b):
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    cdef Py_ssize_t i
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return strip(out)


cpdef list sub(list a, list b):
    cdef list out = list(a)
    cdef Py_ssize_t i
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return strip(out)


cpdef list lincomb(list a, object ca, list b, object cb):
    cdef Py_ssize_t n = max(len(a), len(b)), i
    cdef list out = [0] * n
    if ca:
        for i in range(len(a)):
            out[i] = ca * a[i]
    if cb:
        for i in range(len(b)):
            out[i] = out[i] + cb * b[i]
    return strip(out)


cpdef list scale(list a, object c):
    if not c:
        return []
    return [c * x for x in a]


cdef int _bits(list a):
    cdef int m = 0, b
    for x in a:
        b = (<object>x).bit_length()
        if b > m:
            m = b
    return m


cdef list _mul_small(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef int64_t *pa = <int64_t *>PyMem_Malloc(na * sizeof(int64_t))
    cdef int64_t *pb = <int64_t *>PyMem_Malloc(nb * sizeof(int64_t))
    cdef i128 *acc = <i128 *>PyMem_Malloc((na + nb - 1) * sizeof(i128))
    cdef int64_t bj
    if pa == NULL or pb == NULL or acc == NULL:
        PyMem_Free(pa); PyMem_Free(pb); PyMem_Free(acc)
        raise MemoryError()
    try:
        for i in range(na):
            pa[i] = a[i]
        for j in range(nb):
            pb[j] = b[j]
        for i in range(na + nb - 1):
            acc[i] = 0
        for j in range(nb):
            bj = pb[j]
            if bj:
                for i in range(na):
                    acc[i + j] += <i128>pa[i] * bj
        return [_i128_to_py(acc[i]) for i in range(na + nb - 1)]
    finally:
        PyMem_Free(pa); PyMem_Free(pb); PyMem_Free(acc)


cpdef list mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if not na or not nb:
        return []
    cdef int ba = _bits(a), bb = _bits(b)
    cdef int lg = (<object>min(na, nb)).bit_length()
    if ba < 64 and bb < 64 and ba + bb + lg < 126:
        return _mul_small(a, b)
    if na < nb:
        a, b = b, a
        na, nb = nb, na
    cdef list out = [0] * (na + nb - 1)
    cdef object bj
    for j in range(nb):
        bj = b[j]
        if bj:
            for i in range(na):
                out[i + j] = out[i + j] + a[i] * bj
    return out


cpdef list diff(list a):
    cdef Py_ssize_t i
    return [i * a[i] for i in range(1, len(a))]


cpdef object content(list a):
    cdef object g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef object divexact(list a, list b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t db = len(b) - 1, da = len(a) - 1, k, i
    if da < db:
        return [] if not a else None
    cdef object lc = b[db], t, qk, rem
    cdef list r = list(a)
    cdef list q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        t = r[k + db]
        if t:
            qk, rem = divmod(t, lc)
            if rem:
                return None
            q[k] = qk
            for i in range(db):
                r[k + i] = r[k + i] - qk * b[i]
    for i in range(db):
        if r[i]:
            return None
    return q


cpdef tuple pdivrem(list a, list b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t db = len(b) - 1, da = len(a) - 1, j, i
    if da < db:
        return [], list(a), 0
    cdef object lc = b[db], t, qj
    cdef list r = list(a)
    cdef list q = [0] * (da - db + 1)
    cdef int k = 0
    for j in range(da - db, -1, -1):
        t = r[j + db]
        if not t:
            continue
        if t % lc:
            r = [lc * c for c in r]
            q = [lc * c for c in q]
            k += 1
            t = r[j + db]
        qj = t // lc
        q[j] = qj
        for i in range(db + 1):
            r[j + i] = r[j + i] - qj * b[i]
    return strip(q), strip(r[:db]), k


cpdef list rem_mod(list a, list b, object p):
    cdef Py_ssize_t db = len(b) - 1, j, i, n = len(a)
    cdef int64_t pp = p, inv, t
    cdef int64_t *r
    cdef int64_t *bb
    if p >= (1 << 31):
        # keep products inside 64 bits
        raise ValueError("modulus must be below 2**31")
    inv = pow(b[db] % p, -1, p)
    r = <int64_t *>PyMem_Malloc(max(n, 1) * sizeof(int64_t))
    bb = <int64_t *>PyMem_Malloc((db + 1) * sizeof(int64_t))
    if r == NULL or bb == NULL:
        PyMem_Free(r); PyMem_Free(bb)
        raise MemoryError()
    try:
        for i in range(n):
            r[i] = a[i] % p
        for i in range(db + 1):
            bb[i] = b[i] % p
        for j in range(n - 1 - db, -1, -1):
            t = r[j + db]
            if t:
                t = (t * inv) % pp
                for i in range(db + 1):
                    r[j + i] = (r[j + i] - t * bb[i]) % pp
        return strip([r[i] for i in range(min(db, n))])
    finally:
        PyMem_Free(r); PyMem_Free(bb)
