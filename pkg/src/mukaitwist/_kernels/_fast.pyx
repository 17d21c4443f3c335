# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Fixed-width integer kernels with overflow guards.

Entries must fit in |x| <= 2**30 and results in |x| < 2**62; anything bigger
raises OverflowError and the dispatcher reruns the call on the exact
arbitrary-precision backend. Accumulation uses 128-bit intermediates, so the
guard is a range check, never silent wraparound.
"""
from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef long long ENTRY_BOUND = 1073741824           # 2**30
cdef long long RESULT_BOUND = 4611686018427387904  # 2**62


cdef long long* _load(object seq, Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*> malloc((n if n > 0 else 1) * sizeof(long long))
    cdef Py_ssize_t i
    cdef long long x
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            x = seq[i]
            if x > ENTRY_BOUND or x < -ENTRY_BOUND:
                raise OverflowError("entry exceeds fast-kernel bound")
            buf[i] = x
    except BaseException:
        free(buf)
        raise
    return buf


def matmul(a, b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef long long* ca = NULL
    cdef long long* cb = NULL
    cdef long long* co = NULL
    cdef Py_ssize_t i, j, t
    cdef int128 acc
    if k > 1048576:
        raise OverflowError("dimension exceeds fast-kernel bound")
    try:
        ca = _load(a, n * k)
        cb = _load(b, k * m)
        co = <long long*> malloc((n * m if n * m > 0 else 1) * sizeof(long long))
        if co == NULL:
            raise MemoryError()
        for i in range(n):
            for j in range(m):
                acc = 0
                for t in range(k):
                    acc += <int128> ca[i * k + t] * cb[t * m + j]
                if acc > RESULT_BOUND or acc < -RESULT_BOUND:
                    raise OverflowError("result exceeds fast-kernel bound")
                co[i * m + j] = <long long> acc
        return [co[i] for i in range(n * m)]
    finally:
        free(ca)
        free(cb)
        free(co)


def matvec(a, v, Py_ssize_t n, Py_ssize_t m):
    cdef long long* ca = NULL
    cdef long long* cv = NULL
    cdef Py_ssize_t i, j
    cdef int128 acc
    cdef list out
    if m > 1048576:
        raise OverflowError("dimension exceeds fast-kernel bound")
    try:
        ca = _load(a, n * m)
        cv = _load(v, m)
        out = []
        for i in range(n):
            acc = 0
            for j in range(m):
                acc += <int128> ca[i * m + j] * cv[j]
            if acc > RESULT_BOUND or acc < -RESULT_BOUND:
                raise OverflowError("result exceeds fast-kernel bound")
            out.append(<long long> acc)
        return out
    finally:
        free(ca)
        free(cv)


def bilinear(g, u, v, Py_ssize_t n):
    cdef long long* cg = NULL
    cdef long long* cu = NULL
    cdef long long* cv = NULL
    cdef Py_ssize_t i, j
    cdef int128 acc, total
    if n > 1048576:
        raise OverflowError("dimension exceeds fast-kernel bound")
    try:
        cg = _load(g, n * n)
        cu = _load(u, n)
        cv = _load(v, n)
        total = 0
        for i in range(n):
            if cu[i] == 0:
                continue
            acc = 0
            for j in range(n):
                acc += <int128> cg[i * n + j] * cv[j]
            total += <int128> cu[i] * acc
            if total > RESULT_BOUND or total < -RESULT_BOUND:
                raise OverflowError("result exceeds fast-kernel bound")
        return <long long> total
    finally:
        free(cg)
        free(cu)
        free(cv)


def quadform(g, v, Py_ssize_t n):
    return bilinear(g, v, v, n)


def norm_scan(g, Py_ssize_t n, long long target, long long bound):
    """All v in the box [-bound, bound]^n with v^T G v == target, in lex order."""
    cdef long long* cg = NULL
    cdef long long* cv = NULL
    cdef Py_ssize_t i, j
    cdef int128 q
    cdef bint more
    cdef list hits = []
    if n <= 0:
        return [()] if target == 0 else []
    if n > 64 or bound < 0 or bound > 32767:
        raise OverflowError("box exceeds fast-kernel bound")
    try:
        cg = _load(g, n * n)
        cv = <long long*> malloc(n * sizeof(long long))
        if cv == NULL:
            raise MemoryError()
        for i in range(n):
            cv[i] = -bound
        more = True
        while more:
            q = 0
            for i in range(n):
                if cv[i] != 0:
                    for j in range(n):
                        q += <int128> cg[i * n + j] * cv[i] * cv[j]
            if q == <int128> target:
                hits.append(tuple([cv[i] for i in range(n)]))
            # odometer step, lexicographic: increment from the rightmost slot
            more = False
            for i in range(n - 1, -1, -1):
                if cv[i] < bound:
                    cv[i] += 1
                    for j in range(i + 1, n):
                        cv[j] = -bound
                    more = True
                    break
        return hits
    finally:
        free(cg)
        free(cv)
