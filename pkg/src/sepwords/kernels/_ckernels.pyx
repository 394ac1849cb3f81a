# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_pykernels`` for the contracts."""

from libc.stdlib cimport malloc, free
from libc.math cimport fma, pow, fabs

BACKEND = "cython"


def border_array(const unsigned char[:] pat):
    cdef Py_ssize_t n = pat.shape[0]
    cdef Py_ssize_t i, k = 0
    cdef list border = [0] * n
    cdef Py_ssize_t *b
    if n == 0:
        return border
    b = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    try:
        b[0] = 0
        for i in range(1, n):
            while k and pat[k] != pat[i]:
                k = b[k - 1]
            if pat[k] == pat[i]:
                k += 1
            b[i] = k
        for i in range(n):
            border[i] = b[i]
    finally:
        free(b)
    return border


def find_occurrences(const unsigned char[:] text, const unsigned char[:] pat):
    cdef Py_ssize_t l = pat.shape[0]
    cdef Py_ssize_t n = text.shape[0]
    cdef Py_ssize_t i, j, k = 0
    cdef list out = []
    cdef Py_ssize_t *b
    if l == 0 or l > n:
        return out
    b = <Py_ssize_t *> malloc(l * sizeof(Py_ssize_t))
    try:
        b[0] = 0
        for i in range(1, l):
            while k and pat[k] != pat[i]:
                k = b[k - 1]
            if pat[k] == pat[i]:
                k += 1
            b[i] = k
        k = 0
        for j in range(n):
            while k and pat[k] != text[j]:
                k = b[k - 1]
            if pat[k] == text[j]:
                k += 1
            if k == l:
                out.append(j - l + 2)
                k = b[k - 1]
    finally:
        free(b)
    return out


def run_dfa(const int[:] flat, int start, const unsigned char[:] bits):
    cdef int state = start
    cdef Py_ssize_t j
    for j in range(bits.shape[0]):
        state = flat[2 * state + bits[j]]
    return state


cdef long *_as_longs(object seq, Py_ssize_t *size) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t j = 0
    cdef long *buf = <long *> malloc((n + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    for v in seq:
        buf[j] = v
        j += 1
    size[0] = n
    return buf


def residue_counts(object elements, long p):
    cdef Py_ssize_t n, j
    cdef long *buf = _as_longs(elements, &n)
    cdef long *counts = <long *> malloc(p * sizeof(long))
    try:
        for j in range(p):
            counts[j] = 0
        for j in range(n):
            counts[buf[j] % p] += 1
        return [counts[j] for j in range(p)]
    finally:
        free(buf)
        free(counts)


def first_residue_difference(object a_elems, object b_elems, long p):
    cdef Py_ssize_t na, nb, j
    cdef long *a = _as_longs(a_elems, &na)
    cdef long *b = _as_longs(b_elems, &nb)
    cdef long *diff = <long *> malloc(p * sizeof(long))
    cdef long result = -1
    try:
        for j in range(p):
            diff[j] = 0
        for j in range(na):
            diff[a[j] % p] += 1
        for j in range(nb):
            diff[b[j] % p] -= 1
        for j in range(p):
            if diff[j] != 0:
                result = j
                break
        return result
    finally:
        free(a)
        free(b)
        free(diff)


cdef struct _Search:
    const unsigned char *seq
    Py_ssize_t half
    Py_ssize_t total
    int s
    int *table
    int final_x


cdef bint _step(_Search *st, Py_ssize_t pos, int state, int used) nogil:
    cdef int slot, nxt, c, limit
    if pos == st.half:
        st.final_x = state
        state = 0
    if pos == st.total:
        return state != st.final_x
    slot = 2 * state + st.seq[pos]
    nxt = st.table[slot]
    if nxt >= 0:
        return _step(st, pos + 1, nxt, used)
    limit = used + 1
    if limit > st.s:
        limit = st.s
    for c in range(limit):
        st.table[slot] = c
        if _step(st, pos + 1, c, used + 1 if c == used else used):
            return True
    st.table[slot] = -1
    return False


def separating_dfa_search(const unsigned char[:] x, const unsigned char[:] y, int s):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t j
    cdef _Search st
    cdef bint found
    cdef unsigned char *seq = <unsigned char *> malloc(2 * n + 1)
    cdef int *table = <int *> malloc(2 * s * sizeof(int))
    try:
        for j in range(n):
            seq[j] = x[j]
            seq[n + j] = y[j]
        for j in range(2 * s):
            table[j] = -1
        st.seq = seq
        st.half = n
        st.total = 2 * n
        st.s = s
        st.table = table
        st.final_x = 0
        with nogil:
            found = _step(&st, 0, 0, 1)
        if not found:
            return None
        return [table[j] if table[j] >= 0 else 0 for j in range(2 * s)]
    finally:
        free(seq)
        free(table)


cdef double *_as_doubles(object seq, Py_ssize_t *size) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t j = 0
    cdef double *buf = <double *> malloc((n + 1) * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    for v in seq:
        buf[j] = v
        j += 1
    size[0] = n
    return buf


def sparse_abs_eval(object exponents, object coefficients, object xs):
    cdef Py_ssize_t ne, nc, nx, j, t
    cdef double *e = _as_doubles(exponents, &ne)
    cdef double *c = _as_doubles(coefficients, &nc)
    cdef double *xv = _as_doubles(xs, &nx)
    cdef double s, comp, term, tot, bb
    cdef list out = []
    try:
        if ne != nc:
            raise ValueError("exponents and coefficients differ in length")
        for j in range(nx):
            s = 0.0
            comp = 0.0
            for t in range(ne):
                term = c[t] * pow(xv[j], e[t])
                tot = s + term
                bb = tot - s
                comp += (s - (tot - bb)) + (term - bb)
                s = tot
            out.append(fabs(s + comp))
        return out
    finally:
        free(e)
        free(c)
        free(xv)


def horner_abs_eval(object coefficients, object xs):
    cdef Py_ssize_t n, nx, j, t
    cdef double *a = _as_doubles(coefficients, &n)
    cdef double *xv = _as_doubles(xs, &nx)
    cdef double x, s, c, p, pi, tot, bb, sigma
    cdef list out = []
    try:
        for j in range(nx):
            if n == 0:
                out.append(0.0)
                continue
            x = xv[j]
            s = a[n - 1]
            c = 0.0
            for t in range(n - 2, -1, -1):
                p = s * x
                pi = fma(s, x, -p)
                tot = p + a[t]
                bb = tot - p
                sigma = (p - (tot - bb)) + (a[t] - bb)
                s = tot
                c = c * x + (pi + sigma)
            out.append(fabs(s + c))
        return out
    finally:
        free(a)
        free(xv)
