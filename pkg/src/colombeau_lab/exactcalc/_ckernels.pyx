# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels on GMP rationals.

Same contract as ``_pykernels``: tuples of ``gmpy2.mpq`` ordered low to high
degree in, trimmed tuples out. Inner loops run on ``mpq_t`` buffers so no
Python objects are created until the result is emitted.
"""
from cpython.mem cimport PyMem_Malloc, PyMem_Free
from gmpy2 cimport import_gmpy2, mpq, GMPy_MPQ_New, MPQ, mpq_t, mpq_set, mpq_srcptr, mpq_ptr

import gmpy2

cdef extern from "gmp.h":
    void mpq_init(mpq_ptr x)
    void mpq_clear(mpq_ptr x)
    void mpq_add(mpq_ptr s, mpq_srcptr a, mpq_srcptr b)
    void mpq_sub(mpq_ptr d, mpq_srcptr a, mpq_srcptr b)
    void mpq_mul(mpq_ptr p, mpq_srcptr a, mpq_srcptr b)
    void mpq_div(mpq_ptr q, mpq_srcptr a, mpq_srcptr b)
    void mpq_set_si(mpq_ptr x, long n, unsigned long d)
    int mpq_sgn(mpq_srcptr x)

import_gmpy2()

_MPQ = gmpy2.mpq


cdef struct Buf:
    Py_ssize_t n
    mpq_t *v


cdef int buf_alloc(Buf *b, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    b.n = n
    b.v = <mpq_t *> PyMem_Malloc((n if n > 0 else 1) * sizeof(mpq_t))
    if b.v == NULL:
        raise MemoryError()
    for i in range(n):
        mpq_init(b.v[i])
    return 0


cdef void buf_free(Buf *b):
    cdef Py_ssize_t i
    if b.v != NULL:
        for i in range(b.n):
            mpq_clear(b.v[i])
        PyMem_Free(b.v)
        b.v = NULL


cdef inline void set_from(mpq_ptr dst, object x) except *:
    cdef mpq q
    if type(x) is mpq:
        q = <mpq> x
    else:
        q = <mpq> _MPQ(x)
    mpq_set(dst, MPQ(q))


cdef list as_mpq(object seq):
    """Inputs as a list of mpq objects; their ``mpq_t`` is read in place."""
    return [x if type(x) is mpq else _MPQ(x) for x in seq]


cdef inline mpq_srcptr at(list xs, Py_ssize_t i):
    return MPQ(<mpq> xs[i])


cdef int buf_load(Buf *b, object seq) except -1:
    cdef Py_ssize_t i
    cdef list xs = as_mpq(seq)
    buf_alloc(b, len(xs))
    for i in range(b.n):
        mpq_set(b.v[i], at(xs, i))
    return 0


cdef tuple buf_emit(Buf *b):
    """Trimmed tuple of fresh mpq objects."""
    cdef Py_ssize_t n = b.n, i
    cdef mpq q
    while n > 0 and mpq_sgn(b.v[n - 1]) == 0:
        n -= 1
    out = []
    for i in range(n):
        q = GMPy_MPQ_New(NULL)
        mpq_set(MPQ(q), b.v[i])
        out.append(q)
    return tuple(out)


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def add(a, b):
    cdef Buf z
    cdef list x, y
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    x, y = as_mpq(a), as_mpq(b)
    z.v = NULL
    try:
        buf_alloc(&z, len(x))
        for i in range(len(y)):
            mpq_add(z.v[i], at(x, i), at(y, i))
        for i in range(len(y), len(x)):
            mpq_set(z.v[i], at(x, i))
        return buf_emit(&z)
    finally:
        buf_free(&z)


def sub(a, b):
    cdef Buf z
    cdef list x = as_mpq(a), y = as_mpq(b)
    cdef Py_ssize_t i, nx = len(x), ny = len(y)
    z.v = NULL
    try:
        buf_alloc(&z, nx if nx > ny else ny)
        for i in range(z.n):
            if i < nx and i < ny:
                mpq_sub(z.v[i], at(x, i), at(y, i))
            elif i < nx:
                mpq_set(z.v[i], at(x, i))
            else:
                mpq_sub(z.v[i], z.v[i], at(y, i))
        return buf_emit(&z)
    finally:
        buf_free(&z)


def scale(a, s):
    cdef Buf z
    cdef list x
    cdef mpq c
    cdef Py_ssize_t i
    if not s:
        return ()
    x = as_mpq(a)
    c = s if type(s) is mpq else _MPQ(s)
    z.v = NULL
    try:
        buf_alloc(&z, len(x))
        for i in range(z.n):
            mpq_mul(z.v[i], at(x, i), MPQ(c))
        return buf_emit(&z)
    finally:
        buf_free(&z)


def mul(a, b):
    cdef Buf z
    cdef list x, y
    cdef mpq_t t
    cdef Py_ssize_t i, j, nx, ny
    if not a or not b:
        return ()
    x, y = as_mpq(a), as_mpq(b)
    nx, ny = len(x), len(y)
    z.v = NULL
    mpq_init(t)
    try:
        buf_alloc(&z, nx + ny - 1)
        for i in range(nx):
            if mpq_sgn(at(x, i)) == 0:
                continue
            for j in range(ny):
                mpq_mul(t, at(x, i), at(y, j))
                mpq_add(z.v[i + j], z.v[i + j], t)
        return buf_emit(&z)
    finally:
        mpq_clear(t)
        buf_free(&z)


def deriv(a):
    cdef Buf z
    cdef list x
    cdef mpq_t k
    cdef Py_ssize_t i
    if len(a) < 2:
        return ()
    x = as_mpq(a)
    z.v = NULL
    mpq_init(k)
    try:
        buf_alloc(&z, len(x) - 1)
        for i in range(1, len(x)):
            mpq_set_si(k, i, 1)
            mpq_mul(z.v[i - 1], at(x, i), k)
        return buf_emit(&z)
    finally:
        mpq_clear(k)
        buf_free(&z)


def antideriv(a):
    cdef Buf z
    cdef list x
    cdef mpq_t k
    cdef Py_ssize_t i
    if not a:
        return ()
    x = as_mpq(a)
    z.v = NULL
    mpq_init(k)
    try:
        buf_alloc(&z, len(x) + 1)
        for i in range(len(x)):
            mpq_set_si(k, 1, i + 1)
            mpq_mul(z.v[i + 1], at(x, i), k)
        return buf_emit(&z)
    finally:
        mpq_clear(k)
        buf_free(&z)


def horner(a, x):
    cdef list p = as_mpq(a)
    cdef mpq c = x if type(x) is mpq else _MPQ(x)
    cdef mpq out = GMPy_MPQ_New(NULL)
    cdef Py_ssize_t i
    mpq_set_si(MPQ(out), 0, 1)
    for i in range(len(p) - 1, -1, -1):
        mpq_mul(MPQ(out), MPQ(out), MPQ(c))
        mpq_add(MPQ(out), MPQ(out), at(p, i))
    return out


def dilate(a, c):
    """Coefficients of ``a(c * x)``."""
    cdef Buf z
    cdef list x = as_mpq(a)
    cdef mpq s = c if type(c) is mpq else _MPQ(c)
    cdef mpq_t pw
    cdef Py_ssize_t i
    z.v = NULL
    mpq_init(pw)
    try:
        mpq_set_si(pw, 1, 1)
        buf_alloc(&z, len(x))
        for i in range(z.n):
            mpq_mul(z.v[i], at(x, i), pw)
            mpq_mul(pw, pw, MPQ(s))
        return buf_emit(&z)
    finally:
        mpq_clear(pw)
        buf_free(&z)


def taylor_shift(a, c):
    """Coefficients of ``a(x + c)``."""
    cdef Buf x
    cdef mpq_t s, t
    cdef Py_ssize_t i, j
    if not a or not c:
        return tuple(a)
    x.v = NULL
    mpq_init(s)
    mpq_init(t)
    try:
        set_from(s, c)
        buf_load(&x, a)
        for i in range(x.n - 1):
            for j in range(x.n - 2, i - 1, -1):
                mpq_mul(t, s, x.v[j + 1])
                mpq_add(x.v[j], x.v[j], t)
        return buf_emit(&x)
    finally:
        mpq_clear(s)
        mpq_clear(t)
        buf_free(&x)
