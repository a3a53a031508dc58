# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled residue-ring kernels.

Coefficients are reduced residues in ``[0, u)`` with ``2 <= u <= 2**31``, so a
single product fits in 62 bits and accumulators only need an occasional
reduction to stay below 2**64.
"""
from libc.stdlib cimport free, malloc
from libc.stdint cimport uint64_t

cdef uint64_t ACC_LIMIT = (<uint64_t> 1) << 63

MAX_MODULUS = 2 ** 31


cdef uint64_t* _load(seq, Py_ssize_t n) except NULL:
    cdef uint64_t* buf = <uint64_t*> malloc((n if n > 0 else 1) * sizeof(uint64_t))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    return buf


def mul_mod(a, b, Py_ssize_t order, uint64_t u):
    """Truncated product of two residue sequences modulo ``u``."""
    cdef Py_ssize_t la = min(len(a), order + 1)
    cdef Py_ssize_t lb = min(len(b), order + 1)
    cdef Py_ssize_t i, j, jmax
    cdef uint64_t x
    cdef uint64_t* pa = _load(a, la)
    cdef uint64_t* pb = NULL
    cdef uint64_t* acc = NULL
    try:
        pb = _load(b, lb)
        acc = <uint64_t*> malloc((order + 1) * sizeof(uint64_t))
        if acc == NULL:
            raise MemoryError()
        for i in range(order + 1):
            acc[i] = 0
        with nogil:
            for i in range(la):
                x = pa[i]
                if x == 0:
                    continue
                jmax = order - i + 1
                if jmax > lb:
                    jmax = lb
                for j in range(jmax):
                    acc[i + j] += x * pb[j]
                    if acc[i + j] >= ACC_LIMIT:
                        acc[i + j] %= u
        return [acc[i] % u for i in range(order + 1)]
    finally:
        free(pa)
        free(pb)
        free(acc)


def div_mod(a, b, Py_ssize_t order, uint64_t u, uint64_t b0_inv):
    """Truncated quotient ``a / b`` modulo ``u``.

    ``b0_inv`` is the inverse of ``b[0]`` modulo ``u``. Only nonzero
    coefficients of ``b`` enter the inner loop, so dividing by a sparse series
    (an Euler factor) costs O(order * nnz(b)).
    """
    cdef Py_ssize_t la = min(len(a), order + 1)
    cdef Py_ssize_t lb = min(len(b), order + 1)
    cdef Py_ssize_t n, k, nnz = 0, j
    cdef uint64_t s
    cdef uint64_t* pc = NULL
    cdef Py_ssize_t* idx = NULL
    cdef uint64_t* val = NULL
    cdef uint64_t* pa = _load(a, la)
    try:
        pc = <uint64_t*> malloc((order + 1) * sizeof(uint64_t))
        idx = <Py_ssize_t*> malloc((lb if lb > 0 else 1) * sizeof(Py_ssize_t))
        val = <uint64_t*> malloc((lb if lb > 0 else 1) * sizeof(uint64_t))
        if pc == NULL or idx == NULL or val == NULL:
            raise MemoryError()
        for j in range(1, lb):
            if b[j] != 0:
                idx[nnz] = j
                val[nnz] = b[j]
                nnz += 1
        with nogil:
            for n in range(order + 1):
                s = 0
                for k in range(nnz):
                    j = idx[k]
                    if j > n:
                        break
                    s += val[k] * pc[n - j]
                    if s >= ACC_LIMIT:
                        s %= u
                s %= u
                if n < la:
                    pc[n] = ((pa[n] + u - s) % u) * b0_inv % u
                else:
                    pc[n] = ((u - s) % u) * b0_inv % u
        return [pc[n] for n in range(order + 1)]
    finally:
        free(pa)
        free(pc)
        free(idx)
        free(val)
