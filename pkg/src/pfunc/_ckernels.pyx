# distutils: language = c++
"""Compiled hot kernels (int64 fast path).

Inputs are converted to ``long long`` and every product or sum is overflow
checked; any overflow hands the call to the pure-Python kernel, which works
on unbounded ints.  Results are identical to ``pfunc._pykernels``.
"""

from libcpp.algorithm cimport sort
from libcpp.pair cimport pair
from libcpp.vector cimport vector

from pfunc import _pykernels as _py

NOT_P_FUNCTION = _py.NOT_P_FUNCTION
EXACT = _py.EXACT
CONSERVATIVE = _py.CONSERVATIVE

ctypedef long long i64
ctypedef pair[i64, Py_ssize_t] keyed


cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow"(i64 a, i64 b, i64 *res) nogil
    bint add_overflow "__builtin_add_overflow"(i64 a, i64 b, i64 *res) nogil


class _Overflow(Exception):
    pass


cdef vector[keyed] _sorted_keys(vals) except *:
    cdef vector[keyed] keys
    cdef Py_ssize_t i, n = len(vals)
    keys.reserve(n)
    try:
        for i in range(n):
            keys.push_back(keyed(<i64>vals[i], i))
    except OverflowError:
        raise _Overflow()
    sort(keys.begin(), keys.end())
    return keys


cdef vector[i64] _as_i64(seq) except *:
    cdef vector[i64] out
    out.reserve(len(seq))
    try:
        for x in seq:
            out.push_back(<i64>x)
    except OverflowError:
        raise _Overflow()
    return out


def level_groups(vals):
    cdef vector[keyed] keys
    cdef Py_ssize_t k
    try:
        keys = _sorted_keys(vals)
    except _Overflow:
        return _py.level_groups(vals)
    groups = []
    for k in range(<Py_ssize_t>keys.size()):
        if k > 0 and keys[k].first == keys[k - 1].first:
            groups[-1].append(keys[k].second)
        else:
            groups.append([keys[k].second])
    return groups


cdef bint _cumulative(vals, masses, vector[i64] &out) except *:
    """Fill ``out`` with cumulative masses; False on overflow."""
    cdef vector[keyed] keys = _sorted_keys(vals)
    cdef vector[i64] m = _as_i64(masses)
    cdef Py_ssize_t n = keys.size(), start = 0, k, j
    cdef i64 total = 0
    out.assign(n, 0)
    while start < n:
        k = start
        while k < n and keys[k].first == keys[start].first:
            if add_overflow(total, m[keys[k].second], &total):
                return False
            k += 1
        for j in range(start, k):
            out[keys[j].second] = total
        start = k
    return True


def cumulative_masses(vals, masses):
    cdef vector[i64] out
    try:
        if not _cumulative(vals, masses, out):
            raise _Overflow()
    except _Overflow:
        return _py.cumulative_masses(vals, masses)
    return [x for x in out]


def is_canonic(vals, vden, masses, mden):
    cdef vector[i64] cum
    cdef vector[i64] v
    cdef i64 vd, md, lhs, rhs
    cdef Py_ssize_t i
    try:
        vd = vden
        md = mden
        v = _as_i64(vals)
        if not _cumulative(vals, masses, cum):
            raise _Overflow()
        for i in range(<Py_ssize_t>v.size()):
            if mul_overflow(v[i], md, &lhs) or mul_overflow(cum[i], vd, &rhs):
                raise _Overflow()
            if lhs != rhs:
                return False
        return True
    except (_Overflow, OverflowError):
        return _py.is_canonic(vals, vden, masses, mden)


def classify(vals, vden, masses, mden):
    cdef vector[keyed] keys
    cdef vector[i64] m
    cdef i64 vd, md, total = 0, v, lhs, rhs, wv = 0, wt = 0
    cdef bint zero_checked = False, have_witness = False
    cdef Py_ssize_t n, start = 0, k
    try:
        vd = vden
        md = mden
        keys = _sorted_keys(vals)
        m = _as_i64(masses)
        n = keys.size()
        while start < n:
            v = keys[start].first
            if v > 0 and not zero_checked:
                zero_checked = True
                if total > 0:
                    return NOT_P_FUNCTION, 0, total
            k = start
            while k < n and keys[k].first == v:
                if add_overflow(total, m[keys[k].second], &total):
                    raise _Overflow()
                k += 1
            start = k
            if v <= 0:
                continue
            if mul_overflow(total, vd, &lhs) or mul_overflow(v, md, &rhs):
                raise _Overflow()
            if lhs > rhs:
                return NOT_P_FUNCTION, v, total
            if lhs < rhs and not have_witness:
                have_witness = True
                wv = v
                wt = total
        if not zero_checked and total > 0:
            return NOT_P_FUNCTION, 0, total
        if not have_witness:
            return EXACT, 0, 0
        return CONSERVATIVE, wv, wt
    except (_Overflow, OverflowError):
        return _py.classify(vals, vden, masses, mden)


def tail_mass(vals, masses, threshold):
    cdef vector[i64] v, m
    cdef i64 t, total = 0
    cdef Py_ssize_t i
    try:
        t = threshold
        v = _as_i64(vals)
        m = _as_i64(masses)
        for i in range(<Py_ssize_t>v.size()):
            if v[i] <= t and add_overflow(total, m[i], &total):
                raise _Overflow()
        return total
    except (_Overflow, OverflowError):
        return _py.tail_mass(vals, masses, threshold)


def scaled_min(vectors, factor):
    cdef vector[i64] best, row
    cdef i64 c, r
    cdef Py_ssize_t i
    try:
        c = factor
        best = _as_i64(vectors[0])
        for vec in vectors[1:]:
            row = _as_i64(vec)
            for i in range(<Py_ssize_t>best.size()):
                if row[i] < best[i]:
                    best[i] = row[i]
        out = []
        for i in range(<Py_ssize_t>best.size()):
            if mul_overflow(best[i], c, &r):
                raise _Overflow()
            out.append(r)
        return out
    except (_Overflow, OverflowError):
        return _py.scaled_min(vectors, factor)
