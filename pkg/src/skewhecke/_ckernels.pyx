# cython: language_level=3
"""Compiled twins of the kernels in ``_pykernels``; same signatures, same output order."""

from libc.stdlib cimport malloc, free


cdef int* _flatten(list groups, int npos, int** offsets_out) except NULL:
    cdef int total = 0
    cdef int p, k
    for p in range(npos):
        total += len(groups[p])
    cdef int* offsets = <int*> malloc((npos + 1) * sizeof(int))
    cdef int* flat = <int*> malloc((total + 1) * sizeof(int))
    if offsets == NULL or flat == NULL:
        free(offsets)
        free(flat)
        raise MemoryError()
    k = 0
    for p in range(npos):
        offsets[p] = k
        for q in groups[p]:
            flat[k] = q
            k += 1
    offsets[npos] = k
    offsets_out[0] = offsets
    return flat


def inversions(word):
    cdef list w = list(word)
    cdef Py_ssize_t n = len(w)
    cdef long* buf = <long*> malloc((n + 1) * sizeof(long))
    cdef Py_ssize_t p, q
    cdef long count = 0
    if buf == NULL:
        raise MemoryError()
    try:
        for p in range(n):
            buf[p] = w[p]
        for p in range(n):
            for q in range(p + 1, n):
                if buf[p] > buf[q]:
                    count += 1
    finally:
        free(buf)
    return count


cdef struct _Search:
    int npos
    int max_entry
    int* s_off
    int* s_flat
    int* w_off
    int* w_flat
    int* values
    int* used
    int* content


cdef inline int _low(_Search* st, int p):
    cdef int low = 1
    cdef int k
    for k in range(st.s_off[p], st.s_off[p + 1]):
        if st.values[st.s_flat[k]] + 1 > low:
            low = st.values[st.s_flat[k]] + 1
    if st.w_off != NULL:
        for k in range(st.w_off[p], st.w_off[p + 1]):
            if st.values[st.w_flat[k]] > low:
                low = st.values[st.w_flat[k]]
    return low


cdef tuple _snapshot(int* arr, int n):
    cdef int i
    return tuple([arr[i] for i in range(n)])


cdef int _standard(_Search* st, int p, list out) except -1:
    cdef int v
    if p == st.npos:
        out.append(_snapshot(st.values, st.npos))
        return 0
    for v in range(_low(st, p), st.npos + 1):
        if not st.used[v]:
            st.used[v] = 1
            st.values[p] = v
            _standard(st, p + 1, out)
            st.used[v] = 0
    return 0


cdef int _semistandard(_Search* st, int p, list out) except -1:
    cdef int v
    if p == st.npos:
        out.append(_snapshot(st.values, st.npos))
        return 0
    for v in range(_low(st, p), st.max_entry + 1):
        st.values[p] = v
        _semistandard(st, p + 1, out)
    return 0


cdef int _contents(_Search* st, int p, dict out) except -1:
    cdef int v
    if p == st.npos:
        key = _snapshot(st.content, st.max_entry)
        out[key] = out.get(key, 0) + 1
        return 0
    for v in range(_low(st, p), st.max_entry + 1):
        st.values[p] = v
        st.content[v - 1] += 1
        _contents(st, p + 1, out)
        st.content[v - 1] -= 1
    return 0


cdef _Search _prepare(int npos, list strict, list weak, int max_entry) except *:
    cdef _Search st
    st.npos = npos
    st.max_entry = max_entry
    st.s_off = NULL
    st.w_off = NULL
    st.w_flat = NULL
    st.s_flat = _flatten(strict, npos, &st.s_off)
    if weak is not None:
        st.w_flat = _flatten(weak, npos, &st.w_off)
    cdef int width = npos if npos > max_entry else max_entry
    st.values = <int*> malloc((width + 2) * sizeof(int))
    st.used = <int*> malloc((width + 2) * sizeof(int))
    st.content = <int*> malloc((width + 2) * sizeof(int))
    cdef int i
    for i in range(width + 2):
        st.values[i] = 0
        st.used[i] = 0
        st.content[i] = 0
    return st


cdef void _release(_Search* st):
    free(st.s_off)
    free(st.s_flat)
    free(st.w_off)
    free(st.w_flat)
    free(st.values)
    free(st.used)
    free(st.content)


def standard_fillings(int npos, list strict):
    cdef _Search st = _prepare(npos, strict, None, npos)
    cdef list out = []
    try:
        _standard(&st, 0, out)
    finally:
        _release(&st)
    return out


def semistandard_fillings(int npos, list strict, list weak, int max_entry):
    cdef _Search st = _prepare(npos, strict, weak, max_entry)
    cdef list out = []
    try:
        _semistandard(&st, 0, out)
    finally:
        _release(&st)
    return out


def content_counts(int npos, list strict, list weak, int max_entry):
    cdef _Search st = _prepare(npos, strict, weak, max_entry)
    cdef dict out = {}
    try:
        _contents(&st, 0, out)
    finally:
        _release(&st)
    return out
