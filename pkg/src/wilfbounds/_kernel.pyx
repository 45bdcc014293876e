# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled genus-tree walker; same contract as ``wilfbounds._walk.walk``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy
from cpython.bytes cimport PyBytes_FromStringAndSize


cdef object _gens(int* dec, int conductor, int mult):
    cdef int x
    cdef int top = conductor + mult
    if top < 2:
        top = 2
    out = []
    for x in range(mult, top):
        if dec[x] == 1:
            out.append(x)
    return tuple(out)


cdef object _members(int* dec, int n, char* buf):
    cdef int x
    for x in range(n):
        buf[x] = 1 if dec[x] else 0
    return PyBytes_FromStringAndSize(buf, n)


cdef int _descend(int* pool, int level, int size, int genus, int conductor, int mult,
                  int max_genus, object visit, char* buf) except -1:
    cdef int* dec = pool + level * size
    cdef int* child = pool + (level + 1) * size
    cdef int g, t, top
    visit(genus, conductor, _gens(dec, conductor, mult), _members(dec, conductor + mult, buf))
    if genus >= max_genus:
        return 0
    top = conductor + mult
    if top < 2:
        top = 2
    g = conductor if conductor > mult else mult
    while g < top:
        if dec[g] == 1:
            memcpy(child, dec, g * sizeof(int))
            for t in range(g, size):
                child[t] = dec[t] - (1 if dec[t - g] > 0 else 0)
            _descend(pool, level + 1, size, genus + 1, g + 1,
                     g + 1 if g == mult else mult, max_genus, visit, buf)
        g += 1
    return 0


def walk(int max_genus, visit, root=None):
    """Depth-first visit of every node of genus <= max_genus below ``root``."""
    cdef int size, genus, conductor, mult, depth, i
    if root is None:
        size = 3 * max_genus + 3
        table = [x // 2 + 1 for x in range(size)]
        genus, conductor, mult = 0, 0, 1
    else:
        table, genus, conductor, mult = root
        size = len(table)
    depth = max_genus - genus + 2
    if depth < 1:
        depth = 1
    cdef int* pool = <int*> malloc(depth * size * sizeof(int))
    cdef char* buf = <char*> malloc(size + 1)
    if pool == NULL or buf == NULL:
        free(pool)
        free(buf)
        raise MemoryError()
    try:
        for i in range(size):
            pool[i] = table[i]
        _descend(pool, 0, size, genus, conductor, mult, max_genus, visit, buf)
    finally:
        free(pool)
        free(buf)
