# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""C twin of the pure Python forcing kernels: same functions, same argument
conventions, bit-identical results.  See _pykernel for the semantics."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport free, malloc, realloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "c"


cdef inline int _pop(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t _full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t>0 - 1
    return ((<uint64_t>1) << n) - 1


cdef int _load_adj(object adj, int n, uint64_t *out) except -1:
    cdef int i
    if n < 0 or n > 64:
        raise ValueError(f"vertex count {n} outside [0, 64]")
    for i in range(n):
        out[i] = adj[i]
    return 0


cdef uint64_t _round_targets(int n, uint64_t *adj, uint64_t blue, uint64_t leaks,
                             bint standard, uint64_t white) nogil:
    cdef uint64_t newly = 0
    cdef uint64_t sources = blue & ~leaks
    cdef uint64_t s, low, nb, rest, comp, frontier, grow, f, boundary
    if standard:
        s = sources
        while s:
            low = s & (0 - s)
            s ^= low
            nb = adj[_ctz(low)] & white
            if nb != 0 and (nb & (nb - 1)) == 0:
                newly |= nb
    else:
        rest = white
        while rest:
            comp = 0
            boundary = 0
            frontier = rest & (0 - rest)
            while frontier:
                comp |= frontier
                grow = 0
                f = frontier
                while f:
                    grow |= adj[_ctz(f)]
                    f &= f - 1
                boundary |= grow
                frontier = grow & white & ~comp
            s = sources & boundary
            while s:
                low = s & (0 - s)
                s ^= low
                nb = adj[_ctz(low)] & comp
                if nb != 0 and (nb & (nb - 1)) == 0:
                    newly |= nb
            rest &= ~comp
    return newly


cdef uint64_t _closure(int n, uint64_t *adj, uint64_t blue, uint64_t leaks,
                       bint standard, uint64_t barred) nogil:
    cdef uint64_t full = _full_mask(n)
    cdef uint64_t white, newly
    while True:
        white = full & ~blue
        if white == 0:
            return blue
        newly = _round_targets(n, adj, blue, leaks, standard, white) & ~barred
        if newly == 0:
            return blue
        blue |= newly


def closure_mask(int n, object adj, unsigned long long blue,
                 unsigned long long leaks, bint standard,
                 unsigned long long barred=0):
    cdef uint64_t a[64]
    _load_adj(adj, n, a)
    return _closure(n, a, blue, leaks, standard, barred)


cdef inline uint64_t _rng_next(uint64_t *state) nogil:
    cdef uint64_t x = state[0]
    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    state[0] = x
    return x * <uint64_t>0x2545F4914F6CDD1D


def closure_async_mask(int n, object adj, unsigned long long blue,
                       unsigned long long leaks, bint standard,
                       unsigned long long seed):
    cdef uint64_t a[64]
    _load_adj(adj, n, a)
    cdef uint64_t full = _full_mask(n)
    cdef uint64_t state = seed ^ <uint64_t>0x9E3779B97F4A7C15
    if state == 0:
        state = 1
    cdef uint64_t white, targets, t
    cdef int i, chosen
    while True:
        white = full & ~blue
        if white == 0:
            return blue
        targets = _round_targets(n, a, blue, leaks, standard, white)
        if targets == 0:
            return blue
        chosen = <int>(_rng_next(&state) % <uint64_t>_pop(targets))
        t = targets
        for i in range(chosen):
            t &= t - 1
        blue |= t & (0 - t)


def first_failing_leaks(int n, object adj, unsigned long long blue, int ell,
                        bint standard):
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    if ell > n:
        ell = n
    cdef uint64_t a[64]
    _load_adj(adj, n, a)
    cdef uint64_t full = _full_mask(n)
    cdef int64_t closures = 1
    cdef int c[64]
    cdef int i, j
    cdef uint64_t lmask
    if _closure(n, a, blue, 0, standard, 0) != full:
        return _full_mask(ell), closures
    if ell == 0:
        return -1, closures
    for i in range(ell):
        c[i] = i
    while True:
        lmask = 0
        for i in range(ell):
            lmask |= (<uint64_t>1) << c[i]
        closures += 1
        if _closure(n, a, blue, lmask, standard, 0) != full:
            return lmask, closures
        i = ell - 1
        while i >= 0 and c[i] == n - ell + i:
            i -= 1
        if i < 0:
            return -1, closures
        c[i] += 1
        for j in range(i + 1, ell):
            c[j] = c[j - 1] + 1


def search_min_superset(int n, object adj, unsigned long long core, int k,
                        int ell, bint standard, first_free=None,
                        long long max_candidates=-1):
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    if ell > n:
        ell = n
    cdef uint64_t a[64]
    _load_adj(adj, n, a)
    cdef uint64_t full = _full_mask(n)
    cdef int free_v[64]
    cdef int idx[64]
    cdef int c[64]
    cdef int m = 0
    cdef int i, j2, v
    for i in range(n):
        if not (core >> i) & 1:
            free_v[m] = i
            m += 1
    cdef int j = k - _pop(core)
    if j < 0 or j > m:
        return -1, 0, 0
    if first_free is None:
        for i in range(j):
            idx[i] = i
    else:
        for i, v in enumerate(first_free):
            for j2 in range(m):
                if free_v[j2] == v:
                    idx[i] = j2
                    break
            else:
                raise ValueError(f"vertex {v} is not outside the core")
    cdef int64_t candidates = 0
    cdef int64_t closures = 0
    cdef uint64_t cand, lmask
    cdef bint ok
    while True:
        cand = core
        for i in range(j):
            cand |= (<uint64_t>1) << free_v[idx[i]]
        candidates += 1
        closures += 1
        if _closure(n, a, cand, 0, standard, 0) == full:
            ok = True
            if ell > 0:
                for i in range(ell):
                    c[i] = i
                while True:
                    lmask = 0
                    for i in range(ell):
                        lmask |= (<uint64_t>1) << c[i]
                    closures += 1
                    if _closure(n, a, cand, lmask, standard, 0) != full:
                        ok = False
                        break
                    i = ell - 1
                    while i >= 0 and c[i] == n - ell + i:
                        i -= 1
                    if i < 0:
                        break
                    c[i] += 1
                    for j2 in range(i + 1, ell):
                        c[j2] = c[j2 - 1] + 1
            if ok:
                return cand, candidates, closures
        if candidates == max_candidates:
            return -1, candidates, closures
        i = j - 1
        while i >= 0 and idx[i] == m - j + i:
            i -= 1
        if i < 0:
            return -1, candidates, closures
        idx[i] += 1
        for j2 in range(i + 1, j):
            idx[j2] = idx[j2 - 1] + 1


cdef bint _is_fort(int n, uint64_t *adj, uint64_t fort, int ell) nogil:
    cdef uint64_t rest = fort
    cdef uint64_t comp, boundary, frontier, grow, f, b, nb
    cdef int cnt
    while rest:
        comp = 0
        boundary = 0
        frontier = rest & (0 - rest)
        while frontier:
            comp |= frontier
            grow = 0
            f = frontier
            while f:
                grow |= adj[_ctz(f)]
                f &= f - 1
            boundary |= grow
            frontier = grow & fort & ~comp
        boundary &= ~fort
        cnt = 0
        b = boundary
        while b:
            nb = adj[_ctz(b)] & comp
            b &= b - 1
            if nb != 0 and (nb & (nb - 1)) == 0:
                cnt += 1
                if cnt > ell:
                    return False
        rest &= ~comp
    return True


def is_fort_mask(int n, object adj, unsigned long long fort, int ell):
    cdef uint64_t a[64]
    _load_adj(adj, n, a)
    return bool(_is_fort(n, a, fort, ell))


def minimal_fort_masks(int n, object adj, int ell):
    cdef uint64_t a[64]
    _load_adj(adj, n, a)
    cdef int cap = 64
    cdef int count = 0
    cdef uint64_t *found = <uint64_t *>malloc(cap * sizeof(uint64_t))
    if found == NULL:
        raise MemoryError()
    cdef uint64_t *grown
    cdef int c[64]
    cdef int k, i, j, t
    cdef uint64_t mask
    cdef bint covered
    try:
        for k in range(1, n + 1):
            for i in range(k):
                c[i] = i
            while True:
                mask = 0
                for i in range(k):
                    mask |= (<uint64_t>1) << c[i]
                covered = False
                for t in range(count):
                    if (found[t] & mask) == found[t]:
                        covered = True
                        break
                if not covered and _is_fort(n, a, mask, ell):
                    if count == cap:
                        cap *= 2
                        grown = <uint64_t *>realloc(found, cap * sizeof(uint64_t))
                        if grown == NULL:
                            raise MemoryError()
                        found = grown
                    found[count] = mask
                    count += 1
                i = k - 1
                while i >= 0 and c[i] == n - k + i:
                    i -= 1
                if i < 0:
                    break
                c[i] += 1
                for j in range(i + 1, k):
                    c[j] = c[j - 1] + 1
        return [found[t] for t in range(count)]
    finally:
        free(found)
