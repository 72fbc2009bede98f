# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; same contracts as ``_pykernels``.

Inputs are 64-bit; ``kernels.py`` only dispatches here when every value is
small enough that no intermediate sum can overflow.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64* _copy(seq, Py_ssize_t size) except NULL:
    cdef i64* buf = <i64*> malloc(max(size, 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    for k in range(size):
        buf[k] = seq[k]
    return buf


cdef inline Py_ssize_t _bitpos(Py_ssize_t low):
    cdef Py_ssize_t i = 0
    while (low >> i) != 1:
        i += 1
    return i


def local_violation(vals, int n):
    cdef Py_ssize_t size = 1 << n
    cdef i64* f = _copy(vals, size)
    cdef Py_ssize_t a, bi, bj
    cdef int i, j
    cdef i64 fa, fai
    try:
        for a in range(size):
            fa = f[a]
            for i in range(n):
                bi = 1 << i
                if a & bi:
                    continue
                fai = f[a | bi]
                for j in range(i + 1, n):
                    bj = 1 << j
                    if a & bj:
                        continue
                    if fai + f[a | bj] < f[a | bi | bj] + fa:
                        return (a, i, j)
        return None
    finally:
        free(f)


def pairs_violation(vals, int n):
    cdef Py_ssize_t size = 1 << n
    cdef i64* f = _copy(vals, size)
    cdef Py_ssize_t a, b
    cdef i64 fa
    try:
        for a in range(size):
            fa = f[a]
            for b in range(a + 1, size):
                if fa + f[b] < f[a | b] + f[a & b]:
                    return (a, b)
        return None
    finally:
        free(f)


def bisub_violation(vals, int n):
    cdef Py_ssize_t nmask = 1 << n
    cdef Py_ssize_t size = 1
    cdef int i
    for i in range(n):
        size *= 3
    cdef i64* h = _copy(vals, size)
    cdef i64* tern = <i64*> malloc(nmask * sizeof(i64))
    cdef i64* pos = <i64*> malloc(size * sizeof(i64))
    cdef i64* neg = <i64*> malloc(size * sizeof(i64))
    cdef Py_ssize_t m, low, idx, r, u, v, d
    cdef i64 p, q, s1, t1, s2, t2, s, t, hu, pw
    try:
        if tern == NULL or pos == NULL or neg == NULL:
            raise MemoryError()
        tern[0] = 0
        for m in range(1, nmask):
            low = m & -m
            pw = 1
            r = low
            while r > 1:
                pw *= 3
                r >>= 1
            tern[m] = tern[m & (m - 1)] + pw
        for idx in range(size):
            r = idx
            p = 0
            q = 0
            for i in range(n):
                d = r % 3
                r = r // 3
                if d == 1:
                    p |= (<i64> 1) << i
                elif d == 2:
                    q |= (<i64> 1) << i
            pos[idx] = p
            neg[idx] = q
        for u in range(size):
            s1 = pos[u]
            t1 = neg[u]
            hu = h[u]
            for v in range(u + 1, size):
                s2 = pos[v]
                t2 = neg[v]
                s = s1 | s2
                t = t1 | t2
                if hu + h[v] < h[tern[s & ~t] + 2 * tern[t & ~s]] + h[tern[s1 & s2] + 2 * tern[t1 & t2]]:
                    return (u, v)
        return None
    finally:
        free(h)
        free(tern)
        free(pos)
        free(neg)


def reduction(vals, v, int n, bint minimize):
    cdef Py_ssize_t size = 1 << n
    cdef i64* out = _copy(vals, size)
    cdef i64* w = _copy(v, n)
    cdef Py_ssize_t a, m, low
    cdef int i
    cdef i64 best, cand
    try:
        for a in range(1, size):
            best = out[a]
            m = a
            while m:
                low = m & -m
                i = 0
                while (low >> i) != 1:
                    i += 1
                cand = out[a ^ low] + w[i]
                if minimize:
                    if cand < best:
                        best = cand
                elif cand > best:
                    best = cand
                m ^= low
            out[a] = best
        return [out[a] for a in range(size)]
    finally:
        free(out)
        free(w)


def minimal_minimizer(vals, x, int n):
    cdef Py_ssize_t size = 1 << n
    cdef i64* f = _copy(vals, size)
    cdef i64* w = _copy(x, n)
    cdef i64* xs = <i64*> malloc(size * sizeof(i64))
    cdef Py_ssize_t a, low, meet
    cdef int i
    cdef i64 best, g
    try:
        if xs == NULL:
            raise MemoryError()
        xs[0] = 0
        best = f[0]
        for a in range(1, size):
            low = a & -a
            i = 0
            while (low >> i) != 1:
                i += 1
            xs[a] = xs[a ^ low] + w[i]
            g = f[a] - xs[a]
            if g < best:
                best = g
        meet = size - 1
        for a in range(size):
            if f[a] - xs[a] == best:
                meet &= a
        return meet, best
    finally:
        free(f)
        free(w)
        free(xs)


cdef struct _Cons:
    i64 pos
    i64 neg
    i64 rhs
    int sign


cdef class _Lattice:
    cdef int n
    cdef i64* lo
    cdef i64* hi
    cdef i64* x
    cdef _Cons* cons
    cdef int* start
    cdef list out

    def __cinit__(self, int n, lo, hi, cons_list):
        cdef int k, c, total = len(cons_list)
        self.n = n
        self.lo = _copy(lo, n)
        self.hi = _copy(hi, n)
        self.x = <i64*> malloc(max(n, 1) * sizeof(i64))
        self.cons = <_Cons*> malloc(max(total, 1) * sizeof(_Cons))
        self.start = <int*> malloc((n + 1) * sizeof(int))
        if self.x == NULL or self.cons == NULL or self.start == NULL:
            raise MemoryError()
        self.out = []
        # cons_list is sorted by level; start[k] marks the first entry of level k
        c = 0
        for k in range(n + 1):
            self.start[k] = 0
        for k in range(total):
            lvl, p, m, r, sg = cons_list[k]
            self.cons[k].pos = p
            self.cons[k].neg = m
            self.cons[k].rhs = r
            self.cons[k].sign = sg
        for k in range(n):
            while c < total and cons_list[c][0] < k:
                c += 1
            self.start[k] = c
        self.start[n] = total

    def __dealloc__(self):
        free(self.lo)
        free(self.hi)
        free(self.x)
        free(self.cons)
        free(self.start)

    cdef int rec(self, int k) except -1:
        cdef i64 low = self.lo[k]
        cdef i64 high = self.hi[k]
        cdef i64 s, bound, val
        cdef int c, i
        cdef _Cons* con
        for c in range(self.start[k], self.start[k + 1]):
            con = &self.cons[c]
            s = 0
            for i in range(k):
                if (con.pos >> i) & 1:
                    s += self.x[i]
                elif (con.neg >> i) & 1:
                    s -= self.x[i]
            bound = con.rhs - s
            if con.sign > 0:
                if bound < high:
                    high = bound
            elif -bound > low:
                low = -bound
        if low > high:
            return 0
        val = low
        while val <= high:
            self.x[k] = val
            if k == self.n - 1:
                self.out.append(tuple([self.x[i] for i in range(self.n)]))
            else:
                self.rec(k + 1)
            val += 1
        return 0


def enumerate_lattice(int n, lo, hi, cons_pos, cons_neg, cons_rhs):
    cons_list = []
    for p, m, r in zip(cons_pos, cons_neg, cons_rhs):
        supp = p | m
        if supp == 0:
            if r < 0:
                return []
            continue
        top = supp.bit_length() - 1
        cons_list.append((top, p, m, r, 1 if (p >> top) & 1 else -1))
    cons_list.sort(key=lambda t: t[0])
    lat = _Lattice(n, lo, hi, cons_list)
    lat.rec(0)
    return lat.out


def subset_extrema(flat, Py_ssize_t npts, int n):
    cdef Py_ssize_t size = 1 << n
    cdef i64* pts = _copy(flat, npts * n)
    cdef i64* row = <i64*> malloc(size * sizeof(i64))
    cdef i64* hi = <i64*> malloc(size * sizeof(i64))
    cdef i64* lo = <i64*> malloc(size * sizeof(i64))
    cdef Py_ssize_t j, a, low
    cdef i64 v
    try:
        row[0] = 0
        for j in range(npts):
            for a in range(1, size):
                low = a & -a
                row[a] = row[a ^ low] + pts[j * n + _bitpos(low)]
            for a in range(size):
                v = row[a]
                if j == 0 or v > hi[a]:
                    hi[a] = v
                if j == 0 or v < lo[a]:
                    lo[a] = v
        return [hi[a] for a in range(size)], [lo[a] for a in range(size)]
    finally:
        free(pts)
        free(row)
        free(hi)
        free(lo)


def biset_maxima(flat, Py_ssize_t npts, int n):
    cdef Py_ssize_t nmask = 1 << n
    cdef Py_ssize_t size = 1
    cdef int i
    for i in range(n):
        size *= 3
    cdef i64* pts = _copy(flat, npts * n)
    cdef i64* row = <i64*> malloc(nmask * sizeof(i64))
    cdef i64* best = <i64*> malloc(size * sizeof(i64))
    cdef i64* pos = <i64*> malloc(size * sizeof(i64))
    cdef i64* neg = <i64*> malloc(size * sizeof(i64))
    cdef Py_ssize_t j, a, low, u, r, pw
    cdef i64 v, d
    try:
        for u in range(size):
            r = u
            pos[u] = 0
            neg[u] = 0
            pw = 1
            for i in range(n):
                d = r % 3
                r //= 3
                if d == 1:
                    pos[u] |= pw
                elif d == 2:
                    neg[u] |= pw
                pw <<= 1
        row[0] = 0
        for j in range(npts):
            for a in range(1, nmask):
                low = a & -a
                row[a] = row[a ^ low] + pts[j * n + _bitpos(low)]
            for u in range(size):
                v = row[pos[u]] - row[neg[u]]
                if j == 0 or v > best[u]:
                    best[u] = v
        return [best[u] for u in range(size)]
    finally:
        free(pts)
        free(row)
        free(best)
        free(pos)
        free(neg)


def prefix_sweep(flat, Py_ssize_t npts, int n, table, perms, Py_ssize_t nperm, coef, weight):
    cdef i64* pts = _copy(flat, npts * n)
    cdef i64* tab = _copy(table, len(table))
    cdef i64* pm = _copy(perms, nperm * n)
    cdef i64* cf = _copy(coef, n)
    cdef i64* wt = _copy(weight, n)
    cdef i64* target = <i64*> malloc(max(n, 1) * sizeof(i64))
    cdef Py_ssize_t r, j, k, acc, i
    cdef i64 s
    cdef bint found, ok
    try:
        for r in range(nperm):
            acc = 0
            for k in range(n):
                acc += wt[pm[r * n + k]]
                target[k] = tab[acc]
            found = False
            for j in range(npts):
                s = 0
                ok = True
                for k in range(n):
                    i = pm[r * n + k]
                    s += cf[i] * pts[j * n + i]
                    if s != target[k]:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            if not found:
                return r
        return -1
    finally:
        free(pts)
        free(tab)
        free(pm)
        free(cf)
        free(wt)
        free(target)
