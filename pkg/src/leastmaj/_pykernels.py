"""Pure-Python integer kernels.

Reference implementation of the hot loops.  ``_ckernels.pyx`` mirrors every
function here with the same signature and results; the selector in
``kernels.py`` picks one at import time.  All tables hold Python ints.
"""


def local_violation(vals, n):
    """First ``(A, i, j)`` with f(A+i) + f(A+j) < f(A+i+j) + f(A), else None."""
    size = 1 << n
    for a in range(size):
        fa = vals[a]
        for i in range(n):
            bi = 1 << i
            if a & bi:
                continue
            fai = vals[a | bi]
            for j in range(i + 1, n):
                bj = 1 << j
                if a & bj:
                    continue
                if fai + vals[a | bj] < vals[a | bi | bj] + fa:
                    return (a, i, j)
    return None


def pairs_violation(vals, n):
    """First ``(A, B)`` with f(A) + f(B) < f(A|B) + f(A&B), else None."""
    size = 1 << n
    for a in range(size):
        fa = vals[a]
        for b in range(a + 1, size):
            if fa + vals[b] < vals[a | b] + vals[a & b]:
                return (a, b)
    return None


def _ternary_tables(n):
    tern = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = (m & -m).bit_length() - 1
        tern[m] = tern[m & (m - 1)] + 3 ** low
    size = 3 ** n
    pos = [0] * size
    neg = [0] * size
    for idx in range(size):
        r = idx
        p = q = 0
        for i in range(n):
            r, d = divmod(r, 3)
            if d == 1:
                p |= 1 << i
            elif d == 2:
                q |= 1 << i
        pos[idx] = p
        neg[idx] = q
    return tern, pos, neg


def bisub_violation(vals, n):
    """First pair of ternary indices violating bisubmodularity, else None."""
    tern, pos, neg = _ternary_tables(n)
    size = 3 ** n
    for u in range(size):
        s1 = pos[u]
        t1 = neg[u]
        hu = vals[u]
        for v in range(u + 1, size):
            s2 = pos[v]
            t2 = neg[v]
            s = s1 | s2
            t = t1 | t2
            join = tern[s & ~t] + 2 * tern[t & ~s]
            meet = tern[s1 & s2] + 2 * tern[t1 & t2]
            if hu + vals[v] < vals[join] + vals[meet]:
                return (u, v)
    return None


def reduction(vals, v, n, minimize):
    """min (or max) over Z ⊆ A of f(Z) + v(A - Z), for every A."""
    size = 1 << n
    out = list(vals)
    for a in range(1, size):
        best = out[a]
        m = a
        while m:
            low = m & -m
            i = low.bit_length() - 1
            cand = out[a ^ low] + v[i]
            if minimize:
                if cand < best:
                    best = cand
            elif cand > best:
                best = cand
            m ^= low
        out[a] = best
    return out


def minimal_minimizer(vals, x, n):
    """Minimum of f(A) - x(A) and the intersection of all minimizers."""
    size = 1 << n
    xs = [0] * size
    best = vals[0]
    for a in range(1, size):
        low = a & -a
        xs[a] = xs[a ^ low] + x[low.bit_length() - 1]
        g = vals[a] - xs[a]
        if g < best:
            best = g
    meet = size - 1
    for a in range(size):
        if vals[a] - xs[a] == best:
            meet &= a
    return meet, best


def enumerate_lattice(n, lo, hi, cons_pos, cons_neg, cons_rhs):
    """Integer points of {lo <= x <= hi, x(P_j) - x(N_j) <= r_j}.

    Depth-first over coordinates 0..n-1; a constraint is applied at the level
    of its highest index, where it bounds that coordinate.
    """
    levels = [[] for _ in range(n)]
    for p, m, r in zip(cons_pos, cons_neg, cons_rhs):
        supp = p | m
        if supp == 0:
            if r < 0:
                return []
            continue
        top = supp.bit_length() - 1
        levels[top].append((p, m, r, 1 if p >> top & 1 else -1))
    out = []
    x = [0] * n

    def partial(p, m, top):
        s = 0
        for i in range(top):
            b = 1 << i
            if p & b:
                s += x[i]
            elif m & b:
                s -= x[i]
        return s

    def rec(k):
        low = lo[k]
        high = hi[k]
        for p, m, r, sign in levels[k]:
            bound = r - partial(p, m, k)
            if sign > 0:
                if bound < high:
                    high = bound
            elif -bound > low:
                low = -bound
        if low > high:
            return
        if k == n - 1:
            for val in range(low, high + 1):
                x[k] = val
                out.append(tuple(x))
            return
        for val in range(low, high + 1):
            x[k] = val
            rec(k + 1)

    rec(0)
    return out


def subset_extrema(flat, npts, n):
    """Max and min of x(A) over the points (row-major in ``flat``) for every A."""
    size = 1 << n
    hi = [None] * size
    lo = [None] * size
    row = [0] * size
    for j in range(npts):
        base = j * n
        for a in range(1, size):
            low = a & -a
            row[a] = row[a ^ low] + flat[base + low.bit_length() - 1]
        if j == 0:
            hi = list(row)
            lo = list(row)
            continue
        for a in range(size):
            v = row[a]
            if v > hi[a]:
                hi[a] = v
            elif v < lo[a]:
                lo[a] = v
    return hi, lo


def biset_maxima(flat, npts, n):
    """Max of x(S) - x(T) over the points for every biset, in ternary order."""
    tern, pos, neg = _ternary_tables(n)
    size = 3 ** n
    nmask = 1 << n
    best = None
    row = [0] * nmask
    for j in range(npts):
        base = j * n
        for a in range(1, nmask):
            low = a & -a
            row[a] = row[a ^ low] + flat[base + low.bit_length() - 1]
        vals = [row[pos[u]] - row[neg[u]] for u in range(size)]
        if best is None:
            best = vals
        else:
            best = [v if v > b else b for v, b in zip(vals, best)]
    return best


def prefix_sweep(flat, npts, n, table, perms, nperm, coef, weight):
    """Index of the first permutation with no point attaining every prefix target, else -1.

    Along permutation ``p`` the k-th prefix value of a point is
    ``sum coef[i] x_i`` over its first k entries and the target is
    ``table[sum weight[i]]`` over the same entries.
    """
    for r in range(nperm):
        p = perms[r * n:(r + 1) * n]
        idx = []
        acc = 0
        for i in p:
            acc += weight[i]
            idx.append(table[acc])
        found = False
        for j in range(npts):
            base = j * n
            s = 0
            ok = True
            for k, i in enumerate(p):
                s += coef[i] * flat[base + i]
                if s != idx[k]:
                    ok = False
                    break
            if ok:
                found = True
                break
        if not found:
            return r
    return -1
