# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdlib cimport malloc, calloc, free

BACKEND = "cython"


cdef int* _ints(seq) except NULL:
    cdef Py_ssize_t i, m = len(seq)
    cdef int* buf = <int*> malloc((m + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = seq[i]
    return buf


cdef inline long long _mod(long long v, long long N):
    v %= N
    return v + N if v < 0 else v


cdef struct _Col:
    int *col
    int *trail
    int *tstart
    int *tlist
    int *queue
    int tlen
    int qlen


cdef inline int _set(_Col *c, int s, int v) nogil:
    cdef int j
    if c.col[s] >= 0:
        return c.col[s] == v
    c.col[s] = v
    c.trail[c.tlen] = s
    c.tlen += 1
    for j in range(c.tstart[s], c.tstart[s + 1]):
        c.queue[c.qlen] = c.tlist[j]
        c.qlen += 1
    return 1


def enumerate_colorings(int n, int num_semiarcs, crossings, U, O, ainv, binv, sinv_x, sinv_y):
    cdef int nc = len(crossings)
    cdef int ns = num_semiarcs
    if ns == 0:
        return [()]
    cdef int *cr = <int*> malloc((4 * nc + 1) * sizeof(int))
    cdef int *cU = _ints(U)
    cdef int *cO = _ints(O)
    cdef int *cA = _ints(ainv)
    cdef int *cB = _ints(binv)
    cdef int *cSX = _ints(sinv_x)
    cdef int *cSY = _ints(sinv_y)
    cdef int *fill = <int*> calloc(ns + 1, sizeof(int))
    cdef int *st_s = <int*> malloc((ns + 1) * sizeof(int))
    cdef int *st_v = <int*> malloc((ns + 1) * sizeof(int))
    cdef int *st_mark = <int*> malloc((ns + 1) * sizeof(int))
    cdef _Col c
    cdef int i, k, j, s, v, depth, ok, x, y, a, b, ul, ol, ur, orr
    c.col = <int*> malloc((ns + 1) * sizeof(int))
    c.trail = <int*> malloc((ns + 1) * sizeof(int))
    c.tstart = <int*> calloc(ns + 2, sizeof(int))
    c.tlist = <int*> malloc((4 * nc + 1) * sizeof(int))
    c.queue = <int*> malloc((4 * ns + 8) * sizeof(int))
    c.tlen = 0
    c.qlen = 0
    out = []
    try:
        for k in range(nc):
            row = crossings[k]
            for j in range(4):
                cr[4 * k + j] = row[j]
        # CSR adjacency semiarc -> crossings
        for k in range(4 * nc):
            c.tstart[cr[k] + 1] += 1
        for s in range(ns):
            c.tstart[s + 1] += c.tstart[s]
        for k in range(4 * nc):
            s = cr[k]
            c.tlist[c.tstart[s] + fill[s]] = k // 4
            fill[s] += 1
        for s in range(ns):
            c.col[s] = -1
        depth = 0
        st_s[0] = 0
        st_v[0] = -1
        st_mark[0] = 0
        while depth >= 0:
            while c.tlen > st_mark[depth]:
                c.tlen -= 1
                c.col[c.trail[c.tlen]] = -1
            st_v[depth] += 1
            v = st_v[depth]
            if v >= n:
                depth -= 1
                continue
            c.qlen = 0
            _set(&c, st_s[depth], v)
            ok = 1
            while c.qlen > 0 and ok:
                c.qlen -= 1
                k = c.queue[c.qlen]
                ul = cr[4 * k]
                ol = cr[4 * k + 1]
                ur = cr[4 * k + 2]
                orr = cr[4 * k + 3]
                x = c.col[ul]
                y = c.col[ol]
                a = c.col[ur]
                b = c.col[orr]
                if x >= 0 and y >= 0:
                    ok = _set(&c, ur, cU[x * n + y]) and _set(&c, orr, cO[y * n + x])
                elif a >= 0 and b >= 0:
                    ok = _set(&c, ul, cSX[b * n + a]) and _set(&c, ol, cSY[b * n + a])
                elif x >= 0 and b >= 0:
                    ok = _set(&c, ol, cA[x * n + b])
                elif y >= 0 and a >= 0:
                    ok = _set(&c, ul, cB[y * n + a])
            if not ok:
                continue
            s = st_s[depth] + 1
            while s < ns and c.col[s] >= 0:
                s += 1
            if s == ns:
                out.append(tuple([c.col[i] for i in range(ns)]))
                continue
            depth += 1
            st_s[depth] = s
            st_v[depth] = -1
            st_mark[depth] = c.tlen
    finally:
        free(cr); free(cU); free(cO); free(cA); free(cB); free(cSX); free(cSY); free(fill)
        free(c.col); free(c.trail); free(c.tstart); free(c.tlist); free(c.queue)
        free(st_s); free(st_v); free(st_mark)
    out.sort()
    return out


def state_sum(int num_semiarcs, int free_loops, pairs_a, pairs_b, coef_a, coef_b,
              long long delta, long long modulus):
    cdef int nc = len(pairs_a)
    cdef int ns = num_semiarcs
    cdef int *pa = <int*> malloc((4 * nc + 1) * sizeof(int))
    cdef int *pb = <int*> malloc((4 * nc + 1) * sizeof(int))
    cdef long long *ca = <long long*> malloc((nc + 1) * sizeof(long long))
    cdef long long *cb = <long long*> malloc((nc + 1) * sizeof(long long))
    cdef long long *powers = <long long*> malloc((ns + free_loops + 2) * sizeof(long long))
    cdef int *parent = <int*> malloc((ns + 1) * sizeof(int))
    cdef long long total = 0, prod
    cdef unsigned long long state, nstates
    cdef int i, k, circles, ra, rb, j
    cdef int *pp
    try:
        for k in range(nc):
            for j in range(4):
                pa[4 * k + j] = pairs_a[k][j]
                pb[4 * k + j] = pairs_b[k][j]
            ca[k] = _mod(coef_a[k], modulus)
            cb[k] = _mod(coef_b[k], modulus)
        powers[0] = 1 % modulus
        for i in range(1, ns + free_loops + 1):
            powers[i] = powers[i - 1] * _mod(delta, modulus) % modulus
        nstates = (<unsigned long long> 1) << nc
        state = 0
        while state < nstates:
            for i in range(ns):
                parent[i] = i
            prod = 1
            circles = ns
            for k in range(nc):
                if (state >> k) & 1:
                    pp = pb + 4 * k
                    prod = prod * cb[k] % modulus
                else:
                    pp = pa + 4 * k
                    prod = prod * ca[k] % modulus
                for j in range(0, 4, 2):
                    ra = pp[j]
                    while parent[ra] != ra:
                        parent[ra] = parent[parent[ra]]
                        ra = parent[ra]
                    rb = pp[j + 1]
                    while parent[rb] != rb:
                        parent[rb] = parent[parent[rb]]
                        rb = parent[rb]
                    if ra != rb:
                        parent[ra] = rb
                        circles -= 1
            total = (total + prod * powers[circles + free_loops]) % modulus
            state += 1
    finally:
        free(pa); free(pb); free(ca); free(cb); free(powers); free(parent)
    return total


cdef int _violations(int n, int *U, int *O, int *A, int *B, long long delta, long long N,
                     list out, int max_report) except -1:
    cdef int x, y, z, p, q, r, e
    cdef long long axy, bxy, ayz, byz, axz, bxz, ap, bp, aq, bq, ar, br
    cdef long long chk[5]
    cdef int found = 0
    for x in range(n):
        for y in range(n):
            axy = A[x * n + y]
            bxy = B[x * n + y]
            for z in range(n):
                ayz = A[y * n + z]
                byz = B[y * n + z]
                axz = A[x * n + z]
                bxz = B[x * n + z]
                p = U[x * n + y] * n + O[z * n + y]
                q = O[y * n + x] * n + O[z * n + x]
                r = U[x * n + z] * n + U[y * n + z]
                ap = A[p]; bp = B[p]; aq = A[q]; bq = B[q]; ar = A[r]; br = B[r]
                chk[0] = axy * ayz % N * ap - axz * aq % N * ar
                chk[1] = axy * byz % N * bp - bxz * bq % N * ar
                chk[2] = bxy * ayz % N * bp - bxz * aq % N * br
                chk[3] = axy * ayz % N * bp - (axz * bq % N * ar + axz * aq % N * br
                                               + delta * axz % N * bq % N * br + bxz * bq % N * br)
                chk[4] = (bxy * ayz % N * ap + axy * byz % N * ap + delta * bxy % N * byz % N * ap
                          + bxy * byz % N * bp) - bxz * aq % N * ar
                for e in range(5):
                    if chk[e] % N != 0:
                        found += 1
                        if out is not None:
                            out.append((e + 1, x, y, z))
                        if found >= max_report:
                            return found
    return found


def bracket_violations(int n, U, O, A, B, long long delta, long long modulus, int max_report):
    cdef int *cU = _ints(U)
    cdef int *cO = _ints(O)
    cdef int *cA = _ints(A)
    cdef int *cB = _ints(B)
    out = []
    try:
        _violations(n, cU, cO, cA, cB, _mod(delta, modulus), modulus, out, max_report)
    finally:
        free(cU); free(cO); free(cA); free(cB)
    return out


cdef struct _Ctx:
    int n
    int m
    int nu
    long long N
    int *U
    int *O
    int *units
    int *inv
    int *A
    int *B
    long long delta
    long long w
    int limit
    int count


cdef int _place_b(_Ctx *c, int i, list out) except -1:
    cdef int j, b, x, y
    cdef long long a, d, w, saved_w
    if c.count >= c.limit:
        return 0
    if i == c.m:
        if _violations(c.n, c.U, c.O, c.A, c.B, c.delta, c.N, None, 1) == 0:
            out.append((tuple([c.A[j] for j in range(c.m)]), tuple([c.B[j] for j in range(c.m)]),
                        c.delta, c.w))
            c.count += 1
        return 0
    a = c.A[i]
    x = i // c.n
    y = i % c.n
    for j in range(c.nu):
        b = c.units[j]
        d = _mod(-a * c.inv[b] - c.inv[a] * b, c.N)
        if i == 0:
            c.delta = d
        elif d != c.delta:
            continue
        saved_w = c.w
        if x == y:
            w = _mod(-a * a % c.N * c.inv[b], c.N)
            if saved_w < 0:
                c.w = w
            elif w != saved_w:
                continue
        c.B[i] = b
        _place_b(c, i + 1, out)
        c.w = saved_w
        if c.count >= c.limit:
            return 0
    return 0


cdef int _place_a(_Ctx *c, int i, list out) except -1:
    cdef int j
    if c.count >= c.limit:
        return 0
    if i == c.m:
        c.delta = -1
        c.w = -1
        _place_b(c, 0, out)
        return 0
    for j in range(c.nu):
        c.A[i] = c.units[j]
        _place_a(c, i + 1, out)
        if c.count >= c.limit:
            return 0
    return 0


def search_chunk(int n, U, O, long long modulus, units, int first, long long limit):
    cdef _Ctx c
    cdef int j
    c.n = n
    c.m = n * n
    c.nu = len(units)
    c.N = modulus
    c.U = _ints(U)
    c.O = _ints(O)
    c.units = _ints(units)
    c.inv = <int*> calloc(modulus + 1, sizeof(int))
    c.A = <int*> calloc(c.m + 1, sizeof(int))
    c.B = <int*> calloc(c.m + 1, sizeof(int))
    c.limit = min(limit, 2147483647)
    c.count = 0
    out = []
    try:
        for j in range(c.nu):
            c.inv[units[j]] = pow(units[j], -1, modulus)
        c.A[0] = first
        _place_a(&c, 1, out)
    finally:
        free(c.U); free(c.O); free(c.units); free(c.inv); free(c.A); free(c.B)
    return out
