"""Pure-Python kernels; same signatures as the compiled ``_ckernels``.

Tables arrive flattened row-major: ``U[x*n + y]`` is x ▷̲ y.  Crossings
arrive as ``(ul, ol, ur, orr)`` semiarc ids: the left side pair maps to the
right side by ``ur = ul ▷̲ ol`` and ``orr = ol ▷̄ ul``.
"""

BACKEND = "python"


def enumerate_colorings(n, num_semiarcs, crossings, U, O, ainv, binv, sinv_x, sinv_y):
    """All semiarc colorings, found by DFS with propagation; returned sorted.

    ``ainv[x*n+v]`` is the y with y ▷̄ x = v, ``binv[y*n+v]`` the x with
    x ▷̲ y = v, and ``sinv_*[p*n+q]`` the components of S^{-1}(p, q).
    """
    if num_semiarcs == 0:
        return [()]
    col = [-1] * num_semiarcs
    touching = [[] for _ in range(num_semiarcs)]
    for k, c in enumerate(crossings):
        for s in c:
            touching[s].append(k)
    out = []
    trail = []

    def assign(s, v, queue):
        cur = col[s]
        if cur >= 0:
            return cur == v
        col[s] = v
        trail.append(s)
        queue.extend(touching[s])
        return True

    def propagate(queue):
        ok = True
        while queue and ok:
            k = queue.pop()
            ul, ol, ur, orr = crossings[k]
            x, y, a, b = col[ul], col[ol], col[ur], col[orr]
            if x >= 0 and y >= 0:
                ok = assign(ur, U[x * n + y], queue) and assign(orr, O[y * n + x], queue)
            elif a >= 0 and b >= 0:
                # S(x, y) = (y ▷̄ x, x ▷̲ y) = (b, a)
                ok = assign(ul, sinv_x[b * n + a], queue) and assign(ol, sinv_y[b * n + a], queue)
            elif x >= 0 and b >= 0:
                ok = assign(ol, ainv[x * n + b], queue)
            elif y >= 0 and a >= 0:
                ok = assign(ul, binv[y * n + a], queue)
        return ok

    def rec(start):
        s = start
        while s < num_semiarcs and col[s] >= 0:
            s += 1
        if s == num_semiarcs:
            out.append(tuple(col))
            return
        for v in range(n):
            mark = len(trail)
            queue = []
            assign(s, v, queue)
            if propagate(queue):
                rec(s + 1)
            while len(trail) > mark:
                col[trail.pop()] = -1

    rec(0)
    out.sort()
    return out


def state_sum(num_semiarcs, free_loops, pairs_a, pairs_b, coef_a, coef_b, delta, modulus):
    """Sum over all states of (product of coefficients) * delta^(circles) mod N.

    ``pairs_a[k]`` is the pair of arc joins (p, q, r, s) for choice A at
    crossing k; state bit k = 0 selects A.
    """
    nc = len(pairs_a)
    powers = [1] * (num_semiarcs + free_loops + 1)
    for i in range(1, len(powers)):
        powers[i] = powers[i - 1] * delta % modulus
    total = 0
    parent = list(range(num_semiarcs))
    for state in range(1 << nc):
        for i in range(num_semiarcs):
            parent[i] = i
        prod = 1
        circles = num_semiarcs
        for k in range(nc):
            if state >> k & 1:
                p, q, r, s = pairs_b[k]
                prod = prod * coef_b[k] % modulus
            else:
                p, q, r, s = pairs_a[k]
                prod = prod * coef_a[k] % modulus
            for a, b in ((p, q), (r, s)):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    circles -= 1
        total = (total + prod * powers[circles + free_loops]) % modulus
    return total


def bracket_violations(n, U, O, A, B, delta, modulus, max_report):
    """(equation index 1..5, x, y, z) for each failing skein equation."""
    out = []
    N = modulus
    for x in range(n):
        for y in range(n):
            axy, bxy = A[x * n + y], B[x * n + y]
            uxy = U[x * n + y]
            oyx = O[y * n + x]
            for z in range(n):
                ayz, byz = A[y * n + z], B[y * n + z]
                axz, bxz = A[x * n + z], B[x * n + z]
                p = uxy * n + O[z * n + y]
                q = oyx * n + O[z * n + x]
                r = U[x * n + z] * n + U[y * n + z]
                ap, bp, aq, bq, ar, br = A[p], B[p], A[q], B[q], A[r], B[r]
                checks = (
                    axy * ayz * ap - axz * aq * ar,
                    axy * byz * bp - bxz * bq * ar,
                    bxy * ayz * bp - bxz * aq * br,
                    axy * ayz * bp
                    - (axz * bq * ar + axz * aq * br + delta * axz * bq * br + bxz * bq * br),
                    bxy * ayz * ap + axy * byz * ap + delta * bxy * byz * ap + bxy * byz * bp
                    - bxz * aq * ar,
                )
                for e, val in enumerate(checks, 1):
                    if val % N:
                        out.append((e, x, y, z))
                        if len(out) >= max_report:
                            return out
    return out


def search_chunk(n, U, O, modulus, units, first, limit):
    """Brackets with A[0][0] = first, in lexicographic order of (A, B) flat.

    Entries are placed A row-major, then B row-major.  Placing B[x][y]
    completes the pair at (x, y), at which point the delta value is pinned
    (first pair) or checked; diagonal pairs likewise pin or check w.
    """
    N = modulus
    m = n * n
    inv = {u: pow(u, -1, N) for u in units}
    A = [0] * m
    B = [0] * m
    A[0] = first
    out = []
    state = {"delta": -1, "w": -1}

    def place_b(i):
        if len(out) >= limit:
            return
        if i == m:
            if not bracket_violations(n, U, O, A, B, state["delta"], N, 1):
                out.append((tuple(A), tuple(B), state["delta"], state["w"]))
            return
        a = A[i]
        x, y = divmod(i, n)
        for b in units:
            d = (-a * inv[b] - inv[a] * b) % N
            if i == 0:
                state["delta"] = d
            elif d != state["delta"]:
                continue
            saved_w = state["w"]
            if x == y:
                w = (-a * a * inv[b]) % N
                if saved_w < 0:
                    state["w"] = w
                elif w != saved_w:
                    continue
            B[i] = b
            place_b(i + 1)
            state["w"] = saved_w
            if len(out) >= limit:
                return

    def place_a(i):
        if len(out) >= limit:
            return
        if i == m:
            state["delta"] = -1
            state["w"] = -1
            place_b(0)
            return
        for a in units:
            A[i] = a
            place_a(i + 1)
            if len(out) >= limit:
                return

    place_a(1)
    return out
