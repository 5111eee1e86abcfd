# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``pyref``: same functions, same results, C-speed loops.

Supports p < 64 and s <= 10000, which covers every sweep the package runs.
All quantities stay far inside C long range (sums are bounded by
(p-1) * s * p < 2^26 at the supported limits).
"""

BACKEND = "cython"

_MAX_P = 64
_MAX_S = 10000


cdef long _inv_mod(long u, long p):
    # extended Euclid; p is prime and 1 <= u < p
    cdef long t = 0, newt = 1, r = p, newr = u, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def _check_range(long p, long s):
    if p < 3 or p >= _MAX_P:
        raise ValueError(f"compiled kernel supports 3 <= p < {_MAX_P}, got {p}")
    if s < 0 or s > _MAX_S:
        raise ValueError(f"compiled kernel supports 0 <= s <= {_MAX_S}, got {s}")


cdef bint _next_composition(long* b, long m) noexcept:
    # lexicographic successor in place; returns False after the last tuple
    cdef long rm = 0, i, j
    i = m - 1
    while i > 0:
        rm += b[i]
        if rm > 0:
            b[i - 1] += 1
            for j in range(i, m - 1):
                b[j] = 0
            b[m - 1] = rm - 1
            return True
        i -= 1
    return False


def scan_valid(long p, long s):
    """All (b, a) pairs at (p, s): b runs over nonnegative tuples of length
    p-1 with sum s and sum_u b(u) j(u^{-1}) divisible by p, lexicographic;
    a[v-1] = sum_u b(u) j(u^{-1}(-v)) / p - 1."""
    _check_range(p, s)
    cdef long m = p - 1
    cdef long inv[64]
    cdef long table[64][64]
    cdef long b[64]
    cdef long a[64]
    cdef long u, v, tot, sv
    cdef bint more
    for u in range(m):
        inv[u] = _inv_mod(u + 1, p)
    for v in range(m):
        for u in range(m):
            table[v][u] = (inv[u] * (p - (v + 1))) % p
    for u in range(m):
        b[u] = 0
    b[m - 1] = s
    out = []
    more = True
    while more:
        tot = 0
        for u in range(m):
            tot += b[u] * inv[u]
        if tot % p == 0:
            for v in range(m):
                sv = 0
                for u in range(m):
                    sv += b[u] * table[v][u]
                a[v] = sv / p - 1
            out.append(
                (
                    tuple([b[u] for u in range(m)]),
                    tuple([a[v] for v in range(m)]),
                )
            )
        more = _next_composition(b, m)
    return out


def verify_sweep(long p, long s, pairs=None):
    """Scaled-integer bulk verification at (p, s); see pyref.verify_sweep."""
    _check_range(p, s)
    cdef long m = p - 1
    cdef long inv[64]
    cdef long table[64][64]
    cdef long rot[64][64]
    cdef long b[64]
    cdef long a[64]
    cdef long sums[64]
    cdef long d[64]
    cdef long u, v, k, sv, tot, half_sum, av
    cdef bint ok_div, ok_a, ok_int, ok_match, ok_l
    for u in range(m):
        inv[u] = _inv_mod(u + 1, p)
    for v in range(m):
        for u in range(m):
            table[v][u] = (inv[u] * (p - (v + 1))) % p
    for k in range(m):
        for u in range(m):
            rot[k][u] = ((-(k + 1) * inv[u]) % p + p) % p
    if pairs is None:
        pairs = scan_valid(p, s)
    half_sum = s - 2
    a_failures = []
    differential_failures = []
    lefschetz_failures = []
    degree_failures = []
    divisibility_failures = []
    for bt, at in pairs:
        for u in range(m):
            b[u] = bt[u]
            a[u] = at[u]
        # convolution sums; a(v) = sums[v-1]/p - 1
        ok_div = True
        for v in range(m):
            sv = 0
            for u in range(m):
                sv += b[u] * table[v][u]
            if sv % p != 0:
                ok_div = False
            sums[v] = sv
        if not ok_div:
            divisibility_failures.append(bt)
            continue
        # a integrality/nonnegativity/symmetry
        ok_a = True
        for v in range(m):
            av = sums[v] / p - 1
            if av != a[v] or av < 0 or av + a[m - 1 - v] != half_sum:
                ok_a = False
        if not ok_a:
            a_failures.append(bt)
        # differential count via the fractional-part route
        ok_int = True
        for k in range(m):
            tot = 0
            for u in range(m):
                tot += b[u] * rot[k][u]
            if tot % p != 0:
                ok_int = False
                d[k] = -1
            else:
                d[k] = tot / p - 1
        ok_match = ok_int
        if ok_match:
            for k in range(m):
                if d[k] != a[k]:
                    ok_match = False
                    break
        if not ok_match:
            differential_failures.append(bt)
        # fixed-point identity scaled by p: p(1 + d(v)) = sums[v-1]; the two
        # sides come from independent routes (fractional parts vs convolution)
        if ok_int:
            ok_l = True
            for v in range(m):
                if p * (1 + d[v]) != sums[v]:
                    ok_l = False
                    break
            if not ok_l:
                lefschetz_failures.append(bt)
        else:
            lefschetz_failures.append(bt)
        # total branch degree = sums at v = p-1
        if sums[m - 1] % p != 0:
            degree_failures.append(bt)
    return {
        "p": p,
        "s": s,
        "n_valid": len(pairs),
        "a_failures": a_failures,
        "differential_failures": differential_failures,
        "lefschetz_failures": lefschetz_failures,
        "degree_failures": degree_failures,
        "divisibility_failures": divisibility_failures,
    }
