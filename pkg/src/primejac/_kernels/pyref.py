"""Pure-Python reference implementation of the sweep kernels.

These are the hot loops of the package: enumerating branch-profile
candidates (compositions of S into p-1 nonnegative parts), filtering by the
mod-p divisibility constraint, and bulk-verifying the exact identities in
scaled integer arithmetic.  The compiled twin in ``_speedups.pyx`` implements
the same functions with the same semantics; either backend must produce
bit-identical results.

Scaling convention: every rational that appears in the verified identities
has denominator dividing p, so multiplying through by p turns all checks
into integer equalities.  Exactness is preserved; no rounding exists
anywhere.
"""

from itertools import combinations

BACKEND = "python"


def _inverse_residues(p):
    return [pow(u, -1, p) for u in range(1, p)]


def compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`,
    in lexicographic order (stars and bars over combinations)."""
    if parts < 1 or total < 0:
        return
    if parts == 1:
        yield (total,)
        return
    n_slots = total + parts - 1
    last = parts - 2
    for bars in combinations(range(n_slots), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(n_slots - 1 - bars[last])
        yield tuple(out)


def scan_valid(p, s):
    """All branch tuples b (sum s, divisibility constraint) with their
    induced multiplicity tuples, in lexicographic order of b.

    Returns a list of (b, a) pairs where a[v-1] = sum_u b(u) j(u^{-1}(-v))/p - 1.
    """
    m = p - 1
    inv = _inverse_residues(p)
    # T[v-1][u-1] = j(u^{-1} * (-v)) = (inv(u) * (p - v)) % p
    table = [[(inv[u] * (p - v)) % p for u in range(m)] for v in range(1, p)]
    out = []
    for b in compositions(s, m):
        tot = 0
        for u in range(m):
            tot += b[u] * inv[u]
        if tot % p:
            continue
        a = []
        for v in range(m):
            row = table[v]
            sv = 0
            for u in range(m):
                bu = b[u]
                if bu:
                    sv += bu * row[u]
            # divisibility at v=1 propagates to every v; // is exact
            a.append(sv // p - 1)
        out.append((b, tuple(a)))
    return out


def verify_sweep(p, s, pairs=None):
    """Bulk exact verification of the per-profile identities at (p, s).

    For every valid branch tuple b the following are checked in scaled
    integer arithmetic (multiply by p; zero tolerance):

      * the convolution sums are divisible by p at every point, and the
        induced multiplicity tuple is nonnegative with the pair symmetry
        a(v) + a(-v) = s - 2;
      * the differential eigenspace count (fractional-part formula over the
        branch data) reproduces the same multiplicity tuple;
      * the fixed-point identity: with d the differential count,
        p * (1 + d(-v)) equals the convolution sum at v, for every v --
        the two sides come from independent routes;
      * the total branch degree sum_u b(u) j(u^{-1}) is divisible by p.

    Returns a summary dict with counts and per-check failure lists (empty
    lists mean the sweep verified).
    """
    m = p - 1
    inv = _inverse_residues(p)
    table = [[(inv[u] * (p - v)) % p for u in range(m)] for v in range(1, p)]
    # rotation residues for the differential count: rot[k-1][u-1] = (-k * inv(u)) % p
    rot = [[(-k * inv[u]) % p for u in range(m)] for k in range(1, p)]
    if pairs is None:
        pairs = scan_valid(p, s)
    half_sum = s - 2
    a_failures = []
    differential_failures = []
    lefschetz_failures = []
    degree_failures = []
    divisibility_failures = []
    for b, a in pairs:
        # sums[v-1] = sum_u b(u) j(u^{-1}(-v)); the convolution route gives
        # a(v) = sums[v-1]/p - 1
        sums = []
        ok_div = True
        for v in range(m):
            row = table[v]
            sv = 0
            for u in range(m):
                bu = b[u]
                if bu:
                    sv += bu * row[u]
            if sv % p:
                ok_div = False
            sums.append(sv)
        if not ok_div:
            divisibility_failures.append(b)
            continue
        # a integrality/nonnegativity/symmetry
        ok_a = True
        for v in range(m):
            av = sums[v] // p - 1
            if av != a[v] or av < 0 or av + a[m - 1 - v] != half_sum:
                ok_a = False
        if not ok_a:
            a_failures.append(b)
        # differential count d(k) = sum_u b(u) * ((-k j(u^{-1})) mod p) / p - 1
        d = []
        ok_d = True
        for k in range(m):
            row = rot[k]
            tot = 0
            for u in range(m):
                bu = b[u]
                if bu:
                    tot += bu * row[u]
            if tot % p:
                ok_d = False
                d.append(-1)
            else:
                d.append(tot // p - 1)
        if not ok_d or d != list(a):
            differential_failures.append(b)
        # fixed-point identity, scaled by p.  Coordinate v of the left side
        # 1 - conj(tau) is -1 - d(-v); coordinate v of the right side
        # sum 1/(1-eps) is -S(v)/p with S(v) = sum_u b(u) j(u^{-1} v).
        # Substituting v -> -v turns the equality into p(1 + d(v)) = S(-v),
        # and S(-v) is exactly sums[v-1].  d comes from the fractional-part
        # route, sums from the convolution route, so this is not circular.
        if ok_d:
            for v in range(m):
                if p * (1 + d[v]) != sums[v]:
                    lefschetz_failures.append(b)
                    break
        else:
            lefschetz_failures.append(b)
        # total branch degree = S(1) = sums at v = p-1 (0-based m-1)
        if sums[m - 1] % p:
            degree_failures.append(b)
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
