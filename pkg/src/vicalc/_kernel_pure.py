"""Pure-Python hot loop for the root-of-unity subset sums.

Everything here works on length-n integer vectors representing elements
of Z[x]/(x^n - 1); since every input is a power of zeta_n, the whole
per-subset term stays in that ring and only the final accumulated sum
is reduced modulo Phi_n (by the caller).  Multiplying by a difference
of two root monomials is just two rotations and a subtraction, which is
what makes the subset loop cheap.

Per k-subset S of root exponents the accumulated term is

    genus 0:   Delta_S * D_S        D = prod(rho) * prod_{i!=j}(rho_i - rho_j)
    genus 1:   Delta_S
    genus g:   Delta_S * R_S^(g-1)  R = prod_{rho in S, tau not in S}(rho - tau)

with Delta_S the product of elementary symmetric values sigma_j(S) over
the requested indices.  R is the complement product from
prod(rho) * prod_{i!=j}(rho_i - rho_j) = n^k / R, which turns the
genus >= 2 denominator into integer multiplications; the caller divides
the genus-0 total by n^k and applies all sign and power prefactors.
"""

from math import comb


def unrank_combination(n, k, rank):
    """The rank-th k-subset of range(n) in lexicographic order."""
    out = []
    prev = -1
    for slot in range(k, 0, -1):
        c = prev + 1
        while True:
            block = comb(n - c - 1, slot - 1)
            if rank < block:
                break
            rank -= block
            c += 1
        out.append(c)
        prev = c
    return out


def _next_combination(comb_, n):
    """Advance a k-subset to its lex successor in place; False at the end."""
    k = len(comb_)
    i = k - 1
    while i >= 0 and comb_[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    comb_[i] += 1
    for j in range(i + 1, k):
        comb_[j] = comb_[j - 1] + 1
    return True


def subset_power_sum(n, k, genus, sigma_indices, lo, hi):
    """Sum the per-subset terms over lex ranks [lo, hi) as a length-n vector."""
    acc = [0] * n
    if lo >= hi:
        return acc
    rot = [[(t - s) % n for t in range(n)] for s in range(n)]
    pair_cache = {}

    def binom_pairs(sa, sb):
        key = (sa, sb)
        got = pair_cache.get(key)
        if got is None:
            got = list(zip(rot[sa], rot[sb]))
            pair_cache[key] = got
        return got

    def conv(a, b):
        out = [0] * n
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        t = i + j
                        if t >= n:
                            t -= n
                        out[t] += ai * bj
        return out

    jmax = max(sigma_indices) if sigma_indices else 0
    subset = unrank_combination(n, k, lo)
    count = hi - lo
    half_pairs = k * (k - 1) // 2
    d_sign = -1 if half_pairs % 2 else 1
    unit = [0] * n
    unit[0] = 1

    while True:
        # elementary symmetric vectors e_0..e_jmax of the subset's roots
        if jmax:
            e = [[0] * n for _ in range(jmax + 1)]
            e[0][0] = 1
            seen = 0
            for c in subset:
                seen += 1
                idx = rot[c]
                for j in range(min(jmax, seen), 0, -1):
                    prev = e[j - 1]
                    e[j] = [x + prev[p] for x, p in zip(e[j], idx)]
            delta = None
            for j in sigma_indices:
                if j == 0:
                    continue
                delta = e[j][:] if delta is None else conv(delta, e[j])
            if delta is None:
                delta = unit[:]
        else:
            delta = unit[:]

        if genus == 1:
            term = delta
        elif genus == 0:
            v = unit[:]
            for a in range(k):
                for b in range(a + 1, k):
                    v = [v[p] - v[q] for p, q in binom_pairs(subset[a], subset[b])]
            d = conv(v, v)
            shift = sum(subset) % n
            idx = rot[shift]
            d = [d[p] for p in idx]
            if d_sign < 0:
                d = [-x for x in d]
            term = conv(delta, d)
        else:
            in_set = [False] * n
            for c in subset:
                in_set[c] = True
            r = unit[:]
            for c in subset:
                for t in range(n):
                    if not in_set[t]:
                        r = [r[p] - r[q] for p, q in binom_pairs(c, t)]
            power = r
            for _ in range(genus - 2):
                power = conv(power, r)
            term = conv(delta, power)

        for t in range(n):
            if term[t]:
                acc[t] += term[t]
        count -= 1
        if count == 0:
            break
        _next_combination(subset, n)
    return acc
