"""Partitions, Littlewood-Richardson coefficients, and rim-hook reduction.

The LR coefficient is computed by direct enumeration of skew tableaux
(deliberately: this routine is the independently auditable cross-check
for everything downstream, so no determinant or crystal shortcuts).

Rim-hook reduction rewrites a partition with at most k rows, modulo
removal of border strips of size n, into a class inside the k x (n-k)
box.  Each removal contributes one power of q and the sign
(-1)^(k - height of the strip).  The endpoint is independent of the
removal order; tests assert this over all removal sequences.
"""

from fractions import Fraction

from .cyclotomic import CyclotomicNumber


class Partition:
    """Weakly decreasing tuple of positive parts; trailing zeros dropped."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing: %s" % (tuple(parts),))
        if ps and ps[-1] < 0:
            raise ValueError("parts must be nonnegative: %s" % (tuple(parts),))
        object.__setattr__(self, "parts", tuple(ps))

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%s)" % (self.parts,)

    def size(self):
        return sum(self.parts)

    def row(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    def contains(self, other):
        return all(self.row(i) >= other.row(i) for i in range(len(other)))

    def conjugate(self):
        if not self.parts:
            return Partition()
        return Partition(
            [sum(1 for p in self.parts if p > c) for c in range(self.parts[0])]
        )

    def fits_in_box(self, rows, cols):
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def box_complement(self, rows, cols):
        """Complement inside the rows x cols box, reversed to a partition."""
        if not self.fits_in_box(rows, cols):
            raise ValueError("class outside box: %s in %dx%d" % (self.parts, rows, cols))
        return Partition([cols - self.row(rows - 1 - i) for i in range(rows)])


def partitions_in_box(rows, cols):
    """All partitions fitting in rows x cols, by size then lexicographically."""
    out = []

    def rec(prefix, maxpart):
        out.append(Partition(prefix))
        if len(prefix) < rows:
            for p in range(1, maxpart + 1):
                rec(prefix + [p], p)

    rec([], cols)
    out.sort(key=lambda p: (p.size(), p.parts))
    return out


def partitions_of(total, max_rows, max_part):
    """Partitions of `total` with at most max_rows parts, each at most max_part."""
    out = []

    def rec(prefix, remaining, bound):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_rows:
            return
        for p in range(min(bound, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], total, max_part)
    return out


def elementary_symmetric(j, values):
    """e_j of a list of cyclotomic numbers by the one-pass recurrence."""
    if j < 0:
        raise ValueError("negative elementary symmetric index")
    if j > len(values):
        return Fraction(0)
    if not values:
        return Fraction(1)
    order = values[0].order
    one = CyclotomicNumber(order, [1])
    zero = CyclotomicNumber(order, [])
    e = [one] + [zero] * j
    seen = 0
    for x in values:
        seen += 1
        for t in range(min(j, seen), 0, -1):
            e[t] = e[t] + x * e[t - 1]
    return e[j]


def lr_coefficient(lam, mu, nu):
    """Littlewood-Richardson coefficient c^nu_{lam, mu} by tableau enumeration.

    Counts skew semistandard tableaux of shape nu/lam and content mu whose
    reverse reading word is a lattice word.  Cells are filled in reading
    order (rows top to bottom, right to left within a row) so the lattice
    property can be enforced incrementally.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size() + mu.size() != nu.size():
        return 0
    if not nu.contains(lam) or not nu.contains(mu):
        return 0
    cells = []
    for r in range(len(nu)):
        for c in range(nu.row(r) - 1, lam.row(r) - 1, -1):
            cells.append((r, c))
    if not cells:
        return 1
    m = len(mu)
    grid = {}
    counts = [0] * (m + 1)
    remaining = [mu.row(i) for i in range(m)]

    def fill(pos):
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        hi = m
        right = grid.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = grid.get((r - 1, c))
        lo = 1
        if r > 0 and lam.row(r - 1) <= c < nu.row(r - 1):
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v - 1] >= counts[v - 2]:
                continue
            grid[(r, c)] = v
            counts[v - 1] += 1
            remaining[v - 1] -= 1
            total += fill(pos + 1)
            del grid[(r, c)]
            counts[v - 1] -= 1
            remaining[v - 1] += 1
        return total

    return fill(0)


def _beta_numbers(lam, k):
    return [lam.row(i) + k - 1 - i for i in range(k)]


def _partition_from_beta(beta, k):
    beta = sorted(beta, reverse=True)
    return Partition([beta[i] - (k - 1 - i) for i in range(k)])


def rim_hook_removals(lam, k, n):
    """All single n-rim-hook removals from lam, as (new_partition, height) pairs."""
    lam = Partition(lam)
    beta = _beta_numbers(lam, k)
    out = []
    bset = set(beta)
    for b in beta:
        t = b - n
        if t >= 0 and t not in bset:
            height = sum(1 for x in beta if t < x < b) + 1
            nb = [x for x in beta if x != b] + [t]
            out.append((_partition_from_beta(nb, k), height))
    return out


def rim_hook_reduce(lam, k, n):
    """Reduce lam modulo n-rim hooks into the k x (n-k) box.

    Returns (partition, q_exponent, sign) or None when no removal sequence
    reaches the box (the class is zero).  The reduction endpoint does not
    depend on which removable strip is taken first.
    """
    lam = Partition(lam)
    if len(lam) > k:
        raise ValueError("class outside algebra: %s has more than %d rows" % (lam.parts, k))
    q = 0
    sign = 1
    while not lam.fits_in_box(k, n - k):
        moves = rim_hook_removals(lam, k, n)
        if not moves:
            return None
        nxt, height = max(moves, key=lambda mh: mh[0].parts)
        sign *= (-1) ** (k - height)
        q += 1
        lam = nxt
    return lam, q, sign


class QuantumClassSum:
    """Integer combination of box classes with powers of the deformation q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for key, coeff in dict(terms).items():
                if coeff:
                    parts, qexp = key
                    data[(Partition(parts).parts, int(qexp))] = int(coeff)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, *a):
        raise AttributeError("QuantumClassSum is immutable")

    def __eq__(self, other):
        if not isinstance(other, QuantumClassSum):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "QuantumClassSum(0)"
        bits = []
        for (parts, qexp), coeff in sorted(self.terms.items()):
            bits.append("%+d*q^%d*s%s" % (coeff, qexp, (parts,)))
        return "QuantumClassSum(%s)" % " ".join(bits)

    def items(self):
        return sorted(self.terms.items())

    def at_q1(self):
        """Collapse q to 1: map from partition tuple to integer coefficient."""
        out = {}
        for (parts, _), coeff in self.terms.items():
            out[parts] = out.get(parts, 0) + coeff
            if out[parts] == 0:
                del out[parts]
        return out


def quantum_product(lam, mu, k, n):
    """Product of two box classes in the rim-hook quotient, q kept formal."""
    lam, mu = Partition(lam), Partition(mu)
    for p in (lam, mu):
        if not p.fits_in_box(k, n - k):
            raise ValueError("class outside box: %s in %dx%d" % (p.parts, k, n - k))
    total = lam.size() + mu.size()
    width = lam.row(0) + mu.row(0)
    acc = {}
    for nu in partitions_of(total, k, width):
        if not nu.contains(lam):
            continue
        c = lr_coefficient(lam, mu, nu)
        if not c:
            continue
        red = rim_hook_reduce(nu, k, n)
        if red is None:
            continue
        box_class, qexp, sign = red
        key = (box_class.parts, qexp)
        acc[key] = acc.get(key, 0) + sign * c
    return QuantumClassSum(acc)
