"""Fusion-algebra oracle: small quantum cohomology of Gr(k, n) at q = 1.

This is the cross-check for the root-of-unity engine, built from nothing
but Littlewood-Richardson numbers and rim-hook reduction: basis = the
C(n, k) partitions in the k x (n-k) box, counit = coefficient of the
full box, handle element assembled from the inverse pairing.  A genus-g
invariant is the counit of (product of insertions) * H^g.

A second, spectral route evaluates the same trace through the algebra
characters (Schur values at k-subsets of the n-th roots of (-1)^(k-1))
and the idempotent counits obtained by exact linear solves; tests hold
the two routes equal.
"""

from fractions import Fraction
from itertools import combinations

from .cyclotomic import CyclotomicNumber, zeta
from .engine import InadmissibleQueryError, _require_admissible, vi_invariant
from .symfunc import (
    Partition,
    elementary_symmetric,
    lr_coefficient,
    partitions_in_box,
    quantum_product,
    rim_hook_reduce,
)

_ALGEBRAS = {}


def fusion_algebra(k, n):
    key = (k, n)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = FusionAlgebra(k, n)
    return _ALGEBRAS[key]


class FusionAlgebra:
    def __init__(self, k, n):
        if not 0 < k < n:
            raise ValueError("need 0 < k < n")
        self.k = k
        self.n = n
        self.cols = n - k
        self.basis = partitions_in_box(k, self.cols)
        self.dim = len(self.basis)
        self.index = {p.parts: i for i, p in enumerate(self.basis)}
        self.box = Partition([self.cols] * k)
        self.box_index = self.index[self.box.parts]
        self._products = {}
        self._pairing = None
        self._pairing_inv = None
        self._handle = None

    def class_index(self, parts):
        p = Partition(parts)
        if p.parts not in self.index:
            raise ValueError(
                "class outside box: %s in %dx%d" % (p.parts, self.k, self.cols)
            )
        return self.index[p.parts]

    def product_vector(self, i, j):
        """sigma_i * sigma_j at q = 1, as a coefficient vector over the basis."""
        if i > j:
            i, j = j, i
        got = self._products.get((i, j))
        if got is None:
            out = [0] * self.dim
            qp = quantum_product(self.basis[i], self.basis[j], self.k, self.n)
            for parts, coeff in qp.at_q1().items():
                out[self.index[parts]] += coeff
            got = out
            self._products[(i, j)] = got
        return got

    def multiply(self, v, w):
        out = [0] * self.dim
        for i, vi in enumerate(v):
            if vi:
                for j, wj in enumerate(w):
                    if wj:
                        pv = self.product_vector(i, j)
                        c = vi * wj
                        for t, p in enumerate(pv):
                            if p:
                                out[t] += c * p
        return out

    def multiply_class(self, v, j):
        out = [0] * self.dim
        for i, vi in enumerate(v):
            if vi:
                pv = self.product_vector(i, j)
                for t, p in enumerate(pv):
                    if p:
                        out[t] += vi * p
        return out

    def counit(self, v):
        return v[self.box_index]

    def _box_preimages(self, strips):
        """Partitions reducing to the box after removing `strips` n-hooks."""
        k, n = self.k, self.n
        beta0 = tuple(self.cols + k - 1 - i for i in range(k))
        frontier = {beta0}
        for _ in range(strips):
            nxt = set()
            for beta in frontier:
                for pos in range(k):
                    cand = beta[pos] + n
                    if cand not in beta:
                        nb = tuple(sorted(beta[:pos] + beta[pos + 1 :] + (cand,), reverse=True))
                        nxt.add(nb)
            frontier = nxt
        out = []
        for beta in frontier:
            out.append(Partition([beta[i] - (k - 1 - i) for i in range(k)]))
        return out

    def pairing(self):
        """Matrix of counit(sigma_i * sigma_j), built from box preimages only."""
        if self._pairing is None:
            k, n = self.k, self.n
            top = k * self.cols
            mat = [[0] * self.dim for _ in range(self.dim)]
            for i, lam in enumerate(self.basis):
                for j in range(i, self.dim):
                    mu = self.basis[j]
                    diff = lam.size() + mu.size() - top
                    if diff < 0 or diff % n:
                        continue
                    total = 0
                    for nu in self._box_preimages(diff // n):
                        c = lr_coefficient(lam, mu, nu)
                        if c:
                            red = rim_hook_reduce(nu, k, n)
                            assert red is not None and red[0] == self.box
                            total += red[2] * c
                    mat[i][j] = mat[j][i] = total
            self._pairing = mat
        return self._pairing

    def pairing_inverse(self):
        """Exact inverse of the pairing; integer because the determinant is a unit."""
        if self._pairing_inv is None:
            inv = _invert_fraction_matrix(self.pairing())
            out = []
            for row in inv:
                r = []
                for x in row:
                    if x.denominator != 1:
                        raise ArithmeticError("pairing inverse is not integral")
                    r.append(int(x))
                out.append(r)
            self._pairing_inv = out
        return self._pairing_inv

    def handle_element(self):
        """Sum of eta^(ij) sigma_i sigma_j; one factor per genus in the trace."""
        if self._handle is None:
            inv = self.pairing_inverse()
            out = [0] * self.dim
            for i in range(self.dim):
                for j in range(self.dim):
                    c = inv[i][j]
                    if c:
                        pv = self.product_vector(i, j)
                        for t, p in enumerate(pv):
                            if p:
                                out[t] += c * p
            self._handle = out
        return self._handle

    def correlator(self, classes, genus):
        """Genus-g correlator of the given box classes, as an exact Fraction."""
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        v = [0] * self.dim
        v[self.index[()]] = 1
        for parts in classes:
            v = self.multiply_class(v, self.class_index(parts))
        if genus:
            h = self.handle_element()
            for _ in range(genus):
                v = self.multiply(v, h)
        return Fraction(self.counit(v))


def _invert_fraction_matrix(mat):
    size = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
         for i, row in enumerate(mat)]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("pairing matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        lead = a[col][col]
        a[col] = [x / lead for x in a[col]]
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size:] for row in a]


def correlator_genus_g(classes, genus, k, n):
    return fusion_algebra(k, n).correlator(classes, genus)


# ---------------------------------------------------------------------------
# spectral route

def _spectrum_points(k, n):
    """Root tuples for the characters: k-subsets of the n-th roots of (-1)^(k-1).

    For even k the points live among the 2n-th roots of unity (odd powers),
    so the arithmetic runs in Q(zeta_2n); for odd k plain n-th roots suffice.
    """
    if k % 2:
        order = n
        exps = list(range(n))
    else:
        order = 2 * n
        exps = [2 * j + 1 for j in range(n)]
    pts = []
    for sub in combinations(range(n), k):
        pts.append([zeta(order, exps[j]) for j in sub])
    return order, pts


def _schur_value(lam, values, k, order):
    """s_lam at the given roots via the dual Jacobi-Trudi determinant."""
    lam = Partition(lam)
    conj = lam.conjugate()
    size = len(conj)
    if size == 0:
        return CyclotomicNumber(order, [1])
    ents = {}

    def e_at(t):
        if t < 0 or t > k:
            return CyclotomicNumber(order, [])
        if t not in ents:
            v = elementary_symmetric(t, values)
            if isinstance(v, Fraction):
                v = CyclotomicNumber(order, [v])
            ents[t] = v
        return ents[t]

    mat = [[e_at(conj[i] - i + j) for j in range(size)] for i in range(size)]
    return _det(mat, order)


def _det(mat, order):
    size = len(mat)
    if size == 1:
        return mat[0][0]
    total = CyclotomicNumber(order, [])
    sign = 1
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        total = total + mat[0][j] * _det(minor, order) * sign
        sign = -sign
    return total


def correlator_via_spectrum(classes, genus, k, n):
    """The same trace through characters and idempotent counits.

    Solves the character matrix exactly for the idempotent coordinates;
    intended for small n (the stability tests use n <= 5).
    """
    alg = fusion_algebra(k, n)
    order, pts = _spectrum_points(k, n)
    chars = [
        [_schur_value(p, vals, k, order) for p in alg.basis] for vals in pts
    ]
    idem = _invert_cyclotomic_matrix(chars, order)
    total = CyclotomicNumber(order, [])
    one = CyclotomicNumber(order, [1])
    for t in range(len(pts)):
        val = one
        for parts in classes:
            val = val * chars[t][alg.class_index(parts)]
        c_t = idem[alg.box_index][t]
        val = val * c_t ** (1 - genus)
        total = total + val
    return total.to_rational()


def _invert_cyclotomic_matrix(mat, order):
    size = len(mat)
    zero = CyclotomicNumber(order, [])
    one = CyclotomicNumber(order, [1])
    a = [list(row) + [one if i == j else zero for j in range(size)]
         for i, row in enumerate(mat)]
    for col in range(size):
        piv = next((r for r in range(col, size) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ArithmeticError("character matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        lead = a[col][col].inverse()
        a[col] = [x * lead for x in a[col]]
        for r in range(size):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size:] for row in a]


# ---------------------------------------------------------------------------
# engine comparison

def classes_for_query(query):
    """Schubert classes realizing the query's monomial under its convention."""
    out = []
    for a in query.monomial:
        j = query.k - a + 1 if query.convention == "paper" else a
        out.append((1,) * j)
    return out


def oracle_value(query):
    if query.d != 0:
        raise ValueError("bundle degree must be 0 here; route through degree_reduce")
    _require_admissible(query)
    return correlator_genus_g(classes_for_query(query), query.g, query.k, query.n)


def oracle_compare(query):
    """True when the fusion trace reproduces the root-of-unity value."""
    return oracle_value(query) == vi_invariant(query).value
