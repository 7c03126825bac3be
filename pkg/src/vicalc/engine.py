"""Root-of-unity evaluation of Grassmannian Gromov-Witten invariants.

A query fixes Gr(k, n), a genus, a quotient degree e, an optional bundle
degree d, and a monomial of insertion exponents.  The value is

    sign * n^(k(g-1)) * sum over k-subsets S of the n-th roots of unity of
        Delta_S / (prod(rho) * prod_{i != j}(rho_i - rho_j))^(g-1)

where Delta_S multiplies sigma_{k-a+1}(S) (convention "paper") or
sigma_a(S) (convention "dual") over the monomial entries a.  The two
conventions are the same family of invariants under a <-> k-a+1; both
are kept because the source text labels weights both ways.

The sign is (-1)^(e(k-1)).  With the denominator written as the product
over ordered pairs, the frequently quoted extra factor
(-1)^((g-1)k(k-1)/2) is exactly the conversion to the squared
unordered-pair form and must not be applied twice; calibration against
the classical Schubert value <sigma_1^4> = 2 on Gr(2,4) and against the
fusion-algebra oracle pins the version used here.

The subset sum itself runs on integer vectors in Z[x]/(x^n - 1) via the
identity prod(rho) * prod_{i != j}(rho_i - rho_j) = n^k / R_S with
R_S = prod_{rho in S, tau not in S}(rho - tau), so for genus >= 1 the
n-power prefactor cancels and the total is an algebraic integer; only
genus 0 divides by n^k at the end.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import backend
from .cyclotomic import CyclotomicNumber, from_power_vector, zeta
from .symfunc import elementary_symmetric

CONVENTIONS = ("paper", "dual")


class InadmissibleQueryError(ValueError):
    """Raised when the weighted degree of the monomial misses the target."""


@dataclass(frozen=True)
class InvariantQuery:
    n: int
    k: int
    g: int
    e: int
    d: int = 0
    monomial: tuple = ()
    convention: str = "paper"

    def __post_init__(self):
        object.__setattr__(self, "monomial", tuple(int(a) for a in self.monomial))
        if self.n < 2 or not 0 < self.k < self.n:
            raise ValueError("need 0 < k < n with n >= 2, got k=%d n=%d" % (self.k, self.n))
        if self.g < 0:
            raise ValueError("genus must be nonnegative")
        for a in self.monomial:
            if not 1 <= a <= self.k:
                raise ValueError("monomial exponent %d outside [1, %d]" % (a, self.k))
        if self.convention not in CONVENTIONS:
            raise ValueError("unknown convention %r" % (self.convention,))


@dataclass(frozen=True)
class InvariantResult:
    value: Fraction
    terms_summed: int
    integral: bool


def monomial_weight(query):
    """Weighted degree of the insertion monomial under the active convention."""
    if query.convention == "paper":
        return sum(query.k - a + 1 for a in query.monomial)
    return sum(query.monomial)


def required_weight(query):
    """Degree-condition target: -e*n + k(n-k)(1-g)."""
    return -query.e * query.n + query.k * (query.n - query.k) * (1 - query.g)


def check_admissible(query):
    return monomial_weight(query) == required_weight(query)


def _require_admissible(query):
    have = monomial_weight(query)
    want = required_weight(query)
    if have != want:
        raise InadmissibleQueryError(
            "degree condition violated: monomial weighted degree %d != "
            "-e*n + k(n-k)(1-g) = %d" % (have, want)
        )


def sign_factor(e, k):
    """(-1)^(e(k-1)); the ordered-pair denominator already carries the
    (-1)^((g-1)k(k-1)/2) that the squared unordered form would need."""
    return -1 if (e * (k - 1)) % 2 else 1


def sigma_indices(query):
    """Elementary-symmetric subscripts realizing the monomial's insertions."""
    if query.convention == "paper":
        return tuple(sorted(query.k - a + 1 for a in query.monomial))
    return tuple(sorted(query.monomial))


def twist_reduce(query, line_degree):
    """Tensoring by a line bundle of the given degree: d += n*dL, e += k*dL."""
    return InvariantQuery(
        n=query.n,
        k=query.k,
        g=query.g,
        e=query.e + query.k * line_degree,
        d=query.d + query.n * line_degree,
        monomial=query.monomial,
        convention=query.convention,
    )


def degree_reduce(query):
    """Rewrite bundle degree d = a*n - b, 0 <= b < n, into a d=0 query.

    The factor lost with each unit of b is one top-exponent insertion, so
    the reduced monomial gains b copies of k and e drops by a*k.
    """
    if query.d == 0:
        return [query]
    a = -(-query.d // query.n)
    b = a * query.n - query.d
    return [
        InvariantQuery(
            n=query.n,
            k=query.k,
            g=query.g,
            e=query.e - a * query.k,
            d=0,
            monomial=query.monomial + (query.k,) * b,
            convention=query.convention,
        )
    ]


def resolve_workers(requested, total_terms):
    """VI_WORKERS beats the explicit request; 0 asks for an automatic choice."""
    env = os.environ.get("VI_WORKERS")
    if env:
        return max(1, int(env))
    if requested:
        return max(1, requested)
    if total_terms >= 50000 and (os.cpu_count() or 1) > 1:
        return min(4, os.cpu_count())
    return 1


def _chunk(args):
    n, k, genus, sig, lo, hi, kernel = args
    return backend.subset_power_sum(n, k, genus, sig, lo, hi, backend=kernel)


def _summed_vector(n, k, genus, sig, workers, kernel):
    total = comb(n, k)
    workers = min(workers, total)
    if workers <= 1:
        return backend.subset_power_sum(n, k, genus, sig, 0, total, backend=kernel)
    bounds = [total * w // workers for w in range(workers + 1)]
    jobs = [
        (n, k, genus, sig, bounds[w], bounds[w + 1], kernel)
        for w in range(workers)
        if bounds[w] < bounds[w + 1]
    ]
    import multiprocessing

    with multiprocessing.get_context("fork").Pool(len(jobs)) as pool:
        parts = pool.map(_chunk, jobs)
    acc = [0] * n
    for part in parts:
        for t in range(n):
            acc[t] += part[t]
    return acc


def vi_invariant(query, workers=0, kernel=None):
    """Exact invariant for a d=0 query; see the module docstring for the sum."""
    if query.d != 0:
        raise ValueError("bundle degree must be 0 here; route through degree_reduce")
    _require_admissible(query)
    n, k, genus = query.n, query.k, query.g
    sig = sigma_indices(query)
    total = comb(n, k)
    nworkers = resolve_workers(workers, total)
    vec = _summed_vector(n, k, genus, sig, nworkers, kernel)
    try:
        rat = from_power_vector(n, vec).to_rational()
    except ValueError as ex:
        raise ValueError("convention miscalibration: %s" % ex)
    value = Fraction(sign_factor(query.e, k)) * rat
    if genus == 0:
        value /= Fraction(n) ** k
    return InvariantResult(value=value, terms_summed=total, integral=value.denominator == 1)


def evaluate(query, workers=0, kernel=None):
    """Evaluate any query, routing nonzero bundle degree through degree_reduce."""
    return vi_invariant(degree_reduce(query)[0], workers=workers, kernel=kernel)


# ---------------------------------------------------------------------------
# literal per-subset reference path (slow, used by tests and the benchmark)

def reference_term(n, k, genus, sigma_idx, exponents):
    """Delta / D^(g-1) for one tuple of root exponents, by field arithmetic."""
    roots = [zeta(n, c) for c in exponents]
    delta = CyclotomicNumber(n, [1])
    for j in sigma_idx:
        delta = delta * elementary_symmetric(j, roots)
    d = CyclotomicNumber(n, [1])
    for rho in roots:
        d = d * rho
    for i in range(k):
        for j in range(k):
            if i != j:
                d = d * (roots[i] - roots[j])
    return delta * d ** (1 - genus)


def vi_reference(query):
    """Literal subset sum with cyclotomic division; same value as vi_invariant."""
    if query.d != 0:
        raise ValueError("bundle degree must be 0 here; route through degree_reduce")
    _require_admissible(query)
    from itertools import combinations

    n, k, genus = query.n, query.k, query.g
    sig = sigma_indices(query)
    total = CyclotomicNumber(n, [])
    count = 0
    for subset in combinations(range(n), k):
        total = total + reference_term(n, k, genus, sig, subset)
        count += 1
    alpha = k * (genus - 1)
    value = Fraction(sign_factor(query.e, k)) * Fraction(query.n) ** alpha * total.to_rational()
    return InvariantResult(value=value, terms_summed=count, integral=value.denominator == 1)


# ---------------------------------------------------------------------------
# maximal-subbundle counts

def count_maximal(n, d, k, genus, convention="dual"):
    """Count of maximal subbundles via the reduced root-of-unity sum.

    Writes d = a*n - b with 0 <= b < n and evaluates

        sign * n^(k(g-1)) * sum_S Delta_S^(b-g+1) / prod_{i!=j}(rho_i-rho_j)^(g-1)

    with Delta = sigma_k(S) under "dual" (the reading consistent with the
    exponent b-g+1 absorbing the root-product factor) or sigma_1(S) under
    "paper".  The sign exponent (k-1)(bk - (g-1)k^2/n) must be an integer;
    otherwise this raises rather than guessing a parity.
    """
    if n < 2 or not 0 < k < n:
        raise ValueError("need 0 < k < n with n >= 2, got k=%d n=%d" % (k, n))
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if convention not in CONVENTIONS:
        raise ValueError("unknown convention %r" % (convention,))
    a = -(-d // n)
    b = a * n - d
    expo_num = (k - 1) * (b * k * n - (genus - 1) * k * k)
    if expo_num % n:
        raise ValueError(
            "non-integral sign exponent (k-1)(bk - (g-1)k^2/n) for n=%d k=%d g=%d b=%d"
            % (n, k, genus, b)
        )
    sign = -1 if (expo_num // n) % 2 else 1
    from itertools import combinations

    total = CyclotomicNumber(n, [])
    count = 0
    delta_exp = b - genus + 1
    for subset in combinations(range(n), k):
        roots = [zeta(n, c) for c in subset]
        if convention == "dual":
            delta = elementary_symmetric(k, roots)
        else:
            delta = elementary_symmetric(1, roots)
        if isinstance(delta, Fraction):
            delta = CyclotomicNumber(n, [delta])
        if delta.is_zero() and delta_exp < 0:
            raise ZeroDivisionError(
                "zero insertion class raised to a negative power under "
                "convention %r" % (convention,)
            )
        term = delta ** delta_exp
        pairs = CyclotomicNumber(n, [1])
        for i in range(k):
            for j in range(k):
                if i != j:
                    pairs = pairs * (roots[i] - roots[j])
        term = term * pairs ** (1 - genus)
        total = total + term
        count += 1
    alpha = k * (genus - 1)
    value = Fraction(sign) * Fraction(n) ** alpha * total.to_rational()
    return InvariantResult(value=value, terms_summed=count, integral=value.denominator == 1)
