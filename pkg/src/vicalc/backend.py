"""Kernel selection: compiled extension when built, pure Python otherwise."""

from math import comb

from . import _kernel_pure

try:
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

HAVE_COMPILED = _compiled is not None


def backend_name():
    return "compiled" if HAVE_COMPILED else "pure"


def term_bound_bits(n, k, genus, sigma_indices, count):
    """Bit length of an L1 bound on every intermediate in the subset loop."""
    bound = 1
    for j in sigma_indices:
        bound *= comb(k, j)
    if genus == 0:
        bound <<= k * (k - 1)
    elif genus >= 2:
        bound <<= k * (n - k) * (genus - 1)
    return (bound * max(count, 1)).bit_length()


def subset_power_sum(n, k, genus, sigma_indices, lo, hi, backend=None):
    """Dispatch the subset-sum loop; both implementations agree exactly."""
    sigma_indices = tuple(sorted(sigma_indices))
    if backend in (None, "auto"):
        backend = "compiled" if HAVE_COMPILED else "pure"
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel not built")
        fits = term_bound_bits(n, k, genus, sigma_indices, hi - lo) <= 62
        return _compiled.subset_power_sum(n, k, genus, sigma_indices, lo, hi, fits)
    if backend == "pure":
        return _kernel_pure.subset_power_sum(n, k, genus, sigma_indices, lo, hi)
    raise ValueError("unknown backend %r" % (backend,))
