"""Lattice-point counting in dilates of the graph polytope, polynomial
interpolation of the counting function, and volume extraction.

For bipartite graphs the polytope has 0/1 vertices, so the count is a
polynomial in the dilation factor t and n+1 samples pin it down. For
non-bipartite graphs vertices are half-integral; sampling even dilations
only (t = 2s) keeps a single polynomial, in s, and the leading
coefficient then carries an extra factor 2^n.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import MethodNotApplicable, ParameterError, SizeError
from .graphs import Graph, bipartition, connected_components, strip_isolated, _bits
from .poly import Polynomial, interpolate

MAX_FIT_N = 7


def lattice_count(g: Graph, t: int) -> int:
    """Number of integer vectors in [0,t]^n with x_i + x_j <= t per edge."""
    if t < 0:
        raise ParameterError("dilation factor must be >= 0")
    stripped, isolated = strip_isolated(g)
    total = (t + 1) ** isolated
    for comp in connected_components(stripped):
        total *= _count_connected(comp, t)
    return total


def _count_connected(g: Graph, t: int) -> int:
    # Order vertices so each one is adjacent to the placed prefix,
    # preferring many placed neighbors: maximizes pruning.
    order = []
    placed = 0
    for _ in range(g.n):
        best = max(
            (v for v in range(g.n) if not placed >> v & 1),
            key=lambda v: ((g.adj[v] & placed).bit_count(), g.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best
    earlier = [
        [order.index(u) for u in _bits(g.adj[v]) if u in order[:pos]]
        for pos, v in enumerate(order)
    ]
    last = g.n - 1
    values = [0] * g.n

    def count_from(pos: int) -> int:
        bound = t
        for j in earlier[pos]:
            bound = min(bound, t - values[j])
        if bound < 0:
            return 0
        if pos == last:
            return bound + 1
        total = 0
        for v in range(bound + 1):
            values[pos] = v
            total += count_from(pos + 1)
        return total

    return count_from(0)


@dataclass(frozen=True)
class EhrhartFit:
    n: int
    parity: str  # 'integral' or 'even-only'
    poly: Polynomial  # in t if integral, in s = t/2 if even-only


@dataclass(frozen=True)
class HStar:
    coefficients: tuple  # f_0..f_n of the numerator f(x)

    def f_at_one(self) -> int:
        return sum(self.coefficients)


def ehrhart_fit(g: Graph) -> EhrhartFit:
    """Interpolate the lattice-count polynomial through its minimal node set."""
    if g.n > MAX_FIT_N:
        raise SizeError(
            f"graph has {g.n} vertices; Ehrhart fitting is capped at {MAX_FIT_N}"
        )
    nodes = list(range(g.n + 1))
    if bipartition(g) is not None:
        values = [lattice_count(g, t) for t in nodes]
        return EhrhartFit(g.n, "integral", interpolate(nodes, values))
    values = [lattice_count(g, 2 * s) for s in nodes]
    return EhrhartFit(g.n, "even-only", interpolate(nodes, values))


def ehrhart_volume(g: Graph) -> Fraction:
    """Leading coefficient of the fit; the even-only route rescales by 2^n."""
    fit = ehrhart_fit(g)
    if g.n == 0:
        return Fraction(1)
    lead = fit.poly.coeffs[fit.n] if fit.poly.degree == fit.n else Fraction(0)
    if fit.parity == "even-only":
        return lead / 2 ** fit.n
    return lead


def hstar(g: Graph) -> HStar:
    """Numerator coefficients of the Ehrhart series, by the finite binomial
    transform f_k = sum_j (-1)^j C(n+1, j) L(k-j). Bipartite (integral
    polytope) graphs only."""
    if bipartition(g) is None:
        raise MethodNotApplicable("h* numerator requires a bipartite graph")
    if g.n > MAX_FIT_N:
        raise SizeError(
            f"graph has {g.n} vertices; h* extraction is capped at {MAX_FIT_N}"
        )
    n = g.n
    counts = [lattice_count(g, t) for t in range(n + 1)]
    coeffs = tuple(
        sum((-1) ** j * comb(n + 1, j) * counts[k - j] for j in range(k + 1))
        for k in range(n + 1)
    )
    return HStar(coeffs)


def hstar_volume(g: Graph) -> Fraction:
    """f(1)/n!, the volume as read off the h* numerator."""
    return Fraction(hstar(g).f_at_one(), factorial(g.n))
