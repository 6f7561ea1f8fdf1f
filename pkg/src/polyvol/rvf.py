"""Exact volume of any graph polytope by the recursive vertex-deletion
formula, memoized over vertex-subset bitmasks.

For a graph without isolated vertices, the volume equals the average of
the facet volumes vol(G - i) over all n vertices, divided by 2. Isolated
vertices are stripped first (a free coordinate integrates to 1) and
connected components multiply, which keeps the 2^n state space small in
practice.
"""

import os
from fractions import Fraction

from .errors import SizeError
from .graphs import Graph, component_masks, _bits

HARD_MAX_N = 26


def size_limit() -> int:
    """Vertex-count ceiling; POLYVOL_MAX_N may lower (never raise) it."""
    limit = HARD_MAX_N
    env = os.environ.get("POLYVOL_MAX_N")
    if env is not None and env.isdigit():
        limit = min(limit, int(env))
    return limit


def rvf_volume(g: Graph) -> Fraction:
    """Exact vol(P(G)) for an arbitrary simple graph."""
    limit = size_limit()
    if g.n > limit:
        raise SizeError(
            f"graph has {g.n} vertices; the recursive method is capped at {limit}"
        )
    adj = g.adj
    memo = {}

    def vol(mask: int) -> Fraction:
        for i in _bits(mask):
            if not adj[i] & mask:
                mask &= ~(1 << i)
        if not mask:
            return Fraction(1)
        result = Fraction(1)
        for comp in component_masks(adj, mask):
            result *= component_vol(comp)
        return result

    def component_vol(mask: int) -> Fraction:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        k = mask.bit_count()
        total = Fraction(0)
        for i in _bits(mask):
            total += vol(mask & ~(1 << i))
        result = total / (2 * k)
        memo[mask] = result
        return result

    return vol((1 << g.n) - 1)
