"""Seeded Monte Carlo volume estimation: the method-independent
statistical cross-check.

Points are drawn from numpy's default PCG64 stream seeded by the caller,
consumed in fixed-size chunks, so a given (graph, samples, seed) triple
reproduces bit-for-bit.
"""

import math

import numpy as np

from .errors import ParameterError
from .graphs import Graph

_CHUNK = 1 << 18


def mc_volume(g: Graph, samples: int, seed: int):
    """Hit-rate estimate of vol(P(G)) and its binomial standard error."""
    if samples < 1:
        raise ParameterError("need at least one sample")
    rng = np.random.default_rng(seed)
    edges = g.edges()
    hits = 0
    remaining = samples
    while remaining:
        m = min(_CHUNK, remaining)
        pts = rng.random((m, g.n))
        ok = np.ones(m, dtype=bool)
        for i, j in edges:
            ok &= pts[:, i] + pts[:, j] <= 1.0
        hits += int(ok.sum())
        remaining -= m
    p = hits / samples
    stderr = math.sqrt(p * (1.0 - p) / samples)
    return p, stderr
