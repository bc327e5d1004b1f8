"""Generators for the explicit digraph families used throughout.

The circulant family on n = k(s+t-1)+1 indices is the source of all
maximal bad compliance pairs; the layered cycle is the extremal example
showing the out-degree threshold n/(k+1) cannot be lowered.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .digraph import (
    A,
    B,
    BipartiteDigraph,
    GeneralDigraph,
    Side,
    VertexRef,
)
from .errors import InfeasibleDegree, NullDigraph


@dataclass(frozen=True)
class CirculantParams:
    k: int
    s: int
    t: int

    def __post_init__(self):
        if self.k < 1 or self.s < 1 or self.t < 1:
            raise ValueError("k, s, t must all be positive")

    @property
    def n(self) -> int:
        return self.k * (self.s + self.t - 1) + 1


@dataclass(frozen=True)
class OffsetSpec:
    n: int
    out_offsets: frozenset[int]  # a_i -> b_{i+x} for x in out_offsets
    in_offsets: frozenset[int]   # b_i -> a_{i+y} for y in in_offsets

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "out_offsets",
                           frozenset(x % self.n for x in self.out_offsets))
        object.__setattr__(self, "in_offsets",
                           frozenset(y % self.n for y in self.in_offsets))


def layered_cycle(k: int, t: int) -> BipartiteDigraph:
    """2k+2 classes of size t in a directed cycle of complete joins.

    Classes alternate between the sides; every vertex has out-degree t and
    the girth is exactly 2k+2.
    """
    if k < 1 or t < 1:
        raise ValueError("k and t must be positive")
    classes = 2 * k + 2
    side_size = (k + 1) * t
    # class c (0-based) -> side A if c even, B if c odd; block c//2 of that side
    def class_mask(c: int) -> int:
        base = (c // 2) * t
        return ((1 << t) - 1) << base

    a_out = [0] * side_size
    b_out = [0] * side_size
    for c in range(classes):
        target = class_mask((c + 1) % classes)
        base = (c // 2) * t
        rows = a_out if c % 2 == 0 else b_out
        for v in range(base, base + t):
            rows[v] = target
    return BipartiteDigraph(side_size, side_size, tuple(a_out), tuple(b_out))


def circulant(k: int, s: int, t: int) -> BipartiteDigraph:
    """The interval-offset family: a_i -> b_i..b_{i+s-1}, b_j -> a_{j+1}..a_{j+t},
    subscripts mod n = k(s+t-1)+1.  Complies with exactly (t/n, s/n)."""
    n = CirculantParams(k, s, t).n
    a_out = []
    for i in range(n):
        m = 0
        for off in range(s):
            m |= 1 << ((i + off) % n)
        a_out.append(m)
    b_out = []
    for j in range(n):
        m = 0
        for off in range(1, t + 1):
            m |= 1 << ((j + off) % n)
        b_out.append(m)
    return BipartiteDigraph(n, n, tuple(a_out), tuple(b_out))


def offset_circulant(spec: OffsetSpec) -> BipartiteDigraph:
    """Vertex-transitive rule a_i -> b_{i+x}, b_i -> a_{i+y}; regular on both
    sides, so in-degree equals out-degree per side."""
    n = spec.n
    a_row = 0
    for x in spec.out_offsets:
        a_row |= 1 << x
    b_row = 0
    for y in spec.in_offsets:
        b_row |= 1 << y
    full = (1 << n) - 1

    def rot(mask: int, i: int) -> int:
        return ((mask << i) | (mask >> (n - i))) & full if i else mask

    a_out = tuple(rot(a_row, i) for i in range(n))
    b_out = tuple(rot(b_row, i) for i in range(n))
    return BipartiteDigraph(n, n, a_out, b_out)


def ch_reduce(h: GeneralDigraph) -> BipartiteDigraph:
    """Split each vertex h_i into a_i -> b_i, and lift each edge h_i -> h_j
    to b_i -> a_j.  Girth exactly doubles (absent stays absent)."""
    if h.n < 1:
        raise NullDigraph("cannot reduce the null digraph")
    a_out = tuple(1 << i for i in range(h.n))
    return BipartiteDigraph(h.n, h.n, a_out, h.out)


def required_degrees(n_a: int, n_b: int, alpha: Fraction, beta: Fraction) -> tuple[int, int]:
    """Minimum integer out-degrees realising compliance: (A-side, B-side)."""
    d_a = math.ceil(beta * n_b)
    d_b = math.ceil(alpha * n_a)
    if d_a > n_b or d_b > n_a:
        raise InfeasibleDegree(f"degrees ({d_a},{d_b}) exceed sizes ({n_b},{n_a})")
    return d_a, d_b


def random_compliant(n_a: int, n_b: int, alpha: Fraction, beta: Fraction,
                     seed: int) -> BipartiteDigraph:
    """Seeded random digraph with out-degrees exactly ceil(beta|B|), ceil(alpha|A|)."""
    d_a, d_b = required_degrees(n_a, n_b, alpha, beta)
    rng = random.Random(seed)
    a_out = []
    for _ in range(n_a):
        m = 0
        for j in rng.sample(range(n_b), d_a):
            m |= 1 << j
        a_out.append(m)
    b_out = []
    for _ in range(n_b):
        m = 0
        for i in rng.sample(range(n_a), d_b):
            m |= 1 << i
        b_out.append(m)
    return BipartiteDigraph(n_a, n_b, tuple(a_out), tuple(b_out))
