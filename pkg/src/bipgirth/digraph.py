"""Core digraph representations and the distance/girth machinery.

Bipartite digraphs are stored as bit-packed out-adjacency: each A-vertex
holds an integer bitmask over B, each B-vertex a bitmask over A.  All
degree comparisons are done with exact rationals; nothing here rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import (
    EvenDistance,
    IndexOutOfRange,
    MixedSideSet,
    NullDigraph,
    SameSideEdge,
)


class Side(Enum):
    A = "A"
    B = "B"

    @property
    def complement(self) -> "Side":
        return Side.B if self is Side.A else Side.A


@dataclass(frozen=True, order=True)
class VertexRef:
    side: Side
    index: int

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"

    @staticmethod
    def parse(text: str) -> "VertexRef":
        if len(text) < 2 or text[0] not in "AB" or not text[1:].isdigit():
            raise ValueError(f"bad vertex label {text!r}")
        return VertexRef(Side(text[0]), int(text[1:]))


def A(i: int) -> VertexRef:
    return VertexRef(Side.A, i)


def B(i: int) -> VertexRef:
    return VertexRef(Side.B, i)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


@dataclass(frozen=True)
class BipartiteDigraph:
    a_size: int
    b_size: int
    a_out: tuple[int, ...]  # per A-vertex, bitmask over B
    b_out: tuple[int, ...]  # per B-vertex, bitmask over A

    def __post_init__(self):
        assert len(self.a_out) == self.a_size and len(self.b_out) == self.b_size

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.a_out) + sum(m.bit_count() for m in self.b_out)

    def out_mask(self, v: VertexRef) -> int:
        return self.a_out[v.index] if v.side is Side.A else self.b_out[v.index]

    def out_degree(self, v: VertexRef) -> int:
        return self.out_mask(v).bit_count()

    def has_edge(self, u: VertexRef, v: VertexRef) -> bool:
        if u.side is v.side:
            return False
        return bool(self.out_mask(u) >> v.index & 1)

    def edges(self) -> Iterator[tuple[VertexRef, VertexRef]]:
        for i, m in enumerate(self.a_out):
            for j in _bits(m):
                yield (A(i), B(j))
        for j, m in enumerate(self.b_out):
            for i in _bits(m):
                yield (B(j), A(i))

    def neighbours(self, v: VertexRef) -> frozenset[VertexRef]:
        opp = v.side.complement
        return frozenset(VertexRef(opp, i) for i in _bits(self.out_mask(v)))

    @cached_property
    def a_in(self) -> tuple[int, ...]:
        """Per A-vertex, bitmask of B-vertices with an edge into it."""
        return _transpose(self.b_out, self.a_size, self.b_size)

    @cached_property
    def b_in(self) -> tuple[int, ...]:
        return _transpose(self.a_out, self.b_size, self.a_size)

    def reverse(self) -> "BipartiteDigraph":
        return BipartiteDigraph(self.a_size, self.b_size, self.a_in, self.b_in)


@dataclass(frozen=True)
class GeneralDigraph:
    n: int
    out: tuple[int, ...]  # per vertex, bitmask over all vertices

    def __post_init__(self):
        assert len(self.out) == self.n
        for i, m in enumerate(self.out):
            if m >> i & 1:
                raise ValueError(f"loop at vertex {i}")

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, m in enumerate(self.out):
            for j in _bits(m):
                yield (i, j)

    def reverse(self) -> "GeneralDigraph":
        return GeneralDigraph(self.n, _transpose(self.out, self.n, self.n))


AnyDigraph = Union[BipartiteDigraph, GeneralDigraph]


def _transpose(rows: tuple[int, ...], n_cols_out: int, n_rows: int) -> tuple[int, ...]:
    cols = [0] * n_cols_out
    for r, m in enumerate(rows):
        bit = 1 << r
        for c in _bits(m):
            cols[c] |= bit
    return tuple(cols)


def from_edges(a_size: int, b_size: int,
               edges: Iterable[tuple[VertexRef, VertexRef]]) -> BipartiteDigraph:
    """Build a bipartite digraph from an explicit edge list (deduplicated)."""
    if a_size < 1 or b_size < 1:
        raise NullDigraph(f"need both sides nonempty, got {a_size}x{b_size}")
    a_out = [0] * a_size
    b_out = [0] * b_size
    for u, v in edges:
        if u.side is v.side:
            raise SameSideEdge(f"{u} -> {v}")
        for w in (u, v):
            limit = a_size if w.side is Side.A else b_size
            if not 0 <= w.index < limit:
                raise IndexOutOfRange(f"{w} out of range for side size {limit}")
        if u.side is Side.A:
            a_out[u.index] |= 1 << v.index
        else:
            b_out[u.index] |= 1 << v.index
    return BipartiteDigraph(a_size, b_size, tuple(a_out), tuple(b_out))


def general_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> GeneralDigraph:
    out = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"edge ({i},{j}) out of range for n={n}")
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        out[i] |= 1 << j
    return GeneralDigraph(n, tuple(out))


# ---------------------------------------------------------------------------
# Girth
# ---------------------------------------------------------------------------

class Girth(NamedTuple):
    length: int
    cycle: tuple  # vertex sequence (VertexRef or int), length == cycle length


def _unified(g: AnyDigraph) -> tuple[int, list[int]]:
    """A single 0..n-1 numbering with bitmask adjacency (A first for bipartite)."""
    if isinstance(g, GeneralDigraph):
        return g.n, list(g.out)
    a = g.a_size
    adj = [m << a for m in g.a_out]
    adj.extend(g.b_out)
    return a + g.b_size, adj


def _label(g: AnyDigraph, v: int):
    if isinstance(g, GeneralDigraph):
        return v
    return A(v) if v < g.a_size else B(v - g.a_size)


def shortest_cycle_length(g: AnyDigraph, upper: Optional[int] = None) -> Optional[int]:
    """Length of the shortest directed cycle, or None if acyclic.

    If `upper` is given, only cycles of length <= upper are looked for.
    Per-start BFS with bit-parallel frontier expansion; starts are taken in
    descending out-degree order so the cutoff tightens early.
    """
    n, adj = _unified(g)
    best: Optional[int] = None
    cap0 = upper if upper is not None else n
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())
    for v in order:
        cap = (best - 1) if best is not None else cap0
        vbit = 1 << v
        frontier = adj[v]
        visited = vbit | frontier
        depth = 1
        while frontier and depth < cap:
            nxt = 0
            m = frontier
            while m:
                lsb = m & -m
                nxt |= adj[lsb.bit_length() - 1]
                m ^= lsb
            depth += 1
            if nxt & vbit:
                best = depth
                if best == 2:
                    return 2
                break
            frontier = nxt & ~visited
            visited |= nxt
    return best


def _cycle_through(adj: list[int], v: int, length: int) -> list[int]:
    """Reconstruct one shortest cycle of the given length through v."""
    n = len(adj)
    dist = [-1] * n
    dist[v] = 0
    frontier = [v]
    d = 0
    while frontier and d < length - 1:
        d += 1
        nxt = []
        for u in frontier:
            for w in _bits(adj[u]):
                if dist[w] == -1:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    # find a closing edge u -> v with dist[u] == length-1
    closing = None
    for u in range(n):
        if dist[u] == length - 1 and adj[u] >> v & 1:
            closing = u
            break
    assert closing is not None, "witness reconstruction failed"
    path = [closing]
    cur = closing
    for d in range(length - 2, 0, -1):
        for u in range(n):
            if dist[u] == d and adj[u] >> cur & 1:
                path.append(u)
                cur = u
                break
    path.append(v)
    path.reverse()
    return path


def girth(g: AnyDigraph) -> Optional[Girth]:
    """Minimum directed cycle length with one witness cycle; None if acyclic."""
    best = shortest_cycle_length(g)
    if best is None:
        return None
    n, adj = _unified(g)
    # find a start vertex carrying a cycle of the minimum length
    for v in range(n):
        vbit = 1 << v
        frontier = adj[v]
        visited = vbit | frontier
        depth = 1
        hit = False
        while frontier and depth < best:
            nxt = 0
            m = frontier
            while m:
                lsb = m & -m
                nxt |= adj[lsb.bit_length() - 1]
                m ^= lsb
            depth += 1
            if nxt & vbit:
                hit = depth == best
                break
            frontier = nxt & ~visited
            visited |= nxt
        if hit:
            cycle = _cycle_through(adj, v, best)
            return Girth(best, tuple(_label(g, u) for u in cycle))
    raise AssertionError("girth witness not found")  # pragma: no cover


# ---------------------------------------------------------------------------
# Distance layers
# ---------------------------------------------------------------------------

class Direction(Enum):
    forward = "forward"
    backward = "backward"


@dataclass(frozen=True)
class LayerProfile:
    source: VertexRef
    direction: Direction
    layers: tuple[frozenset[VertexRef], ...]  # layers[i] = exact-distance-i set
    max_i: int

    def layer_size(self, i: int) -> int:
        return len(self.layers[i])


def forward_layers(g: BipartiteDigraph, v: VertexRef, max_i: int,
                   _direction: Direction = Direction.forward) -> LayerProfile:
    """Exact-distance layers from v by level-synchronous bitmask expansion."""
    layers: list[frozenset[VertexRef]] = [frozenset([v])]
    a_out, b_out = g.a_out, g.b_out
    seen = {Side.A: 0, Side.B: 0}
    seen[v.side] = 1 << v.index
    frontier = 1 << v.index
    side = v.side
    for _ in range(max_i):
        rows = a_out if side is Side.A else b_out
        nxt = 0
        m = frontier
        while m:
            lsb = m & -m
            nxt |= rows[lsb.bit_length() - 1]
            m ^= lsb
        side = side.complement
        nxt &= ~seen[side]
        seen[side] |= nxt
        layers.append(frozenset(VertexRef(side, i) for i in _bits(nxt)))
        frontier = nxt
    return LayerProfile(v, _direction, tuple(layers), max_i)


def backward_layers(g: BipartiteDigraph, v: VertexRef, max_i: int) -> LayerProfile:
    """Layers of vertices reaching v, i.e. forward layers of the reversal."""
    return forward_layers(g.reverse(), v, max_i, _direction=Direction.backward)


def star_union(profile: LayerProfile, i: int) -> frozenset[VertexRef]:
    """Union of the layers at 1 <= j <= i with j of the same parity as i."""
    if not 1 <= i <= profile.max_i:
        raise IndexOutOfRange(f"i={i} outside 1..{profile.max_i}")
    out: frozenset[VertexRef] = frozenset()
    for j in range(i, 0, -2):
        out |= profile.layers[j]
    return out


# ---------------------------------------------------------------------------
# Compliance
# ---------------------------------------------------------------------------

def is_compliant(g: BipartiteDigraph, alpha: Fraction, beta: Fraction) -> bool:
    """Every A-vertex out-degree >= beta*|B| and B-vertex >= alpha*|A| (non-strict)."""
    if g.a_size == 0 or g.b_size == 0:
        raise NullDigraph("compliance requires both sides nonempty")
    bb = beta * g.b_size
    aa = alpha * g.a_size
    return (all(m.bit_count() >= bb for m in g.a_out)
            and all(m.bit_count() >= aa for m in g.b_out))


def compliance_profile(g: BipartiteDigraph) -> tuple[Fraction, Fraction]:
    """Maximal (alpha, beta) the digraph complies with, as exact rationals."""
    if g.a_size == 0 or g.b_size == 0:
        raise NullDigraph("compliance requires both sides nonempty")
    min_a = min(m.bit_count() for m in g.a_out)
    min_b = min(m.bit_count() for m in g.b_out)
    return (Fraction(min_b, g.a_size), Fraction(min_a, g.b_size))


# ---------------------------------------------------------------------------
# Derived digraphs
# ---------------------------------------------------------------------------

def _expand_mask(mask: int, factor: int) -> int:
    """Each bit j becomes the block of bits j*factor .. j*factor+factor-1."""
    block = (1 << factor) - 1
    out = 0
    for j in _bits(mask):
        out |= block << (j * factor)
    return out


def blowup(g: BipartiteDigraph, n_a: int, n_b: int) -> BipartiteDigraph:
    """Replace each A-vertex by n_a copies and each B-vertex by n_b copies.

    Copies inherit all adjacencies; girth (when a cycle exists) and the
    compliance profile are preserved.
    """
    a_out = []
    for m in g.a_out:
        row = _expand_mask(m, n_b)
        a_out.extend([row] * n_a)
    b_out = []
    for m in g.b_out:
        row = _expand_mask(m, n_a)
        b_out.extend([row] * n_b)
    return BipartiteDigraph(g.a_size * n_a, g.b_size * n_b, tuple(a_out), tuple(b_out))


def _side_mask(vertices: Iterable[VertexRef]) -> tuple[Optional[Side], int]:
    side = None
    mask = 0
    for v in vertices:
        if side is None:
            side = v.side
        elif v.side is not side:
            raise MixedSideSet("vertex set straddles both sides")
        mask |= 1 << v.index
    return side, mask


def aux_square_digraph(g: BipartiteDigraph, S: Iterable[VertexRef],
                       T: Iterable[VertexRef]) -> GeneralDigraph:
    """Digraph on S with s->t whenever some w in T has s->w and w->t in g.

    S and T must each lie in one side, on opposite sides.  Vertex p of the
    result is the p-th element of S in increasing index order.  Any l-cycle
    here lifts to a closed 2l-walk in g.
    """
    s_side, s_mask = _side_mask(S)
    t_side, t_mask = _side_mask(T)
    if s_side is not None and t_side is not None and s_side is t_side:
        raise MixedSideSet("S and T must be on opposite sides")
    if s_side is None:
        return GeneralDigraph(0, ())
    order = [VertexRef(s_side, i) for i in _bits(s_mask)]
    pos = {v.index: p for p, v in enumerate(order)}
    s_rows = g.a_out if s_side is Side.A else g.b_out
    t_rows = g.b_out if s_side is Side.A else g.a_out
    out = []
    for p, v in enumerate(order):
        mids = s_rows[v.index] & t_mask
        reach = 0
        for w in _bits(mids):
            reach |= t_rows[w]
        reach &= s_mask
        row = 0
        for u in _bits(reach):
            if u != v.index:
                row |= 1 << pos[u]
        out.append(row)
    return GeneralDigraph(len(order), tuple(out))


def distance_power(g: BipartiteDigraph, d: int) -> BipartiteDigraph:
    """Keep all A->B edges; give each B-vertex an edge to every A-vertex
    within directed distance d (d odd, so targets lie in A)."""
    if d < 1:
        raise IndexOutOfRange("d must be >= 1")
    if d % 2 == 0:
        raise EvenDistance(f"d={d} must be odd")
    b_out = []
    for j in range(g.b_size):
        profile = forward_layers(g, B(j), d)
        mask = 0
        for i in range(1, d + 1, 2):
            for u in profile.layers[i]:
                mask |= 1 << u.index
        b_out.append(mask)
    return BipartiteDigraph(g.a_size, g.b_size, g.a_out, tuple(b_out))
