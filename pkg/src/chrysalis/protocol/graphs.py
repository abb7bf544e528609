"""Undirected simple graphs, racks and their node-added homeomorphs.

A rack is the base graph of three onion nodes (normalized to red) on the
default path topology.  The pen step subdivides edges and threads extra
labeled nodes along them, so the result is always a subdivision of the
rack graph; smoothing every degree-2 node undoes it.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass, field

from ..errors import TooLarge
from ..onions import (OnionColor, ParentAxis, onion_derivative, onion_roots,
                      parent_x, parent_y)
from .prng import SplitMix64

_SMOOTH_LIMIT = 12
_CLIQUE_LIMIT = 32


@dataclass
class Graph:
    """Simple undirected graph on integer node ids."""

    nodes: set[int] = field(default_factory=set)
    edges: set[tuple[int, int]] = field(default_factory=set)

    @staticmethod
    def _key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u <= v else (v, u)

    def add_node(self, v: int) -> None:
        self.nodes.add(v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("simple graph: no loops")
        self.nodes.add(u)
        self.nodes.add(v)
        self.edges.add(self._key(u, v))

    def remove_edge(self, u: int, v: int) -> None:
        self.edges.discard(self._key(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return self._key(u, v) in self.edges

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def copy(self) -> "Graph":
        return Graph(set(self.nodes), set(self.edges))

    def serialize(self) -> bytes:
        """u32 node count, u32 edge count, then sorted (u32, u32) pairs."""
        out = [struct.pack(">II", len(self.nodes), len(self.edges))]
        for v in sorted(self.nodes):
            out.append(struct.pack(">I", v))
        for u, v in sorted(self.edges):
            out.append(struct.pack(">II", u, v))
        return b"".join(out)


def smooth_degree_two(g: Graph) -> Graph:
    """Contract every degree-2 node whose removal keeps the graph simple.

    This is the canonical form under topological subdivision: two graphs are
    homeomorphic exactly when their smoothed forms are isomorphic.
    """
    out = g.copy()
    changed = True
    while changed:
        changed = False
        for v in sorted(out.nodes):
            nb = out.neighbors(v)
            if len(nb) != 2:
                continue
            a, b = nb
            if out.has_edge(a, b):
                continue
            out.remove_edge(v, a)
            out.remove_edge(v, b)
            out.nodes.discard(v)
            out.add_edge(a, b)
            changed = True
            break
    return out


def _isomorphic(g1: Graph, g2: Graph) -> bool:
    n1, n2 = sorted(g1.nodes), sorted(g2.nodes)
    if len(n1) != len(n2) or len(g1.edges) != len(g2.edges):
        return False
    deg1 = sorted(g1.degree(v) for v in n1)
    deg2 = sorted(g2.degree(v) for v in n2)
    if deg1 != deg2:
        return False

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(n1):
            return True
        v = n1[i]
        dv = g1.degree(v)
        for w in n2:
            if w in used or g2.degree(w) != dv:
                continue
            ok = True
            for u in mapping:
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


def is_homeomorphic(g1: Graph, g2: Graph) -> bool:
    """Topological equivalence: isomorphism after full degree-2 smoothing."""
    s1 = smooth_degree_two(g1)
    s2 = smooth_degree_two(g2)
    if len(s1.nodes) > _SMOOTH_LIMIT or len(s2.nodes) > _SMOOTH_LIMIT:
        raise TooLarge(f"smoothed graphs must stay within "
                       f"{_SMOOTH_LIMIT} nodes")
    return _isomorphic(s1, s2)


def max_clique(g: Graph, k: int) -> list[int] | None:
    """Exact backtracking search for a k-clique; None when absent."""
    if len(g.nodes) > _CLIQUE_LIMIT:
        raise TooLarge(f"clique search is limited to {_CLIQUE_LIMIT} nodes")
    if k <= 0:
        return []
    nodes = sorted(g.nodes, key=lambda v: -g.degree(v))

    def extend(clique: list[int], candidates: list[int]) -> list[int] | None:
        if len(clique) == k:
            return clique
        if len(clique) + len(candidates) < k:
            return None
        for i, v in enumerate(candidates):
            nxt = [w for w in candidates[i + 1:] if g.has_edge(v, w)]
            hit = extend(clique + [v], nxt)
            if hit is not None:
                return hit
        return None

    return extend([], nodes)


@dataclass(frozen=True)
class Rack:
    """Base graph: default three onions, all normalized to red."""

    onions: tuple[OnionColor, ...]
    graph: Graph
    seed: int

    def serialize(self) -> bytes:
        colors = bytes((OnionColor.GREEN, OnionColor.RED,
                        OnionColor.BLUE).index(c) for c in self.onions)
        return (struct.pack(">Q", self.seed & ((1 << 64) - 1))
                + struct.pack(">B", len(colors)) + colors
                + self.graph.serialize())

    def digest(self) -> bytes:
        return hashlib.sha256(b"chrysalis-rack" + self.serialize()).digest()


def _normalize_to_red(color: OnionColor) -> OnionColor:
    d = onion_derivative(color)
    return d if isinstance(d, OnionColor) else OnionColor.RED


def rack_default(seed: int) -> Rack:
    """Default rack: green/red/blue onions normalized to red, path topology
    (the middle node shares an edge with each end)."""
    base = (OnionColor.GREEN, OnionColor.RED, OnionColor.BLUE)
    onions = tuple(_normalize_to_red(c) for c in base)
    g = Graph()
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    return Rack(onions, g, seed & ((1 << 64) - 1))


@dataclass(frozen=True)
class HClique:
    """Rack homeomorph with labeled inserted nodes.

    labels[node] is the onion root (original rack nodes) or a sampled
    parent-function value (pen-inserted nodes).  The witness maps each rack
    edge to its subdivision path, so the generating rack is recoverable.
    """

    graph: Graph
    labels: dict[int, complex]
    origin: bytes
    witness: dict[tuple[int, int], tuple[int, ...]]

    def serialize(self) -> bytes:
        out = [self.origin, struct.pack(">I", len(self.labels))]
        for node in sorted(self.labels):
            val = self.labels[node]
            out.append(struct.pack(">Idd", node, val.real, val.imag))
        out.append(self.graph.serialize())
        return b"".join(out)

    def digest(self) -> bytes:
        return hashlib.sha256(b"chrysalis-hclique" + self.serialize()).digest()


def _sample_label(rng: SplitMix64) -> complex:
    # fair coin: X or Y axis; argument from one period of the series
    if rng.bernoulli():
        return parent_x(rng.uniform() * 6.283185307179586)
    return parent_y(rng.uniform() * 2.0)


def pen(rack: Rack, extra_nodes: int, seed: int) -> HClique:
    """Subdivide rack edges and thread extra labeled nodes along them.

    Output is deterministic in the seed and always homeomorphic to the rack
    graph: every insertion subdivides an existing edge.
    """
    if extra_nodes < 0:
        raise ValueError("extra_nodes must be nonnegative")
    rng = SplitMix64(seed)
    g = rack.graph.copy()
    labels: dict[int, complex] = {}
    base_colors = (OnionColor.GREEN, OnionColor.RED, OnionColor.BLUE)
    for node in sorted(rack.graph.nodes):
        color = base_colors[node % 3]
        labels[node] = complex(onion_roots(color)[-1])
    next_id = max(g.nodes) + 1

    def subdivide(u: int, v: int) -> int:
        nonlocal next_id
        node = next_id
        next_id += 1
        g.remove_edge(u, v)
        g.add_edge(u, node)
        g.add_edge(node, v)
        labels[node] = _sample_label(rng)
        return node

    # one PRNG-chosen subdivision pass over the original edges
    chains: dict[tuple[int, int], list[int]] = {}
    for e in sorted(rack.graph.edges):
        chain = [e[0], e[1]]
        for _ in range(rng.randrange(3)):
            pos = rng.randrange(len(chain) - 1)
            node = subdivide(chain[pos], chain[pos + 1])
            chain.insert(pos + 1, node)
        chains[e] = chain
    # extra nodes land on uniformly chosen current edge segments
    for _ in range(extra_nodes):
        e = sorted(rack.graph.edges)[rng.randrange(len(rack.graph.edges))]
        chain = chains[e]
        pos = rng.randrange(len(chain) - 1)
        node = subdivide(chain[pos], chain[pos + 1])
        chain.insert(pos + 1, node)
    witness = {e: tuple(chain) for e, chain in chains.items()}
    return HClique(g, labels, rack.digest(), witness)
