"""Grid data model, named topologies, Prüfer trees and hop-count metrics.

Nodes are indexed ``0..v-1`` with every generator before every load, so the
generator/load block partition of the admittance matrix is a slice.  Edge
admittances are complex; an inductive line with ``k = 1`` has admittance
``-1j``.
"""

import enum
import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    AlreadyAdjacent,
    Disconnected,
    HopOutOfRange,
    InputError,
    InvalidCode,
    NotATree,
    OddRequired,
    TooFewNodes,
    Unreachable,
)


class NodeKind(enum.Enum):
    GENERATOR = "generator"
    LOAD = "load"


@dataclass(frozen=True)
class Node:
    id: int
    kind: NodeKind
    shunt: complex = 0j


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    admittance: complex


@dataclass(frozen=True)
class GridSpec:
    nodes: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.nodes:
            raise TooFewNodes("a grid needs at least one node")
        seen_load = False
        for i, node in enumerate(self.nodes):
            if node.id != i:
                raise InputError(f"node {i} has id {node.id}; ids must be 0..v-1 in order")
            if node.kind is NodeKind.LOAD:
                seen_load = True
            elif seen_load:
                raise InputError("all generators must be indexed before all loads")
        if self.nodes[0].kind is not NodeKind.GENERATOR:
            raise InputError("a grid needs at least one generator")
        pairs = set()
        v = len(self.nodes)
        for e in self.edges:
            if not (0 <= e.a < v and 0 <= e.b < v):
                raise InputError(f"edge ({e.a}, {e.b}) references a missing node")
            if e.a == e.b:
                raise InputError(f"self-loop at node {e.a}")
            key = frozenset((e.a, e.b))
            if key in pairs:
                raise InputError(f"duplicate edge ({e.a}, {e.b})")
            pairs.add(key)

    @classmethod
    def build(cls, n_generators, edges, n_loads=0, admittance=-1j,
              generator_shunt=0j, load_shunt=0j):
        """Uniform grid from an edge list of index pairs."""
        nodes = [Node(i, NodeKind.GENERATOR, complex(generator_shunt))
                 for i in range(n_generators)]
        nodes += [Node(n_generators + i, NodeKind.LOAD, complex(load_shunt))
                  for i in range(n_loads)]
        return cls(tuple(nodes), tuple(Edge(a, b, complex(admittance)) for a, b in edges))

    @property
    def v(self):
        return len(self.nodes)

    @cached_property
    def n_generators(self):
        return sum(nd.kind is NodeKind.GENERATOR for nd in self.nodes)

    @property
    def n_loads(self):
        return self.v - self.n_generators

    @cached_property
    def adjacency(self):
        adj = [set() for _ in self.nodes]
        for e in self.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        return tuple(frozenset(s) for s in adj)

    def edge_set(self):
        return frozenset(frozenset((e.a, e.b)) for e in self.edges)

    def has_edge(self, a, b):
        return b in self.adjacency[a]


def add_edge(g, a, b, admittance=None):
    """Return a copy of ``g`` with one more edge (default: first edge's admittance)."""
    if admittance is None:
        admittance = g.edges[0].admittance if g.edges else -1j
    return GridSpec(g.nodes, g.edges + (Edge(a, b, complex(admittance)),))


def with_dedicated_loads(g, admittance=-1j):
    """Attach one private load to every generator, numbered like its generator."""
    if g.n_loads:
        raise InputError("grid already has loads")
    n = g.n_generators
    nodes = g.nodes + tuple(Node(n + i, NodeKind.LOAD) for i in range(n))
    edges = g.edges + tuple(Edge(i, n + i, complex(admittance)) for i in range(n))
    return GridSpec(nodes, edges)


def _named_edges(kind, n, k):
    if kind == "star":
        return [(0, i) for i in range(1, n)]
    if kind == "path":
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "complete":
        return list(itertools.combinations(range(n), 2))
    if kind == "ring":
        k = 1
    # circulant: i joined to i+1..i+k (mod n); k <= (n-1)/2 keeps pairs distinct
    return [(i, (i + h) % n) for h in range(1, k + 1) for i in range(n)]


NAMED_KINDS = ("star", "path", "ring", "complete", "circulant")


def generate_named(kind, n, k=None, edge_admittance=-1j, shunt=0j):
    """All-generator grid of a named topology with uniform edge admittance.

    ``circulant`` needs odd ``n`` and ``1 <= k <= (n-1)/2``; it joins node
    ``i`` to every node within ``k`` hops around the ring.
    """
    if kind not in NAMED_KINDS:
        raise InputError(f"unknown topology {kind!r}; expected one of {NAMED_KINDS}")
    min_n = 3 if kind in ("ring", "circulant") else 2
    if n < min_n:
        raise TooFewNodes(f"{kind} needs n >= {min_n}, got {n}")
    if kind == "circulant":
        if n % 2 == 0:
            raise OddRequired(f"circulant grids need odd n, got {n}")
        if k is None or not 1 <= k <= (n - 1) // 2:
            raise HopOutOfRange(f"hop count k={k} outside 1..{(n - 1) // 2}")
    return GridSpec.build(n, _named_edges(kind, n, k), admittance=edge_admittance,
                          generator_shunt=shunt)


def pruefer_decode(code, n=None):
    """Edge list of the labeled tree with the given Prüfer code."""
    code = tuple(int(c) for c in code)
    if n is None:
        n = len(code) + 2
    if n < 2 or len(code) != n - 2:
        raise InvalidCode(f"code of length {len(code)} does not describe a tree on {n} nodes")
    if any(not 0 <= c < n for c in code):
        raise InvalidCode(f"code entries must lie in 0..{n - 1}")
    degree = [1] * n
    for c in code:
        degree[c] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for c in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, c))
        degree[c] -= 1
        if degree[c] == 1:
            heapq.heappush(leaves, c)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def tree_from_pruefer(code, edge_admittance=-1j, n=None):
    edges = pruefer_decode(code, n)
    return GridSpec.build(len(edges) + 1, edges, admittance=edge_admittance)


def all_pruefer_codes(n):
    return itertools.product(range(n), repeat=n - 2)


def bfs_distances(g, source):
    dist = [-1] * g.v
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_connected(g):
    return min(bfs_distances(g, 0)) >= 0


def is_tree(g):
    return len(g.edges) == g.v - 1 and is_connected(g)


def distance(g, x, y):
    d = bfs_distances(g, x)[y]
    if d < 0:
        raise Unreachable(f"no path from {x} to {y}")
    return d


def eccentricities(g):
    ecc = []
    for x in range(g.v):
        d = bfs_distances(g, x)
        if min(d) < 0:
            raise Disconnected("grid is not connected")
        ecc.append(max(d))
    return ecc


def diameter(g):
    return max(eccentricities(g))


def central_node(g):
    """Node of minimum eccentricity; ties go to the lowest index."""
    ecc = eccentricities(g)
    return ecc.index(min(ecc))


def cycle_length_of_edge(g, a, b):
    """Length of the unique cycle created by adding edge ``(a, b)`` to tree ``g``."""
    if not is_tree(g):
        raise NotATree("grid is not a tree")
    if a == b:
        raise InputError("endpoints must be distinct")
    if g.has_edge(a, b):
        raise AlreadyAdjacent(f"nodes {a} and {b} are already adjacent")
    return distance(g, a, b) + 1


def absent_edges(g):
    return [(a, b) for a, b in itertools.combinations(range(g.v), 2) if not g.has_edge(a, b)]


def disjoint_union(g1, g2):
    """Place ``g2`` after ``g1``; both must be loadless."""
    if g1.n_loads or g2.n_loads:
        raise InputError("disjoint_union expects all-generator grids")
    off = g1.v
    nodes = g1.nodes + tuple(Node(nd.id + off, nd.kind, nd.shunt) for nd in g2.nodes)
    edges = g1.edges + tuple(Edge(e.a + off, e.b + off, e.admittance) for e in g2.edges)
    return GridSpec(nodes, edges)


def two_generators_one_load(k12, k13, k23, ka=0.0, kb=0.0):
    """Generators 0, 1 and load 2 joined by inductive lines of strength ``k_rs``.

    Line ``r-s`` has admittance ``-k_rs j`` and is omitted when ``k_rs == 0``;
    ``ka``, ``kb`` are the generators' shunt strengths.
    """
    nodes = (
        Node(0, NodeKind.GENERATOR, complex(0, -ka)),
        Node(1, NodeKind.GENERATOR, complex(0, -kb)),
        Node(2, NodeKind.LOAD),
    )
    lines = (((0, 1), k12), ((0, 2), k13), ((1, 2), k23))
    return GridSpec(nodes, tuple(Edge(a, b, complex(0, -k)) for (a, b), k in lines if k != 0))
