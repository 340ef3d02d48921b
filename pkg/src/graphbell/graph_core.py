"""Immutable simple graphs, family constructors, and the rewrite operations.

Vertices are always 0..n-1.  Every operation returns a new graph; merge and
vertex removal renumber by shifting the indices above the vacated slot down
by one, so indices stay contiguous and the result is deterministic.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from enum import Enum
from random import Random

from .errors import DomainError, ResourceError, UsageError


def _bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _squeeze_bit(mask: int, i: int) -> int:
    """Drop bit position i from ``mask``, shifting higher bits down by one."""
    return (mask & ((1 << i) - 1)) | ((mask >> (i + 1)) << i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected labeled graph: order plus one adjacency bitmask per vertex.

    Values are hashable and compare by labeled equality (same order, same
    edge set).  Constructors are responsible for keeping the adjacency
    symmetric and irreflexive; use :meth:`from_edges` for validated input.
    """

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges=()) -> "Graph":
        if n < 0:
            raise DomainError("graph order must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise UsageError(f"self-loop at vertex {u} is not allowed")
            if masks[u] >> v & 1:
                raise UsageError(f"duplicate edge ({u},{v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return Graph(n, tuple(masks))

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            upper = self.adj[u] >> (u + 1)
            out.extend((u, u + 1 + w) for w in _bits(upper))
        return out

    def degree(self, v: int) -> int:
        self._require_vertex(v)
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((m.bit_count() for m in self.adj), reverse=True))

    def neighbors(self, v: int) -> list[int]:
        self._require_vertex(v)
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._require_vertex(u)
        self._require_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def _require_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise UsageError(f"vertex {v} out of range for order {self.n}")

    def delete_edge(self, u: int, v: int) -> "Graph":
        """Remove the edge {u, v}; the vertices must currently be adjacent."""
        if u == v or not self.has_edge(u, v):
            raise UsageError(f"delete_edge needs an existing edge, got ({u},{v})")
        masks = list(self.adj)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph(self.n, tuple(masks))

    def add_edge(self, u: int, v: int) -> "Graph":
        """Insert the edge {u, v}; the vertices must be distinct and non-adjacent."""
        self._require_vertex(u)
        self._require_vertex(v)
        if u == v:
            raise UsageError("add_edge needs two distinct vertices")
        if self.has_edge(u, v):
            raise UsageError(f"edge ({u},{v}) already present")
        masks = list(self.adj)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph(self.n, tuple(masks))

    def merge(self, u: int, v: int) -> "Graph":
        """Identify u and v into a single vertex kept at min(u, v).

        The merged vertex inherits the union of both neighborhoods; a u-v
        edge disappears and parallel edges collapse, so the result stays
        simple.  Indices above max(u, v) shift down by one.
        """
        self._require_vertex(u)
        self._require_vertex(v)
        if u == v:
            raise UsageError("merge needs two distinct vertices")
        keep, drop = min(u, v), max(u, v)
        union = (self.adj[u] | self.adj[v]) & ~(1 << u) & ~(1 << v)
        masks = []
        for w in range(self.n):
            if w == drop:
                continue
            if w == keep:
                mk = union
            else:
                mk = self.adj[w]
                if mk >> drop & 1:
                    mk = (mk & ~(1 << drop)) | (1 << keep)
            masks.append(_squeeze_bit(mk, drop))
        return Graph(self.n - 1, tuple(masks))

    def remove_vertex(self, v: int) -> "Graph":
        """Delete v and its incident edges; higher indices shift down by one."""
        self._require_vertex(v)
        masks = [
            _squeeze_bit(self.adj[w] & ~(1 << v), v)
            for w in range(self.n)
            if w != v
        ]
        return Graph(self.n - 1, tuple(masks))


class FamilyKind(Enum):
    EMPTY = "empty"
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    CATERPILLAR = "caterpillar"
    HNR = "h"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of a named graph family, plus ``p`` appended isolated vertices.

    ``r`` is the tail length and only meaningful for ``HNR`` (a cycle of
    order n with a path of r extra vertices hung off one cycle vertex).
    """

    kind: FamilyKind
    n: int
    r: int = 0
    p: int = 0

    def __post_init__(self):
        if self.n < 0 or self.r < 0 or self.p < 0:
            raise DomainError("family parameters must be nonnegative")
        if self.kind in (FamilyKind.PATH, FamilyKind.STAR, FamilyKind.CATERPILLAR) and self.n < 1:
            raise DomainError(f"{self.kind.value} requires n >= 1")
        if self.kind in (FamilyKind.CYCLE, FamilyKind.HNR) and self.n < 3:
            raise DomainError(f"{self.kind.value} requires n >= 3")
        if self.kind is not FamilyKind.HNR and self.r != 0:
            raise DomainError("tail length r applies only to the h family")

    @property
    def order(self) -> int:
        return self.n + self.r + self.p


def build(spec: FamilySpec) -> Graph:
    """Construct the labeled graph of ``spec`` plus its isolated vertices."""
    n, r = spec.n, spec.r
    edges: list[tuple[int, int]] = []
    if spec.kind is FamilyKind.COMPLETE:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif spec.kind is FamilyKind.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.kind is FamilyKind.CYCLE:
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif spec.kind is FamilyKind.STAR:
        edges = [(0, i) for i in range(1, n)]
    elif spec.kind is FamilyKind.CATERPILLAR:
        # Spine of ceil(n/2) vertices; remaining vertices hang off the spine
        # front-to-back, at most one leg per spine vertex.
        s = (n + 1) // 2
        edges = [(i, i + 1) for i in range(s - 1)]
        edges += [(i, s + i) for i in range(n - s)]
    elif spec.kind is FamilyKind.HNR:
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        if r > 0:
            edges.append((0, n))
            edges += [(n + i, n + i + 1) for i in range(r - 1)]
    return Graph.from_edges(spec.order, edges)


class VertexKind(Enum):
    DOMINATING = "dominating"
    SIMPLICIAL = "simplicial"
    NEITHER = "neither"


def classify_vertex(g: Graph, v: int) -> tuple[VertexKind, int | None]:
    """Classify v as dominating, simplicial (with its neighbor count), or neither.

    A vertex that is both dominating and simplicial reports as dominating.
    """
    g._require_vertex(v)
    full = (1 << g.n) - 1
    if g.adj[v] == full & ~(1 << v):
        return (VertexKind.DOMINATING, None)
    if _is_simplicial(g, v):
        return (VertexKind.SIMPLICIAL, g.adj[v].bit_count())
    return (VertexKind.NEITHER, None)


def _is_simplicial(g: Graph, v: int) -> bool:
    nv = g.adj[v]
    for u in _bits(nv):
        if (nv ^ (1 << u)) & ~g.adj[u]:
            return False
    return True


@dataclass(frozen=True)
class CanonicalKey:
    """Deterministic fingerprint of a graph, shared by many isomorphic labelings.

    The payload is the full relabeled edge encoding (not a digest), so equal
    keys always denote isomorphic graphs; the converse is not guaranteed and
    nothing may rely on it.
    """

    data: bytes

    def hex(self) -> str:
        return self.data.hex()


def canonical_key(g: Graph) -> CanonicalKey:
    """Fingerprint ``g`` up to an isomorphism-or-finer equivalence.

    The labeling is chosen as the lexicographically least edge encoding over
    breadth-first relabelings started from each vertex of the minimal
    refinement class (a label-invariant candidate set), with neighbor order
    guided by iterated degree refinement.  Purely structural, no salted
    hashing, stable across processes.
    """
    n = g.n
    if n >= 1 << 16:
        raise ResourceError("canonical fingerprints support orders below 65536")
    edge_list = g.edges()
    header = struct.pack(">HI", n, len(edge_list))
    if n == 0:
        return CanonicalKey(header)
    wl = _refined_colors(g)
    degs = [m.bit_count() for m in g.adj]
    low = min(wl)
    roots = [v for v in range(n) if wl[v] == low]
    by_key = sorted(range(n), key=lambda v: (wl[v], degs[v], v))
    nbrs = [sorted(_bits(g.adj[v]), key=lambda u: (wl[u], degs[u], u)) for v in range(n)]
    best: bytes | None = None
    for root in roots:
        form = _bfs_edge_bytes(n, nbrs, by_key, edge_list, root)
        if best is None or form < best:
            best = form
    return CanonicalKey(header + best)


def _refined_colors(g: Graph) -> tuple[int, ...]:
    """Iterated neighborhood-degree refinement, normalized to dense color ids."""
    def ranked(values):
        order = {s: i for i, s in enumerate(sorted(set(values)))}
        return tuple(order[s] for s in values)

    colors = ranked(tuple(m.bit_count() for m in g.adj))
    for _ in range(g.n):
        sigs = tuple(
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v]))))
            for v in range(g.n)
        )
        nxt = ranked(sigs)
        if nxt == colors:
            break
        colors = nxt
    return colors


def _bfs_edge_bytes(n, nbrs, starts, edge_list, root) -> bytes:
    pos = [-1] * n
    seq = [root]
    pos[root] = 0
    si = 0
    qi = 0
    while len(seq) < n:
        if qi < len(seq):
            v = seq[qi]
            qi += 1
            for u in nbrs[v]:
                if pos[u] < 0:
                    pos[u] = len(seq)
                    seq.append(u)
        else:
            while pos[starts[si]] >= 0:
                si += 1
            v = starts[si]
            pos[v] = len(seq)
            seq.append(v)
    relabeled = sorted(
        (pos[a], pos[b]) if pos[a] < pos[b] else (pos[b], pos[a])
        for a, b in edge_list
    )
    return b"".join(struct.pack(">HH", a, b) for a, b in relabeled)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format: a header line ``n m`` then m lines ``u v``.

    Indices are 0-based; everything after ``#`` on a line is a comment.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise UsageError("edge list is empty; expected a header line 'n m'")
    head = rows[0].split()
    if len(head) != 2:
        raise UsageError(f"malformed header {rows[0]!r}; expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise UsageError(f"non-integer header {rows[0]!r}") from None
    if n < 0 or m < 0:
        raise UsageError("header counts must be nonnegative")
    body = rows[1:]
    if len(body) != m:
        raise UsageError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise UsageError(f"malformed edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise UsageError(f"non-integer edge line {line!r}") from None
    return Graph.from_edges(n, edges)


def load_edge_list(path) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read edge list {path}: {exc}") from None


def random_graph(n: int, rng: Random, edge_prob: float = 0.5) -> Graph:
    """Sample a labeled graph on n vertices with independent edges."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)
