"""Exact triangle-decomposition search over edge multiplicities.

The solver treats a decomposition as an exact cover of the edge multiset by
triangles: a certificate is a multiset of vertex triples such that every
edge {u,v} lies in exactly multiplicity({u,v}) of them.  The search state is
the residual multiplicity vector; the branch rule picks the present edge
with the fewest usable triangles (ties broken by lexicographic edge order)
and tries its candidate triangles in lexicographic order, so the returned
certificate is a pure function of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .graph_core import EdgeKey, Multigraph, Triangle, degree_sequence


@dataclass(frozen=True)
class Decomposition:
    """A multiset of triangles, kept sorted; repeats are meaningful."""

    triangles: Tuple[Triangle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "triangles", tuple(sorted(self.triangles)))

    def __len__(self) -> int:
        return len(self.triangles)

    def to_json_dict(self) -> dict:
        return {"triangles": [list(t.as_triple()) for t in self.triangles]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Decomposition":
        from .graph_core import DomainError, triangle

        if not isinstance(data, dict) or "triangles" not in data:
            raise DomainError("certificate JSON must have a 'triangles' field")
        tris = []
        for entry in data["triangles"]:
            if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
                raise DomainError(f"triangle entries must be [a, b, c], got {entry!r}")
            tris.append(triangle(*entry))
        return cls(tuple(tris))


@dataclass(frozen=True)
class RejectReason:
    """A cheap necessary-condition failure.

    kind is one of "size_not_divisible", "odd_vertex", "edge_not_on_triangle";
    the vertex / edge fields carry the witness where applicable.
    """

    kind: str
    vertex: Optional[int] = None
    edge: Optional[EdgeKey] = None

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.edge is not None:
            out["edge"] = [self.edge.u, self.edge.v]
        return out


def enumerate_triangles(g: Multigraph) -> List[Triangle]:
    """All triangles of the underlying simple graph, lexicographic, each once."""
    adj = [set(ns) for ns in g.adjacency()]
    out: List[Triangle] = []
    for a in range(g.order):
        for b in sorted(adj[a]):
            if b <= a:
                continue
            for c in sorted(adj[a] & adj[b]):
                if c > b:
                    out.append(Triangle(a, b, c))
    return out


def check_decomposition(g: Multigraph, d: Decomposition) -> bool:
    """True iff d covers every edge exactly multiplicity times and nothing else."""
    return coverage_error(g, d) is None


def coverage_error(g: Multigraph, d: Decomposition) -> Optional[Tuple[str, EdgeKey]]:
    """First coverage defect as (kind, edge), or None if the certificate is valid.

    kind is "undercovered", "overcovered", or "notanedge"; the defect with the
    lexicographically least edge is reported.
    """
    counts: Dict[EdgeKey, int] = {}
    for t in d.triangles:
        for e in t.edges():
            counts[e] = counts.get(e, 0) + 1
    defects: List[Tuple[EdgeKey, str]] = []
    for e, c in counts.items():
        m = g.multiplicity(e)
        if e.v >= g.order or m == 0:
            defects.append((e, "notanedge"))
        elif c > m:
            defects.append((e, "overcovered"))
        elif c < m:
            defects.append((e, "undercovered"))
    for e in g.edges():
        if e not in counts:
            defects.append((e, "undercovered"))
    if not defects:
        return None
    e, kind = min(defects)
    return (kind, e)


def fast_reject(g: Multigraph) -> Optional[RejectReason]:
    """Cheap necessary conditions, checked in a fixed order.

    Size divisible by 3, then all degrees even, then every edge on a triangle.
    None means no cheap obstruction was found (not that a decomposition exists).
    """
    if g.size() % 3 != 0:
        return RejectReason("size_not_divisible")
    for v, d in enumerate(degree_sequence(g)):
        if d % 2 != 0:
            return RejectReason("odd_vertex", vertex=v)
    adj = [set(ns) for ns in g.adjacency()]
    for e in g.edges():
        if not (adj[e.u] & adj[e.v]):
            return RejectReason("edge_not_on_triangle", edge=e)
    return None


class CoverInstance:
    """Reusable triangle-cover structure for one underlying simple graph.

    Augmenting a graph never changes which triples form triangles, so a
    single instance serves every candidate augmentation of the same graph:
    only the residual multiplicity vector varies between solve() calls.
    """

    __slots__ = ("edge_keys", "edge_index", "tri_verts", "tri_edges", "tris_of_edge")

    def __init__(self, g: Multigraph):
        self.edge_keys: List[EdgeKey] = g.edges()
        self.edge_index: Dict[EdgeKey, int] = {e: i for i, e in enumerate(self.edge_keys)}
        tris = enumerate_triangles(g)
        self.tri_verts: List[Triangle] = tris
        self.tri_edges: List[Tuple[int, int, int]] = [
            tuple(self.edge_index[e] for e in t.edges()) for t in tris  # type: ignore[misc]
        ]
        self.tris_of_edge: List[List[int]] = [[] for _ in self.edge_keys]
        for ti, (e1, e2, e3) in enumerate(self.tri_edges):
            self.tris_of_edge[e1].append(ti)
            self.tris_of_edge[e2].append(ti)
            self.tris_of_edge[e3].append(ti)

    def base_multiplicities(self, g: Multigraph) -> List[int]:
        return [g.multiplicity(e) for e in self.edge_keys]

    def solve(self, residual: List[int]) -> Optional[List[int]]:
        """Triangle indices (with repetition) covering the residual vector, or None.

        The caller is responsible for the root-level cheap checks; both stay
        true along any branch (removing a triangle keeps the total divisible
        by 3 and changes three degrees by 2 each, preserving parity), so they
        are not rescanned per node.
        """
        res = list(residual)
        tri_edges = self.tri_edges
        tris_of_edge = self.tris_of_edge
        m = len(res)
        chosen: List[int] = []

        def node() -> bool:
            best: Optional[List[int]] = None
            for ei in range(m):
                need = res[ei]
                if need <= 0:
                    continue
                avail: List[int] = []
                capacity = 0
                for ti in tris_of_edge[ei]:
                    e1, e2, e3 = tri_edges[ti]
                    lo = res[e1]
                    if res[e2] < lo:
                        lo = res[e2]
                    if res[e3] < lo:
                        lo = res[e3]
                    if lo > 0:
                        avail.append(ti)
                        capacity += lo
                if capacity < need:
                    return False  # this edge cannot be covered even with full reuse
                if best is None or len(avail) < len(best):
                    best = avail
            if best is None:
                return True  # residual exhausted
            for ti in best:
                e1, e2, e3 = tri_edges[ti]
                res[e1] -= 1
                res[e2] -= 1
                res[e3] -= 1
                chosen.append(ti)
                if node():
                    return True
                chosen.pop()
                res[e1] += 1
                res[e2] += 1
                res[e3] += 1
            return False

        if node():
            return list(chosen)
        return None

    def certificate(self, chosen: List[int]) -> Decomposition:
        return Decomposition(tuple(self.tri_verts[t] for t in chosen))


def find_decomposition(g: Multigraph) -> Optional[Decomposition]:
    """A triangle decomposition of g, or None; deterministic certificate."""
    if fast_reject(g) is not None:
        return None
    inst = CoverInstance(g)
    chosen = inst.solve(inst.base_multiplicities(g))
    if chosen is None:
        return None
    return inst.certificate(chosen)
