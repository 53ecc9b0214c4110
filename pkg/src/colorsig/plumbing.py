"""Homological combinatorics of plumbing graphs.

A plumbing graph has surfaces as vertices and +-1 weighted edges.  Only the
first-homology bookkeeping of the plumbed 3-manifold is modelled: total
weights, the balanced condition, and the kernel of the map induced on H_1 by
the inclusion of the boundary.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class Surface:
    label: str
    genus: int = 0
    boundary: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise DomainError("genus and boundary count must be nonnegative")


@dataclass(frozen=True)
class Edge:
    """Undirected edge stored with u < v; the weight does not depend on direction."""

    u: int
    v: int
    sign: int

    def __post_init__(self):
        if self.u == self.v:
            raise DomainError("plumbing graphs have no loops")
        if self.sign not in (1, -1):
            raise DomainError(f"edge weight must be +1 or -1, got {self.sign}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        n = len(self.vertices)
        for e in edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise DomainError(f"edge {e} refers to a missing vertex")
        labels = [s.label for s in self.vertices]
        if len(set(labels)) != len(labels):
            raise DomainError("vertex labels must be distinct")
        object.__setattr__(self, "edges", edges)

    def index(self, v) -> int:
        if isinstance(v, int):
            if not 0 <= v < len(self.vertices):
                raise DomainError(f"no vertex {v}")
            return v
        for i, s in enumerate(self.vertices):
            if s.label == v:
                return i
        raise DomainError(f"no vertex labelled {v!r}")

    def oriented_edges(self):
        """Both orientations of every edge as (source, target, sign)."""
        for e in self.edges:
            yield e.u, e.v, e.sign
            yield e.v, e.u, e.sign

    def negated(self) -> "PlumbingGraph":
        return PlumbingGraph(self.vertices, tuple(Edge(e.u, e.v, -e.sign) for e in self.edges))

    def to_json(self) -> dict:
        return {
            "vertices": [{"label": s.label, "genus": s.genus, "boundary": s.boundary}
                         for s in self.vertices],
            "edges": [{"u": e.u, "v": e.v, "sign": e.sign} for e in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "PlumbingGraph":
        verts = [Surface(str(v.get("label", i)), int(v.get("genus", 0)), int(v.get("boundary", 0)))
                 for i, v in enumerate(data["vertices"])]
        labels = {s.label: i for i, s in enumerate(verts)}

        def idx(x):
            if isinstance(x, int):
                return x
            if x in labels:
                return labels[x]
            raise DomainError(f"edge endpoint {x!r} is not a vertex")
        edges = [Edge(idx(e["u"]), idx(e["v"]), int(e["sign"])) for e in data.get("edges", [])]
        return cls(tuple(verts), tuple(edges))


def total_weight(G: PlumbingGraph, v, w) -> int:
    """Sum of the weights of all edges between two distinct vertices."""
    i, j = G.index(v), G.index(w)
    if i == j:
        raise DomainError("total weight is defined for distinct vertices")
    a, b = min(i, j), max(i, j)
    return sum(e.sign for e in G.edges if e.u == a and e.v == b)


def weight_matrix(G: PlumbingGraph) -> list[list[int]]:
    n = len(G.vertices)
    W = [[0] * n for _ in range(n)]
    for e in G.edges:
        W[e.u][e.v] += e.sign
        W[e.v][e.u] += e.sign
    return W


def is_balanced(G: PlumbingGraph) -> bool:
    return not any(any(row) for row in weight_matrix(G))


# ---------------------------------------------------------------------------
# formal homology classes


@dataclass
class KernelBasis:
    """Formal rational combinations over an ordered list of symbol names."""

    symbols: list
    generators: list = field(default_factory=list)

    def __len__(self):
        return len(self.generators)

    def matrix(self) -> list[list[Fraction]]:
        return [[gen.get(s, Fraction(0)) for s in self.symbols] for gen in self.generators]

    def rank(self) -> int:
        return _rank(self.matrix())

    def format(self) -> list[str]:
        out = []
        for gen in self.generators:
            parts = []
            for s, c in gen.items():
                if not c:
                    continue
                if c == 1:
                    parts.append(f"+ {s}")
                elif c == -1:
                    parts.append(f"- {s}")
                else:
                    parts.append(f"{'+' if c > 0 else '-'} {abs(c)}*{s}")
            text = " ".join(parts)
            out.append(text[2:] if text.startswith("+ ") else "-" + text[2:])
        return out

    def to_json(self) -> dict:
        return {
            "symbols": list(self.symbols),
            "generators": [{s: str(c) if c.denominator != 1 else int(c)
                            for s, c in gen.items() if c} for gen in self.generators],
            "formatted": self.format(),
        }


def _rank(rows) -> int:
    M = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def boundary_symbol(label) -> str:
    return f"[d{label}]"


def meridian_symbol(label, i: int) -> str:
    return f"mu{i}^{label}"


def kernel_basis(G: PlumbingGraph) -> KernelBasis:
    """Basis of ker(H_1(boundary of Pb(G); R) -> H_1(Pb(G); R)).

    For each vertex F with boundary: [dF] - sum_{s(e)=F} eps(e) mu_1^{t(e)}, and
    mu_i^F - mu_1^F for 2 <= i <= n_F.  A closed neighbour t(e) still
    contributes its symbol mu_1^{t(e)}, appended after the boundary symbols.
    """
    symbols = []
    for s in G.vertices:
        if s.boundary:
            symbols.append(boundary_symbol(s.label))
            symbols.extend(meridian_symbol(s.label, i) for i in range(1, s.boundary + 1))
    extra = []
    basis = KernelBasis(symbols)
    for idx, s in enumerate(G.vertices):
        if not s.boundary:
            continue
        gen = {boundary_symbol(s.label): Fraction(1)}
        for src, tgt, sign in G.oriented_edges():
            if src != idx:
                continue
            key = meridian_symbol(G.vertices[tgt].label, 1)
            if not G.vertices[tgt].boundary and key not in extra:
                extra.append(key)
            gen[key] = gen.get(key, Fraction(0)) - sign
        basis.generators.append({k: c for k, c in gen.items() if c})
        for i in range(2, s.boundary + 1):
            basis.generators.append({meridian_symbol(s.label, i): Fraction(1),
                                     meridian_symbol(s.label, 1): Fraction(-1)})
    symbols.extend(extra)
    return basis


def intersection_graph(surfaces: Sequence, intersections: Sequence) -> PlumbingGraph:
    """Vertices are the surfaces; one edge per intersection point, weighted by its sign.

    ``surfaces`` holds :class:`Surface` objects or dicts with label/genus/boundary;
    ``intersections`` holds (point_id, i, j, sign) with vertex indices or labels.
    """
    verts = tuple(s if isinstance(s, Surface) else
                  Surface(str(s["label"]), int(s.get("genus", 0)), int(s.get("boundary", 0)))
                  for s in surfaces)
    labels = {s.label: i for i, s in enumerate(verts)}

    def idx(x):
        return x if isinstance(x, int) else labels[x]
    edges = []
    for point, i, j, sign in intersections:
        i, j = idx(i), idx(j)
        if i == j:
            raise DomainError(f"intersection point {point!r} is a self-intersection")
        edges.append(Edge(i, j, sign))
    return PlumbingGraph(verts, tuple(edges))


def double(G: PlumbingGraph, other: PlumbingGraph | None = None) -> PlumbingGraph:
    """Glue each F_i to -F'_i along the boundary; edges of ``other`` are negated.

    With ``other`` omitted the graph is doubled with itself.
    """
    other = G if other is None else other
    if len(other.vertices) != len(G.vertices):
        raise DomainError("doubling needs the same number of vertices on both sides")
    verts = []
    for a, b in zip(G.vertices, other.vertices):
        if a.boundary != b.boundary:
            raise DomainError(f"cannot glue {a.label!r} to {b.label!r}: boundary counts differ")
        genus = a.genus + b.genus + max(a.boundary - 1, 0)
        verts.append(Surface(f"{a.label}|{b.label}" if a.label != b.label else a.label, genus, 0))
    edges = tuple(G.edges) + tuple(Edge(e.u, e.v, -e.sign) for e in other.edges)
    return PlumbingGraph(tuple(verts), edges)


# ---------------------------------------------------------------------------
# linking numbers of sublinks


def sublink_linking(component_linking: Sequence[Sequence[int]], coloring: Sequence[int],
                    mu: int | None = None) -> list[list[int]]:
    """lk(L_i, L_j) = sum of component linking numbers, with zero diagonal.

    ``coloring[k]`` is the 0-based color of component k.
    """
    n = len(component_linking)
    if any(len(r) != n for r in component_linking) or len(coloring) != n:
        raise DomainError("component linking matrix must be square with one color per component")
    for a in range(n):
        for b in range(n):
            if component_linking[a][b] != component_linking[b][a]:
                raise DomainError("component linking matrix must be symmetric")
    mu = mu if mu is not None else (max(coloring) + 1 if n else 0)
    out = [[0] * mu for _ in range(mu)]
    for a in range(n):
        for b in range(n):
            ca, cb = coloring[a], coloring[b]
            if a != b and ca != cb:
                out[ca][cb] += component_linking[a][b]
    return out


def boundary_kernel_generators(linking: Sequence[Sequence[int]],
                               components_per_color: Sequence[int]) -> KernelBasis:
    """[L_i] - sum_j lk(L_i, L_j) mu_1^{L_j} and mu_k^{L_i} - mu_1^{L_i}."""
    mu = len(components_per_color)
    if len(linking) != mu or any(len(r) != mu for r in linking):
        raise DomainError("linking matrix must be mu x mu")
    if any(linking[i][i] for i in range(mu)):
        raise DomainError("linking matrix must have zero diagonal")
    names = [f"L{i + 1}" for i in range(mu)]
    symbols = []
    for name, n in zip(names, components_per_color):
        symbols.append(f"[{name}]")
        symbols.extend(meridian_symbol(name, k) for k in range(1, n + 1))
    basis = KernelBasis(symbols)
    for i, name in enumerate(names):
        gen = {f"[{name}]": Fraction(1)}
        for j in range(mu):
            if linking[i][j]:
                gen[meridian_symbol(names[j], 1)] = Fraction(-linking[i][j])
        basis.generators.append(gen)
        for k in range(2, components_per_color[i] + 1):
            basis.generators.append({meridian_symbol(name, k): Fraction(1),
                                     meridian_symbol(name, 1): Fraction(-1)})
    return basis
