"""Dynamics of the reduced 3x3 family ``G_1..G_12``.

Covers the kernel directions ``s_1..s_6``, the transition graph they span,
the polyhedron ``P = conv{±s_i}`` used as a unit ball, spectra of chain
products, stabilizers/destabilizers and the shortest zero product.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

from . import hull
from .arbitrage import STRONG, STRONG_RULES, Chain, run_chain
from .errors import NonConformingError
from .linalg import (
    Matrix, charpoly, identity, matmul, nullspace, rank, root_multiplicity,
    sub, transpose, vecmat, zeros,
)
from .matrices import D, G, build_B
from .rates import is_balanced_exp

SPACES = ("G3", "D6", "B6")
ZERO3 = (0, 0, 0)


def generator(k: int, space: str = "G3") -> Matrix:
    if space == "G3":
        return G(k)
    if space == "D6":
        return D(k)
    if space == "B6":
        return build_B(k)
    raise ValueError("unknown space %r (expected one of %s)" % (space, ", ".join(SPACES)))


def chain_ids(chain) -> tuple:
    if isinstance(chain, Chain):
        if chain.flavor != STRONG:
            raise ValueError("matrix products are defined for strong chains")
        return chain.ids
    return tuple(chain)


def chain_product(chain, space: str = "G3") -> Matrix:
    ids = chain_ids(chain)
    size = 3 if space == "G3" else 6
    m = identity(size)
    for k in ids:
        m = matmul(m, generator(k, space))
    return m


# -- kernel vectors and the key graph ---------------------------------------

def kernel_vectors(family: Optional[Dict[int, Matrix]] = None) -> tuple:
    """Primitive row vectors annihilated by some generator, in generator order."""
    family = family or {k: G(k) for k in STRONG_RULES}
    found = []
    for k in sorted(family):
        for v in nullspace(transpose(family[k])):
            if v not in found:
                found.append(v)
    return tuple(found)


def signed_nodes(vectors: Sequence[tuple]) -> tuple:
    nodes = [ZERO3]
    for s in vectors:
        nodes.append(tuple(s))
        nodes.append(tuple(-x for x in s))
    return tuple(nodes)


def node_class(v: Sequence[int], vectors: Sequence[tuple]) -> int:
    """0 for the zero vector, i for ±s_i; raises if ``v`` is neither."""
    v = tuple(v)
    if v == ZERO3:
        return 0
    for i, s in enumerate(vectors, start=1):
        if v == tuple(s) or v == tuple(-x for x in s):
            return i
    raise NonConformingError("vector %r is outside {0, ±s_i}" % (v,), v)


def node_label(v: Sequence[int], vectors: Sequence[tuple]) -> str:
    c = node_class(v, vectors)
    if c == 0:
        return "0"
    return ("+s%d" if tuple(v) == tuple(vectors[c - 1]) else "-s%d") % c


@dataclass
class KeyGraph:
    vectors: tuple
    nodes: tuple
    edges: Dict[tuple, tuple] = field(default_factory=dict)  # (node, k) -> node

    def out_degree(self, node) -> int:
        return sum(1 for (src, _) in self.edges if src == node)

    def class_edges(self) -> Dict[int, Dict[int, tuple]]:
        """Transitions between sign classes, as drawn in the published diagram."""
        out = {}
        for (src, k), dst in sorted(self.edges.items()):
            a = node_class(src, self.vectors)
            b = node_class(dst, self.vectors)
            out.setdefault(a, {}).setdefault(b, set()).add(k)
        return {a: {b: tuple(sorted(ks)) for b, ks in sorted(t.items())} for a, t in sorted(out.items())}


def build_key_graph(vectors: Optional[Sequence[tuple]] = None) -> KeyGraph:
    vectors = tuple(vectors or kernel_vectors())
    nodes = signed_nodes(vectors)
    node_set = set(nodes)
    graph = KeyGraph(vectors, nodes)
    for x in nodes:
        for k in STRONG_RULES:
            y = vecmat(x, G(k))
            if y not in node_set:
                raise NonConformingError("s.G_%d = %r leaves the node set" % (k, y), (x, k, y))
            graph.edges[(x, k)] = y
    return graph


def undirected_reduction(graph: KeyGraph) -> Dict[int, set]:
    """Simple graph on the classes ±s_i: no zero node, no loops, no labels."""
    adj = {i: set() for i in range(1, len(graph.vectors) + 1)}
    for a, targets in graph.class_edges().items():
        for b in targets:
            if a and b and a != b:
                adj[a].add(b)
                adj[b].add(a)
    return adj


def is_octahedron(adj: Dict[object, Iterable]) -> bool:
    """Whether a simple graph is K_{2,2,2}: six nodes, all of degree 4, and
    the complement a perfect matching."""
    adj = {a: set(b) - {a} for a, b in adj.items()}
    nodes = set(adj)
    if len(nodes) != 6:
        return False
    if any(adj[a] - nodes for a in nodes) or any(a not in adj[b] for a in nodes for b in adj[a]):
        return False
    if any(len(adj[a]) != 4 for a in nodes):
        return False
    partner = {a: (nodes - adj[a] - {a}) for a in nodes}
    return all(len(p) == 1 and partner[next(iter(p))] == {a} for a, p in partner.items())


def check_octahedron(graph) -> bool:
    if isinstance(graph, KeyGraph):
        return is_octahedron(undirected_reduction(graph))
    return is_octahedron(graph)


def to_dot(graph: KeyGraph, classes: bool = False) -> str:
    lines = ["digraph keygraph {"]
    if classes:
        names = {0: "0"}
        names.update({i: "±s%d" % i for i in range(1, len(graph.vectors) + 1)})
        for i in sorted(names):
            lines.append('  n%d [label="%s"];' % (i, names[i]))
        for a, targets in graph.class_edges().items():
            for b, ks in targets.items():
                lines.append('  n%d -> n%d [label="%s"];' % (a, b, ",".join(map(str, ks))))
    else:
        ids = {node: "v%d" % i for i, node in enumerate(graph.nodes)}
        for node in graph.nodes:
            lines.append('  %s [label="%s"];' % (ids[node], node_label(node, graph.vectors)))
        grouped = {}
        for (src, k), dst in graph.edges.items():
            grouped.setdefault((src, dst), []).append(k)
        for node in graph.nodes:
            for dst in graph.nodes:
                ks = grouped.get((node, dst))
                if ks:
                    lines.append('  %s -> %s [label="%s"];' % (ids[node], ids[dst], ",".join(map(str, sorted(ks)))))
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- the polyhedron P --------------------------------------------------------

def polyhedron_vertices(vectors: Optional[Sequence[tuple]] = None) -> tuple:
    return signed_nodes(vectors or kernel_vectors())[1:]


def hull_facets(points: Optional[Sequence[tuple]] = None) -> dict:
    return hull.facet_census(points or polyhedron_vertices())


def norm_certificate(family: Optional[Dict[int, Matrix]] = None) -> dict:
    """Check ``x G in P`` for every vertex ``x`` of ``P`` and every ``G``.

    Vertex images suffice because ``P`` is the convex hull of its vertices.
    """
    if family is None:
        family = {k: G(k) for k in STRONG_RULES}
    vertices = polyhedron_vertices()
    facets = hull.convex_hull(vertices)
    node_set = set(signed_nodes(kernel_vectors()))
    failures = []
    closed = True
    for k, g in sorted(family.items()):
        for x in vertices:
            y = vecmat(x, g)
            closed = closed and y in node_set
            if not hull.contains(facets, y):
                failures.append({"generator": k, "vertex": x, "image": y})
    symmetric = set(vertices) == {tuple(-c for c in v) for v in vertices}
    try:
        hull.independent_triple(vertices)
        interior = symmetric
    except hull.DegenerateHullError:
        interior = False
    return {
        "bounded": not failures,
        "images_in_node_set": closed,
        "symmetric": symmetric,
        "nonempty_interior": interior,
        "failures": failures,
    }


def check_norm_certificate(family: Optional[Dict[int, Matrix]] = None) -> bool:
    report = norm_certificate(family)
    return report["bounded"] and report["nonempty_interior"]


# -- spectra of products -----------------------------------------------------

@dataclass(frozen=True)
class ProductAnalysis:
    chain: tuple
    space: str
    matrix: Matrix
    charpoly: tuple  # det(xI - M), highest degree first
    zero_multiplicity: int
    one_multiplicity: int
    residual: tuple  # cofactor once all roots 0 and 1 are divided out
    rank_m_minus_i: int
    rank_m_minus_i_sq: int

    @property
    def conforming(self) -> bool:
        return len(self.residual) == 1

    def to_json(self) -> dict:
        return {
            "chain": list(self.chain),
            "space": self.space,
            "matrix": [list(r) for r in self.matrix],
            "charpoly": list(self.charpoly),
            "zero_multiplicity": self.zero_multiplicity,
            "one_multiplicity": self.one_multiplicity,
            "residual": list(self.residual),
            "conforming": self.conforming,
            "rank_m_minus_i": self.rank_m_minus_i,
            "rank_m_minus_i_sq": self.rank_m_minus_i_sq,
        }


def analyze_product(chain, space: str = "G3", strict: bool = True) -> ProductAnalysis:
    """Characteristic polynomial of a chain product, split as x^a (x-1)^b.

    With ``strict`` a leftover factor (a root other than 0 or 1) raises
    :class:`NonConformingError` carrying the analysis.
    """
    ids = chain_ids(chain)
    m = chain_product(ids, space)
    poly = charpoly(m)
    a, rest = root_multiplicity(poly, 0)
    b, rest = root_multiplicity(rest, 1)
    m1 = sub(m, identity(len(m)))
    result = ProductAnalysis(
        chain=ids,
        space=space,
        matrix=m,
        charpoly=tuple(poly),
        zero_multiplicity=a,
        one_multiplicity=b,
        residual=tuple(rest),
        rank_m_minus_i=rank(m1),
        rank_m_minus_i_sq=rank(matmul(m1, m1)),
    )
    if strict and not result.conforming:
        raise NonConformingError(
            "product of %s in %s has a root other than 0 and 1" % (list(ids), space), result)
    return result


def is_stabilizer(chain) -> bool:
    return chain_product(chain, "G3") == zeros(3)


def is_destabilizer(chain) -> bool:
    """Jordan block at eigenvalue 1 in the 6x6 product (rank of (M-I)^2 drops)."""
    pa = analyze_product(chain, "D6")
    return pa.rank_m_minus_i_sq < pa.rank_m_minus_i


def iterates(chain, n: Sequence[int], passes: int = 50) -> List[tuple]:
    c = Chain(STRONG, chain_ids(chain))
    out = []
    state = tuple(n)
    for _ in range(passes):
        state = run_chain(c, state)
        out.append(state)
    return out


def iterates_distinct(chain, n: Sequence[int], passes: int = 50) -> bool:
    its = iterates(chain, n, passes)
    return len(set(its)) == len(its)


def enters_cycle(chain, n: Sequence[int], passes: int = 50) -> bool:
    its = iterates(chain, n, passes)
    return len(set(its)) < len(its)


def outcome_balanced(chain, n: Sequence[int]) -> bool:
    return is_balanced_exp(run_chain(Chain(STRONG, chain_ids(chain)), n))


# -- shortest zero product ---------------------------------------------------

def shortest_zero_product(max_len: int, family: Optional[Dict[int, Matrix]] = None) -> Optional[Chain]:
    """Shortest (then lexicographically least) chain whose G-product is zero.

    Breadth-first over products deduplicated by matrix value. Parents are
    expanded in the order of their witnesses and generators in increasing
    order, so the first time a matrix is seen its witness is lex-least.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    family = family or {k: G(k) for k in STRONG_RULES}
    size = len(next(iter(family.values())))
    target = zeros(size)
    seen = {identity(size): ()}
    frontier = deque([identity(size)])
    for _ in range(max_len):
        nxt = deque()
        for m in frontier:
            word = seen[m]
            for k in sorted(family):
                p = matmul(m, family[k])
                if p in seen:
                    continue
                seen[p] = word + (k,)
                if p == target:
                    return Chain(STRONG, seen[p])
                nxt.append(p)
        frontier = nxt
    return None


# -- random spectrum survey --------------------------------------------------

def spectrum_survey(samples: int = 1000, max_len: int = 20, seed: int = 0,
                    spaces: Sequence[str] = SPACES) -> dict:
    """Sample random strong chains and collect products with a root outside {0, 1}."""
    rng = random.Random(seed)
    counterexamples = []
    for _ in range(samples):
        ids = tuple(rng.randint(1, 12) for _ in range(rng.randint(1, max_len)))
        for space in spaces:
            pa = analyze_product(ids, space, strict=False)
            if not pa.conforming:
                counterexamples.append(pa)
    chains = {pa.chain for pa in counterexamples}
    return {
        "samples": samples,
        "max_len": max_len,
        "seed": seed,
        "verdict": not counterexamples,
        "failing_chains": len(chains),
        "counterexamples": counterexamples,
    }
