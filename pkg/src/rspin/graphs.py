"""Decorated stable graphs and the degree bookkeeping attached to them.

Half-edges are the integers ``0..H-1``.  Each sits on a vertex; it is either
one half of an edge or a tail.  Tails are ordered (position ``i`` in
``tails`` is the i-th marked point, counted from 0), edges are unordered.
Every half-edge carries an r-spin label ``m`` in ``0..r-1``, and the two
halves of an edge satisfy ``m+ + m- = r - 2 (mod r)``.  For an edge stored
as ``(h1, h2)`` the label of ``h1`` is ``m+``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import gcd
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .errors import DomainError, ScaleLimitError
from .state_space import central_charge, check_r

MAX_GENUS = 2
MAX_TAILS = 6
MAX_ORDERINGS = 100_000


# ---------------------------------------------------------------------------
# selection rules and dimensions


def selection_nonempty(r: int, g: int, sectors: Sequence[int]) -> bool:
    """Whether the moduli of genus-g A_{r-1}-curves with the given sectors J^k is non-empty."""
    check_r(r)
    for k in sectors:
        if not 0 <= k <= r - 1:
            raise DomainError("sector exponent %r outside 0..%d" % (k, r - 1))
    value = Fraction(2 * g - 2 + len(sectors), r) - sum((Fraction(k, r) for k in sectors), Fraction(0))
    return value.denominator == 1


def bundle_degree(r: int, g: int, m_list: Sequence[int], twist: str = "canonical") -> Fraction:
    """Degree of the r-th root.

    ``canonical``: L^r = omega(-sum m_i p_i), degree (2g-2-sum m)/r.
    ``log``: L^r = omega_log(-sum m_i p_i), degree (2g-2+n-sum m)/r; with
    entries k = r*Theta this is the pushforward of an A_{r-1}-structure.
    """
    check_r(r)
    for m in m_list:
        if not 0 <= m <= r - 1:
            raise DomainError("label %r outside 0..%d" % (m, r - 1))
    if twist == "canonical":
        return Fraction(2 * g - 2 - sum(m_list), r)
    if twist == "log":
        return Fraction(2 * g - 2 + len(m_list) - sum(m_list), r)
    raise DomainError("unknown twist %r" % (twist,))


@dataclass(frozen=True)
class VirtualDimension:
    D: Fraction
    d: Optional[int]
    vanishes: bool


def virtual_dim(r: int, g: int, alpha: int, m_list: Sequence[int]) -> VirtualDimension:
    """Cohomological degree D of the virtual class and homological degree d = 6g-6+2n-2D."""
    check_r(r)
    if alpha < 1:
        raise DomainError("a graph has at least one connected component")
    D = central_charge(r) * (g - alpha) + sum((Fraction(m, r) for m in m_list), Fraction(0))
    if D.denominator != 1:
        return VirtualDimension(D, None, True)
    return VirtualDimension(D, int(6 * g - 6 + 2 * len(m_list) - 2 * D), False)


def edge_factor(r: int, m_plus: int) -> int:
    check_r(r)
    if not 0 <= m_plus <= r - 1:
        raise DomainError("label %r outside 0..%d" % (m_plus, r - 1))
    return r // gcd(m_plus + 1, r)


def other_half(r: int, m_plus: int) -> int:
    return (r - 2 - m_plus) % r


# ---------------------------------------------------------------------------
# graphs


class DecoratedGraph(NamedTuple):
    r: int
    genera: Tuple[int, ...]
    vertex_of: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    tails: Tuple[int, ...]
    decoration: Tuple[int, ...]

    @classmethod
    def corolla(cls, r: int, g: int, m_list: Sequence[int]) -> "DecoratedGraph":
        n = len(m_list)
        return cls(r, (g,), (0,) * n, (), tuple(range(n)), tuple(_norm(r, m) for m in m_list))

    @property
    def n(self) -> int:
        return len(self.tails)

    @property
    def num_half_edges(self) -> int:
        return len(self.vertex_of)

    def half_edges_at(self, v: int) -> List[int]:
        return [h for h, u in enumerate(self.vertex_of) if u == v]

    def valence(self, v: int) -> int:
        return sum(1 for u in self.vertex_of if u == v)

    def tail_labels(self) -> Tuple[int, ...]:
        return tuple(self.decoration[h] for h in self.tails)

    def components(self) -> List[List[int]]:
        parent = list(range(len(self.genera)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for h1, h2 in self.edges:
            a, b = find(self.vertex_of[h1]), find(self.vertex_of[h2])
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups: Dict[int, List[int]] = {}
        for v in range(len(self.genera)):
            groups.setdefault(find(v), []).append(v)
        return [groups[k] for k in sorted(groups)]

    @property
    def genus(self) -> int:
        """Sum of vertex genera plus the first Betti number."""
        b1 = len(self.edges) - len(self.genera) + len(self.components())
        return sum(self.genera) + b1

    def vertex_degree(self, v: int) -> Fraction:
        return bundle_degree(self.r, self.genera[v], [self.decoration[h] for h in self.half_edges_at(v)])

    def key(self) -> tuple:
        return canonical_key(self)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "vertices": [
                {"genus": g, "half_edges": self.half_edges_at(v)} for v, g in enumerate(self.genera)
            ],
            "edges": [list(e) for e in self.edges],
            "tails": list(self.tails),
            "decoration": {str(h): m for h, m in enumerate(self.decoration)},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "DecoratedGraph":
        r = int(data["r"])
        check_r(r)
        genera = []
        owner: Dict[int, int] = {}
        for v, vert in enumerate(data["vertices"]):
            genera.append(int(vert["genus"]))
            for h in vert.get("half_edges", []):
                if int(h) in owner:
                    raise DomainError("half-edge %s is attached to two vertices" % h)
                owner[int(h)] = v
        H = len(owner)
        if sorted(owner) != list(range(H)):
            raise DomainError("half-edge ids must be consecutive integers from 0")
        dec_raw = {int(k): int(v) for k, v in data.get("decoration", {}).items()}
        if sorted(dec_raw) != list(range(H)):
            raise DomainError("every half-edge needs exactly one decoration")
        return cls(
            r,
            tuple(genera),
            tuple(owner[h] for h in range(H)),
            tuple((int(a), int(b)) for a, b in data.get("edges", [])),
            tuple(int(h) for h in data.get("tails", [])),
            tuple(_norm(r, dec_raw[h]) for h in range(H)),
        )

    @classmethod
    def loads(cls, text: str) -> "DecoratedGraph":
        return cls.from_json(json.loads(text))


def _norm(r: int, m: int) -> int:
    if m == -1:
        return r - 1
    return m


def validate(graph: DecoratedGraph) -> List[str]:
    """Every violated invariant, as human-readable strings; empty means valid."""
    problems = []
    r = graph.r
    V = len(graph.genera)
    if not isinstance(r, int) or r < 2:
        return ["r=%r is not an integer >= 2" % (r,)]
    for v, g in enumerate(graph.genera):
        if g < 0:
            problems.append("vertex %d has negative genus %d" % (v, g))
    for h, v in enumerate(graph.vertex_of):
        if not 0 <= v < V:
            problems.append("half-edge %d sits on missing vertex %d" % (h, v))
    if len(graph.decoration) != graph.num_half_edges:
        problems.append("decoration has %d entries for %d half-edges" % (len(graph.decoration), graph.num_half_edges))
    uses = [0] * graph.num_half_edges
    for pair in graph.edges:
        for h in pair:
            if 0 <= h < len(uses):
                uses[h] += 1
            else:
                problems.append("edge %r uses unknown half-edge %d" % (pair, h))
    for h in graph.tails:
        if 0 <= h < len(uses):
            uses[h] += 1
        else:
            problems.append("tail uses unknown half-edge %d" % h)
    for h, k in enumerate(uses):
        if k != 1:
            problems.append("half-edge %d is used %d times" % (h, k))
    for h, m in enumerate(graph.decoration):
        if not 0 <= m <= r - 1:
            problems.append("half-edge %d has label %d outside 0..%d" % (h, m, r - 1))
    if problems:
        return problems
    for v, g in enumerate(graph.genera):
        val = graph.valence(v)
        if 2 * g - 2 + val <= 0:
            problems.append("unstable vertex %d (genus %d, valence %d)" % (v, g, val))
    for h1, h2 in graph.edges:
        a, b = graph.decoration[h1], graph.decoration[h2]
        if (a + b) % r != (r - 2) % r:
            problems.append("edge (%d,%d) labels %d+%d not congruent to r-2 mod %d" % (h1, h2, a, b, r))
    return problems


def is_valid(graph: DecoratedGraph) -> bool:
    return not validate(graph)


# ---------------------------------------------------------------------------
# canonical form


def _canonical(genera, vertex_of, edges, tails, dec) -> tuple:
    V = len(genera)
    at: List[List[int]] = [[] for _ in range(V)]
    for h, v in enumerate(vertex_of):
        at[v].append(h)
    tails_at: List[List[int]] = [[] for _ in range(V)]
    for i, h in enumerate(tails):
        tails_at[vertex_of[h]].append(i)
    fixed = sorted((v for v in range(V) if tails_at[v]), key=lambda v: tails_at[v][0])
    free = [v for v in range(V) if not tails_at[v]]
    classes: Dict[tuple, List[int]] = {}
    for v in free:
        inv = (genera[v], len(at[v]), tuple(sorted(dec[h] for h in at[v])))
        classes.setdefault(inv, []).append(v)
    blocks = [classes[k] for k in sorted(classes)]
    count = 1
    for b in blocks:
        for i in range(2, len(b) + 1):
            count *= i
    if count > MAX_ORDERINGS:
        raise ScaleLimitError("canonical form needs %d vertex orderings" % count)
    tail_part = tuple(tuple(tails_at[v]) for v in fixed)
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = fixed + [v for block in choice for v in block]
        pos = {v: i for i, v in enumerate(order)}
        verts = tuple(genera[v] for v in order)
        edge_part = tuple(
            sorted(
                tuple(sorted(((pos[vertex_of[a]], dec[a]), (pos[vertex_of[b]], dec[b]))))
                for a, b in edges
            )
        )
        key = (verts, tail_part, tuple((pos[vertex_of[h]], dec[h]) for h in tails), edge_part)
        if best is None or key < best:
            best = key
    return best


def canonical_key(graph: DecoratedGraph) -> tuple:
    """Complete isomorphism invariant preserving tail order and labels."""
    return (graph.r,) + _canonical(graph.genera, graph.vertex_of, graph.edges, graph.tails, graph.decoration)


def canonical_string(graph: DecoratedGraph) -> str:
    return json.dumps(canonical_key(graph), separators=(",", ":"))


def isomorphic(a: DecoratedGraph, b: DecoratedGraph) -> bool:
    return canonical_key(a) == canonical_key(b)


# ---------------------------------------------------------------------------
# surgery


def _make(*fields) -> DecoratedGraph:
    # skips the generated NamedTuple constructor; hot in enumeration and surgery
    return tuple.__new__(DecoratedGraph, fields)


def _edge_index(graph: DecoratedGraph, e) -> int:
    if isinstance(e, int):
        if not 0 <= e < len(graph.edges):
            raise DomainError("graph has no edge %r" % e)
        return e
    pair = tuple(e)
    for i, f in enumerate(graph.edges):
        if f == pair or f == pair[::-1]:
            return i
    raise DomainError("graph has no edge %r" % (e,))


def cut_edge(graph: DecoratedGraph, e) -> DecoratedGraph:
    """Replace an edge (index or half-edge pair) by two new tails, m+ first."""
    i = _edge_index(graph, e)
    edge = graph.edges[i]
    edges = graph.edges[:i] + graph.edges[i + 1:]
    return _make(graph.r, graph.genera, graph.vertex_of, edges, graph.tails + edge, graph.decoration)


def glue_tails(graph: DecoratedGraph, i: int, j: int) -> DecoratedGraph:
    """Join tails ``i`` and ``j`` into an edge (the inverse of :func:`cut_edge`)."""
    r, genera, vertex_of, edges, tails, decoration = graph
    n = len(tails)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise DomainError("cannot glue tails %r and %r of %d" % (i, j, n))
    h1, h2 = tails[i], tails[j]
    a, b = decoration[h1], decoration[h2]
    if (a + b + 2) % r:
        raise DomainError("labels %d and %d violate the node congruence" % (a, b))
    lo, hi = (i, j) if i < j else (j, i)
    rest = tails[:lo] + tails[lo + 1:hi] + tails[hi + 1:]
    return _make(r, genera, vertex_of, edges + ((h1, h2),), rest, decoration)


def forget_tail(graph: DecoratedGraph, i: int) -> DecoratedGraph:
    if not 0 <= i < graph.n:
        raise DomainError("graph has no tail %r" % i)
    h = graph.tails[i]
    if graph.decoration[h] != 0:
        raise DomainError("forgetting non-trivially-marked tail (m=%d)" % graph.decoration[h])
    v = graph.vertex_of[h]
    if 2 * graph.genera[v] - 2 + graph.valence(v) - 1 <= 0:
        raise DomainError("unstable result: vertex %d would become unstable" % v)

    def rn(x):
        return x - 1 if x > h else x

    vertex_of = graph.vertex_of[:h] + graph.vertex_of[h + 1:]
    decoration = graph.decoration[:h] + graph.decoration[h + 1:]
    edges = tuple((rn(a), rn(b)) for a, b in graph.edges)
    tails = tuple(rn(x) for k, x in enumerate(graph.tails) if k != i)
    return DecoratedGraph(graph.r, graph.genera, vertex_of, edges, tails, decoration)


def add_tail(graph: DecoratedGraph, vertex: int, m: int = 0, position: Optional[int] = None) -> DecoratedGraph:
    if not 0 <= vertex < len(graph.genera):
        raise DomainError("graph has no vertex %r" % vertex)
    h = graph.num_half_edges
    tails = list(graph.tails)
    tails.insert(len(tails) if position is None else position, h)
    return DecoratedGraph(
        graph.r, graph.genera, graph.vertex_of + (vertex,), graph.edges, tuple(tails), graph.decoration + (_norm(graph.r, m),)
    )


# ---------------------------------------------------------------------------
# concavity and degree bookkeeping


def concave(r: int, graph: DecoratedGraph) -> bool:
    if any(g != 0 for g in graph.genera):
        return False
    if any(m > r - 2 for m in graph.decoration):
        return False
    return all(graph.vertex_degree(v) < 0 for v in range(len(graph.genera)))


def edge_degree_correction(r: int, m_plus: int, m_minus: int) -> Fraction:
    """Change in root degree when a node is normalized: (m+ + m- + 2)/r, which is 1 (NS) or 2 (Ramond)."""
    return Fraction(m_plus + m_minus + 2, r)


def global_degree(graph: DecoratedGraph) -> Fraction:
    return bundle_degree(graph.r, graph.genus, graph.tail_labels())


def degree_defect(graph: DecoratedGraph) -> Fraction:
    """global degree - sum of vertex degrees - sum of edge corrections; zero for connected graphs."""
    total = sum((graph.vertex_degree(v) for v in range(len(graph.genera))), Fraction(0))
    total += sum(
        (edge_degree_correction(graph.r, graph.decoration[a], graph.decoration[b]) for a, b in graph.edges),
        Fraction(0),
    )
    return global_degree(graph) - total


def subgroup_order(r: int, exponent: int) -> int:
    """Order of J^exponent in mu_r, by direct search."""
    k = 1
    while (k * exponent) % r:
        k += 1
    return k


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class Shape:
    genera: Tuple[int, ...]
    vertex_of: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    tails: Tuple[int, ...]
    automorphisms: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False)

    def key(self) -> tuple:
        return _canonical(self.genera, self.vertex_of, self.edges, self.tails, (0,) * len(self.vertex_of))


def _check_scale(g: int, n: int) -> None:
    if g < 0 or n < 0:
        raise DomainError("genus and number of tails must be non-negative")
    if g > MAX_GENUS or n > MAX_TAILS:
        raise ScaleLimitError("graph enumeration is limited to g <= %d, n <= %d" % (MAX_GENUS, MAX_TAILS))
    if 2 * g - 2 + n <= 0:
        raise DomainError("(g, n) = (%d, %d) is not stable" % (g, n))


def _degenerations(shape: Shape) -> Iterator[Shape]:
    genera, vertex_of, edges, tails = shape.genera, shape.vertex_of, shape.edges, shape.tails
    H = len(vertex_of)
    V = len(genera)
    for v in range(V):
        gv = genera[v]
        if gv >= 1:
            new_genera = genera[:v] + (gv - 1,) + genera[v + 1:]
            yield Shape(new_genera, vertex_of + (v, v), edges + ((H, H + 1),), tails)
        hs = [h for h in range(H) if vertex_of[h] == v]
        for mask in range(1 << len(hs)):
            stay = [h for i, h in enumerate(hs) if mask >> i & 1]
            move = [h for i, h in enumerate(hs) if not mask >> i & 1]
            for g1 in range(gv + 1):
                g2 = gv - g1
                if 2 * g1 - 2 + len(stay) + 1 <= 0 or 2 * g2 - 2 + len(move) + 1 <= 0:
                    continue
                new_vertex_of = list(vertex_of)
                for h in move:
                    new_vertex_of[h] = V
                new_vertex_of += [v, V]
                new_genera = genera[:v] + (g1,) + genera[v + 1:] + (g2,)
                yield Shape(new_genera, tuple(new_vertex_of), edges + ((H, H + 1),), tails)


def _automorphisms(shape: Shape) -> Tuple[Tuple[int, ...], ...]:
    """Half-edge permutations fixing every tail and preserving genera and edges."""
    genera, vertex_of, edges, tails = shape.genera, shape.vertex_of, shape.edges, shape.tails
    V = len(genera)
    H = len(vertex_of)
    tail_vertices = {vertex_of[h] for h in tails}
    free = [v for v in range(V) if v not in tail_vertices]
    valence = [0] * V
    for u in vertex_of:
        valence[u] += 1
    by_pair: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for a, b in edges:
        u, w = vertex_of[a], vertex_of[b]
        by_pair.setdefault((min(u, w), max(u, w)), []).append((a, b))
    result = []
    for perm in permutations(free):
        sigma = list(range(V))
        for v, w in zip(free, perm):
            sigma[v] = w
        if any(genera[v] != genera[sigma[v]] or valence[v] != valence[sigma[v]] for v in free):
            continue
        ok = True
        per_class = []
        for (u, w), group in sorted(by_pair.items()):
            su, sw = sigma[u], sigma[w]
            target = by_pair.get((min(su, sw), max(su, sw)), [])
            if len(target) != len(group):
                ok = False
                break
            options = []
            for image in permutations(target):
                if u == w:
                    for flips in product((False, True), repeat=len(group)):
                        m = {}
                        for (a, b), (x, y), f in zip(group, image, flips):
                            m[a], m[b] = (y, x) if f else (x, y)
                        options.append(m)
                else:
                    m = {}
                    for (a, b), (x, y) in zip(group, image):
                        ha, hb = (a, b) if vertex_of[a] == u else (b, a)
                        hx, hy = (x, y) if vertex_of[x] == su else (y, x)
                        m[ha], m[hb] = hx, hy
                    options.append(m)
            per_class.append(options)
        if not ok:
            continue
        for combo in product(*per_class):
            image = list(range(H))
            for m in combo:
                for a, b in m.items():
                    image[a] = b
            result.append(tuple(image))
    return tuple(sorted(set(result)))


_SHAPES: Dict[Tuple[int, int], Tuple[Shape, ...]] = {}


def stable_graphs(g: int, n: int) -> Tuple[Shape, ...]:
    """All stable graphs of type (g, n) with labelled tails, one per isomorphism class."""
    _check_scale(g, n)
    if (g, n) in _SHAPES:
        return _SHAPES[g, n]
    start = Shape((g,), (0,) * n, (), tuple(range(n)))
    seen = {start.key(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for shape in frontier:
            for child in _degenerations(shape):
                k = child.key()
                if k not in seen:
                    seen[k] = child
                    nxt.append(child)
        frontier = nxt
    shapes = tuple(
        Shape(s.genera, s.vertex_of, s.edges, s.tails, _automorphisms(s)) for _, s in sorted(seen.items())
    )
    _SHAPES[g, n] = shapes
    return shapes


def _tree_solver(shape: Shape):
    """Post-order schedule that fixes tree-edge labels from the vertex selection rules.

    Returns (tree edge indices, steps), where each step is
    (vertex, own half on the tree edge, parent half, other half-edges at the vertex).
    """
    V = len(shape.genera)
    at: List[List[int]] = [[] for _ in range(V)]
    for h, v in enumerate(shape.vertex_of):
        at[v].append(h)
    incident: List[List[int]] = [[] for _ in range(V)]
    for i, (a, b) in enumerate(shape.edges):
        incident[shape.vertex_of[a]].append(i)
        incident[shape.vertex_of[b]].append(i)
    seen = {0}
    order = [0]
    parent_edge = {}
    for v in order:
        for i in incident[v]:
            a, b = shape.edges[i]
            w = shape.vertex_of[b] if shape.vertex_of[a] == v else shape.vertex_of[a]
            if w not in seen:
                seen.add(w)
                order.append(w)
                parent_edge[w] = i
    steps = []
    for v in reversed(order[1:]):
        a, b = shape.edges[parent_edge[v]]
        own, up = (a, b) if shape.vertex_of[a] == v else (b, a)
        steps.append((v, own, up, [h for h in at[v] if h != own]))
    return set(parent_edge.values()), steps


def decorations(r: int, shape: Shape, nonempty: bool = False) -> Iterator[Tuple[int, ...]]:
    """One decoration per isomorphism class of decorated graph on ``shape``.

    With ``nonempty`` only decorations obeying the selection rule at every
    vertex are produced; tree-edge labels are then solved rather than searched.
    """
    H = len(shape.vertex_of)
    genera = shape.genera
    g = sum(genera) + len(shape.edges) - len(genera) + 1
    if nonempty:
        tree, steps = _tree_solver(shape)
    else:
        tree, steps = set(), []
    free_edges = [e for i, e in enumerate(shape.edges) if i not in tree]
    nontrivial = [a for a in shape.automorphisms if a != tuple(range(H))]
    dec = [0] * H
    for tail_values in product(range(r), repeat=len(shape.tails)):
        # the vertex rules sum to the global one, which only sees the tails
        if nonempty and (sum(tail_values) - 2 * g + 2) % r:
            continue
        for h, m in zip(shape.tails, tail_values):
            dec[h] = m
        for values in product(range(r), repeat=len(free_edges)):
            for (a, b), m in zip(free_edges, values):
                dec[a] = m
                dec[b] = (r - 2 - m) % r
            for v, own, up, others in steps:
                dec[own] = (2 * genera[v] - 2 - sum(dec[h] for h in others)) % r
                dec[up] = (r - 2 - dec[own]) % r
            d = tuple(dec)
            if nontrivial and not _orbit_minimal(d, nontrivial):
                continue
            yield d


def _orbit_minimal(d: Tuple[int, ...], automorphisms) -> bool:
    H = len(d)
    for alpha in automorphisms:
        image = [0] * H
        for h in range(H):
            image[alpha[h]] = d[h]
        if tuple(image) < d:
            return False
    return True


def enumerate_graphs(
    r: int,
    g: int,
    n: int,
    predicate: Optional[Callable[[DecoratedGraph], bool]] = None,
    nonempty: bool = False,
) -> Iterator[DecoratedGraph]:
    """Isomorphism classes of stable decorated graphs of type (g, n), in a fixed order.

    ``nonempty`` keeps only graphs whose every vertex moduli space is non-empty,
    i.e. the boundary strata that actually occur for r-spin curves.
    """
    check_r(r)
    for shape in stable_graphs(g, n):
        for d in decorations(r, shape, nonempty):
            graph = _make(r, shape.genera, shape.vertex_of, shape.edges, shape.tails, d)
            if predicate is None or predicate(graph):
                yield graph


def vertexwise_nonempty(graph: DecoratedGraph) -> bool:
    """Predicate: the selection rule holds at every vertex."""
    return all(graph.vertex_degree(v).denominator == 1 for v in range(len(graph.genera)))
