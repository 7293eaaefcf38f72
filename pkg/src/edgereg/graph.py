"""Finite simple graphs, stable sets, induced matchings and independence bounds.

Vertices are labelled 1..n. Internally vertex sets are bitmasks with bit
``v - 1`` standing for vertex ``v``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Malformed edge-list document."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {{{u},{v}}} outside 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def e(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg[1:]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def adjacency(self) -> list[int]:
        """Neighbourhood bitmask of each vertex, indexed 0..n-1."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen, stack = 1, [0]
        while stack:
            v = stack.pop()
            nb = adj[v] & ~seen
            seen |= nb
            stack.extend(_bits(nb))
        return seen == (1 << self.n) - 1

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {(min(u, v), max(u, v))})

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, doc) -> "Graph":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls.from_edges(doc["n"], doc["edges"])

    def to_text(self) -> str:
        lines = [f"{self.n} {self.e}"] + [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_to_set(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in _bits(mask))


def parse_graph(text: str) -> Graph:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphParseError(1, "empty document, expected header 'n m'")
    lineno, header = lines[0]
    try:
        n, m = (int(t) for t in header.split())
    except ValueError:
        raise GraphParseError(lineno, f"expected header 'n m', got {header!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError(lineno, "negative count in header")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise GraphParseError(where, f"header announces {m} edges, found {len(body)}")
    edges = set()
    for lineno, ln in body:
        parts = ln.split()
        try:
            u, v = (int(t) for t in parts)
        except ValueError:
            raise GraphParseError(lineno, f"expected 'u v', got {ln!r}") from None
        if u == v:
            raise GraphParseError(lineno, f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(lineno, f"vertex out of range 1..{n}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# stable sets

@dataclass(frozen=True)
class StableSetReport:
    alpha: int
    c: int
    witness: tuple[int, ...]
    maximal_set_sizes: tuple[int, ...]


def maximal_stable_sets(g: Graph) -> list[int]:
    """All inclusion-maximal stable sets as bitmasks (Bron-Kerbosch on the complement)."""
    if g.n == 0:
        return [0]
    adj = g.adjacency()
    full = (1 << g.n) - 1
    # non-neighbours, excluding the vertex itself
    co = [full & ~adj[v] & ~(1 << v) for v in range(g.n)]
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: bin(co[u] & p).count("1"))
        for v in _bits(p & ~co[pivot]):
            b = 1 << v
            expand(r | b, p & co[v], x & co[v])
            p &= ~b
            x |= b

    expand(0, full, 0)
    return out


def max_stable_size(g: Graph) -> int:
    """Exact independence number by bitset branch and bound."""
    adj = g.adjacency()
    best = 0

    def greedy(cand):
        k = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~adj[v] & ~(1 << v)
            k += 1
        return k

    def search(cand, size):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = max(best, size)
            return
        # branch on a vertex of maximum degree within the candidate set
        v = max(_bits(cand), key=lambda u: bin(adj[u] & cand).count("1"))
        if adj[v] & cand == 0:
            # isolated within cand: take all of them greedily
            best = max(best, size + greedy(cand))
            return
        search(cand & ~adj[v] & ~(1 << v), size + 1)
        search(cand & ~(1 << v), size)

    full = (1 << g.n) - 1
    best = greedy(full)
    search(full, 0)
    return best


def alpha(g: Graph) -> StableSetReport:
    if g.n > 20:
        raise ValueError("exact stable-set search is limited to n <= 20")
    a = max_stable_size(g)
    maximal = maximal_stable_sets(g)
    sizes = tuple(sorted(bin(m).count("1") for m in maximal))
    witness = min(_mask_to_set(m) for m in maximal if bin(m).count("1") == a)
    return StableSetReport(alpha=a, c=a - 1, witness=witness, maximal_set_sizes=sizes)


def is_stable(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return not any(u in vs and v in vs for u, v in g.edges)


def induced_matching_number(g: Graph) -> int:
    adj = g.adjacency()
    edges = g.sorted_edges()
    closed = [adj[u - 1] | adj[v - 1] | (1 << (u - 1)) | (1 << (v - 1)) for u, v in edges]
    masks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in edges]
    best = 0

    def rec(i, blocked, size):
        nonlocal best
        if size > best:
            best = size
        # each further matching edge needs two fresh vertices
        free = bin(((1 << g.n) - 1) & ~blocked).count("1")
        if size + free // 2 <= best:
            return
        for j in range(i, len(edges)):
            if masks[j] & blocked == 0:
                rec(j + 1, blocked | closed[j], size + 1)

    rec(0, 0, 0)
    return best


def whisker(g: Graph) -> Graph:
    """Attach a pendant leaf ``n + i`` to every vertex ``i``."""
    if g.n == 0:
        raise ValueError("whisker of the empty graph is undefined")
    return Graph(2 * g.n, g.edges | {(i, g.n + i) for i in range(1, g.n + 1)})


def is_very_well_covered(g: Graph) -> bool:
    if g.n == 0 or g.n % 2:
        return False
    if any(d == 0 for d in g.degrees()):
        return False
    half = g.n // 2
    return all(bin(m).count("1") == half for m in maximal_stable_sets(g))


def hansen_bound(n: int, e: int) -> int:
    """floor(1/2 + sqrt(1/4 + n^2 - n - 2e)) in integer arithmetic.

    This is the largest k with k(k-1) <= n^2 - n - 2e.
    """
    if n < 0 or e < 0:
        raise ValueError("n and e must be nonnegative")
    r = n * n - n - 2 * e
    if r < 0:
        raise ValueError(f"negative radicand: e={e} exceeds n(n-1)/2 for n={n}")
    lo, hi = 1, n + 1  # k(k-1) <= n(n-1) forces k <= n when n >= 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * (mid - 1) <= r:
            lo = mid
        else:
            hi = mid - 1
    return lo


def kwok_bound(g: Graph) -> Fraction:
    d = g.max_degree
    if d == 0:
        raise ValueError("Kwok bound needs an edge (maximum degree is 0)")
    return Fraction(g.n) - Fraction(g.e, d)


# ---------------------------------------------------------------------------
# families and corpora

def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def random_graph(n: int, p, seed: int) -> Graph:
    """G(n, p) with exact rational p.

    Pairs are visited in lexicographic order and each is kept iff
    ``rng.randrange(den) < num`` for ``random.Random(seed)``.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = random.Random(seed)
    edges = [uv for uv in combinations(range(1, n + 1), 2)
             if rng.randrange(p.denominator) < p.numerator]
    return Graph(n, frozenset(edges))


def family(name: str, *params) -> Graph:
    if name == "path":
        return path(int(params[0]))
    if name == "cycle":
        return cycle(int(params[0]))
    if name == "complete":
        return complete(int(params[0]))
    if name == "random":
        n, p, seed = params
        return random_graph(int(n), Fraction(p), int(seed))
    raise ValueError(f"unknown family {name!r}")


def connected_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n <= 7 vertices.

    Classes follow the order of the networkx graph atlas; atlas node k
    becomes vertex k + 1.
    """
    import networkx as nx

    if not 1 <= n <= 7:
        raise ValueError("atlas enumeration covers 1 <= n <= 7")
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            out.append(Graph(n, frozenset((u + 1, v + 1) for u, v in h.edges())))
    return out
