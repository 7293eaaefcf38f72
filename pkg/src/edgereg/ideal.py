"""Monomial ideals over named variables.

A monomial is its exponent tuple (the multidegree). Ideals keep a minimal
generating set, stored sorted lexicographically by exponent vector.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import Graph

INF = math.inf

Monomial = tuple  # tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def minimalize(gens) -> tuple[Monomial, ...]:
    """Drop every generator divisible by another one."""
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=lambda t: (sum(t), t)):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    ring: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if len(set(self.ring)) != len(self.ring):
            raise ValueError("ring variable names must be unique")
        gens = tuple(tuple(int(x) for x in g) for g in self.gens)
        for g in gens:
            if len(g) != len(self.ring):
                raise ValueError(f"generator {g} has wrong length for ring of {len(self.ring)} variables")
            if min(g, default=0) < 0:
                raise ValueError(f"negative exponent in {g}")
        if any(sum(g) == 0 for g in gens):
            raise ValueError("unit ideal is not representable")
        object.__setattr__(self, "ring", tuple(self.ring))
        object.__setattr__(self, "gens", minimalize(gens))

    @property
    def nvars(self) -> int:
        return len(self.ring)

    def is_zero(self) -> bool:
        return not self.gens

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.gens]

    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def monomial(self, **exps) -> Monomial:
        """Build a monomial by variable name, e.g. ``I.monomial(x1=2, x3=1)``."""
        unknown = set(exps) - set(self.ring)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        return tuple(exps.get(v, 0) for v in self.ring)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, k in zip(self.ring, m):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts) or "1"

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(self.format_monomial(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"ring": list(self.ring), "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, doc) -> "MonomialIdeal":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(tuple(doc["ring"]), tuple(tuple(g) for g in doc["gens"]))


def xvars(n: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def edge_ideal(g: Graph) -> MonomialIdeal:
    gens = []
    for u, v in g.edges:
        m = [0] * g.n
        m[u - 1] = m[v - 1] = 1
        gens.append(tuple(m))
    return MonomialIdeal(xvars(g.n), tuple(gens))


def whisker_edge_ideal(g: Graph) -> MonomialIdeal:
    """I(G*) over x1..xn, y1..yn; the leaf of vertex i is y_i."""
    from .graph import whisker

    gs = whisker(g)
    gens = []
    for u, v in gs.edges:
        m = [0] * gs.n
        m[u - 1] = m[v - 1] = 1
        gens.append(tuple(m))
    return MonomialIdeal(xvars(g.n) + xvars(g.n, "y"), tuple(gens))


def add_squares(i: MonomialIdeal) -> MonomialIdeal:
    if any(sum(g) > 2 for g in i.gens):
        raise ValueError("add_squares expects an ideal generated in degrees <= 2")
    squares = []
    for k in range(i.nvars):
        m = [0] * i.nvars
        m[k] = 2
        squares.append(tuple(m))
    return MonomialIdeal(i.ring, i.gens + tuple(squares))


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ring(a, b)
    return MonomialIdeal(a.ring, tuple(mul(g, h) for g in a.gens for h in b.gens))


def power(i: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise ValueError("power needs s >= 1 (the unit ideal is not represented)")
    out = i
    for _ in range(s - 1):
        out = product(out, i)
    return out


def contains(i: MonomialIdeal, m: Monomial) -> bool:
    m = tuple(m)
    if len(m) != i.nvars:
        raise ValueError(f"monomial of length {len(m)} does not belong to a ring of {i.nvars} variables")
    return any(divides(g, m) for g in i.gens)


def ideal_contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    _check_ring(big, small)
    return all(contains(big, g) for g in small.gens)


def same_ideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Equality up to reordering of the ring's variables (matched by name)."""
    if set(a.ring) != set(b.ring):
        return False
    return a.gens == rename(b, {}, order=a.ring).gens


def rename(i: MonomialIdeal, mapping: dict, order: Sequence[str] | None = None) -> MonomialIdeal:
    """Rename variables via ``mapping`` and optionally reorder the ring to ``order``."""
    names = tuple(mapping.get(v, v) for v in i.ring)
    if order is None:
        return MonomialIdeal(names, i.gens)
    if sorted(order) != sorted(names):
        raise ValueError("order must be a permutation of the ring")
    pos = [names.index(v) for v in order]
    return MonomialIdeal(tuple(order), tuple(tuple(g[p] for p in pos) for g in i.gens))


def _check_ring(a: MonomialIdeal, b: MonomialIdeal):
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring} vs {b.ring}")


# ---------------------------------------------------------------------------
# polarization

def prime_names(name: str, j: int) -> str:
    return name + "'" * (j - 1)


def whisker_names(name: str, j: int) -> str:
    """x_k's second copy becomes y_k, matching the leaves of the whisker graph."""
    m = re.fullmatch(r"x(\d+)", name)
    if j == 2 and m:
        return "y" + m.group(1)
    return prime_names(name, j)


def polarize(i: MonomialIdeal, names: Callable[[str, int], str] = prime_names) -> MonomialIdeal:
    """Standard polarization; copy j of variable v is named ``names(v, j)``.

    The first copy keeps the original name. Extra copies are appended to the
    ring grouped by copy index: all second copies, then all third copies, ...
    """
    top = [max((g[k] for g in i.gens), default=0) for k in range(i.nvars)]
    slots = [(k, 1) for k in range(i.nvars)]
    for j in range(2, max(top, default=0) + 1):
        slots += [(k, j) for k in range(i.nvars) if top[k] >= j]
    ring = tuple(i.ring[k] if j == 1 else names(i.ring[k], j) for k, j in slots)
    gens = [tuple(1 if g[k] >= j else 0 for k, j in slots) for g in i.gens]
    return MonomialIdeal(ring, tuple(gens))


# ---------------------------------------------------------------------------
# restriction

def restrict(i: MonomialIdeal, caps: Sequence) -> MonomialIdeal:
    """Ideal generated by the generators with multidegree <= caps; cap-0 variables are dropped."""
    caps = tuple(caps)
    if len(caps) != i.nvars:
        raise ValueError("restriction vector length differs from the ring")
    if any(c < 0 for c in caps):
        raise ValueError("caps must be nonnegative (or INF)")
    keep = [k for k, c in enumerate(caps) if c != 0]
    gens = [g for g in i.gens if all(x <= c for x, c in zip(g, caps))]
    return MonomialIdeal(tuple(i.ring[k] for k in keep), tuple(tuple(g[k] for k in keep) for g in gens))


def whisker_caps(n: int) -> tuple:
    """(INF,...,INF, 0,...,0): keep x1..xn, kill y1..yn."""
    return (INF,) * n + (0,) * n


# ---------------------------------------------------------------------------
# Artinian quotients

def is_artinian(j: MonomialIdeal) -> bool:
    pure = {k for g in j.gens for k in range(j.nvars) if g[k] > 0 and sum(g) == g[k]}
    return len(pure) == j.nvars


def standard_monomials(j: MonomialIdeal) -> list[Monomial]:
    """All monomials outside j, sorted by degree then exponent vector."""
    if not is_artinian(j):
        raise ValueError("standard monomials are finite only for Artinian ideals")
    one = (0,) * j.nvars
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for u in frontier:
            for k in range(j.nvars):
                w = u[:k] + (u[k] + 1,) + u[k + 1:]
                if w not in seen and not contains(j, w):
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen, key=lambda t: (sum(t), t))


def socle_monomials(j: MonomialIdeal) -> list[Monomial]:
    out = []
    for u in standard_monomials(j):
        if all(contains(j, u[:k] + (u[k] + 1,) + u[k + 1:]) for k in range(j.nvars)):
            out.append(u)
    return out


def socle_degrees(j: MonomialIdeal) -> list[int]:
    return sorted(sum(u) for u in socle_monomials(j))
