"""Multigraded Betti numbers and regularity of monomial ideals.

Two independent routes:

* ``betti_multigraded`` reads beta_{i,a}(I) off the upper Koszul complex
  K^a(I) = {sigma in supp(a) : x^a / x^sigma in I} at each a in the lcm lattice.
* ``betti_gpw_oracle`` uses the order complex of the open interval (0, a) of
  the lcm lattice, never looking at individual variables.

Both report beta_{i,a}(I) = dim H~_{i-1}(complex), where i = 0 counts
minimal generators.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .homology import SimplicialComplex, homology_from_facets, reduced_homology
from .ideal import MonomialIdeal

DEFAULT_LATTICE_CAP = 200_000


class LatticeCapError(RuntimeError):
    """The lcm lattice outgrew the configured size cap."""


def _pack(rows: np.ndarray) -> list[int]:
    """Boolean rows -> Python int bitmasks (bit k = column k)."""
    if rows.shape[0] == 0:
        return []
    ncols = rows.shape[1]
    if ncols <= 62:
        w = np.left_shift(np.int64(1), np.arange(ncols, dtype=np.int64))
        return [int(x) for x in rows.astype(np.int64) @ w]
    out = []
    for r in rows:
        packed = np.packbits(r, bitorder="little")
        out.append(int.from_bytes(packed.tobytes(), "little"))
    return out


# ---------------------------------------------------------------------------
# Koszul complexes

def koszul_facets(gens: np.ndarray, a: np.ndarray) -> list[int]:
    """Facets {v : g_v <= a_v - 1} for each generator g dividing x^a, as bitmasks."""
    div = (gens <= a).all(axis=1)
    return _pack(gens[div] <= a - 1)


def koszul_complex(i: MonomialIdeal, a) -> SimplicialComplex:
    a = np.asarray(a, dtype=np.int64)
    if a.shape != (i.nvars,):
        raise ValueError("multidegree length differs from the ring")
    support = [i.ring[k] for k in range(i.nvars) if a[k] > 0]
    if i.is_zero():
        return SimplicialComplex.void(support)
    masks = koszul_facets(np.array(i.gens, dtype=np.int64), a)
    facets = [[i.ring[k] for k in range(i.nvars) if m >> k & 1] for m in masks]
    if not facets:
        return SimplicialComplex.void(support)
    return SimplicialComplex.from_facets(facets, vertex_ids=support)


# ---------------------------------------------------------------------------
# lcm lattice

@dataclass(frozen=True)
class LcmLattice:
    ring: tuple
    gens: tuple
    elements: tuple  # sorted by (degree, exponents)
    provenance: dict = field(compare=False, repr=False)  # element -> (smaller element, generator) it was joined from

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return tuple(a) in self.provenance or tuple(a) in set(self.gens)

    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64).reshape(len(self.elements), len(self.ring))


def _row_keys(top: np.ndarray):
    """Weights turning exponent rows bounded by ``top`` into distinct int64 keys, or None."""
    base = top.astype(object) + 1
    w, acc = [], 1
    for b in base:
        w.append(acc)
        acc *= int(b)
    if acc >= 2**62:
        return None
    return np.array(w, dtype=np.int64)


@lru_cache(maxsize=256)
def lcm_lattice(i: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    if i.is_zero():
        raise ValueError("lcm lattice of the zero ideal is undefined")
    G = np.array(i.gens, dtype=np.int64)
    m, n = G.shape
    w = _row_keys(G.max(axis=0))
    seen: set = set(i.gens) if w is None else set((G @ w).tolist())
    elements = list(i.gens)
    prov: dict = {}
    frontier = G
    block = max(1, 2_000_000 // max(1, m * n))
    while len(frontier):
        new = []
        for start in range(0, len(frontier), block):
            F = frontier[start:start + block]
            J = np.maximum(F[:, None, :], G[None, :, :]).reshape(-1, n)
            if w is None:
                uniq, idx = np.unique(J, axis=0, return_index=True)
                keys = [tuple(r) for r in uniq.tolist()]
            else:
                keys, idx = np.unique(J @ w, return_index=True)
                keys = keys.tolist()
            for key, k in zip(keys, idx.tolist()):
                if key not in seen:
                    seen.add(key)
                    t = tuple(J[k].tolist())
                    prov[t] = (tuple(F[k // m].tolist()), i.gens[k % m])
                    new.append(t)
                    if len(seen) > cap:
                        raise LatticeCapError(
                            f"lcm lattice exceeds cap of {cap} elements ({len(i.gens)} generators, {n} variables)")
        elements.extend(new)
        frontier = np.array(new, dtype=np.int64).reshape(-1, n)
    elements.sort(key=lambda t: (sum(t), t))
    return LcmLattice(i.ring, i.gens, tuple(elements), prov)


# ---------------------------------------------------------------------------
# Betti tables

@dataclass(frozen=True)
class BettiTable:
    ring: tuple
    entries: dict  # (i, multidegree tuple) -> positive int

    def graded(self) -> dict:
        out: dict = defaultdict(int)
        for (i, a), d in self.entries.items():
            out[(i, sum(a))] += d
        return dict(sorted(out.items()))

    def totals(self) -> list[int]:
        out = [0] * (self.projdim + 1)
        for (i, _), d in self.entries.items():
            out[i] += d
        return out

    @property
    def regularity(self) -> int:
        return max(sum(a) - i for i, a in self.entries)

    @property
    def projdim(self) -> int:
        return max(i for i, _ in self.entries)

    def to_json(self) -> dict:
        ents = sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))
        return {
            "ring": list(self.ring),
            "entries": [{"i": i, "a": list(a), "dim": d} for (i, a), d in ents],
            "graded": [{"i": i, "j": j, "dim": d} for (i, j), d in self.graded().items()],
            "regularity": self.regularity,
            "projdim": self.projdim,
        }

    @classmethod
    def from_json(cls, doc) -> "BettiTable":
        if isinstance(doc, str):
            doc = json.loads(doc)
        entries = {(e["i"], tuple(e["a"])): e["dim"] for e in doc["entries"]}
        return cls(tuple(doc["ring"]), entries)

    def diagram(self) -> str:
        """Macaulay2-style diagram: columns i, rows j - i."""
        g = self.graded()
        rows = range(min(j - i for i, j in g), self.regularity + 1)
        cols = range(self.projdim + 1)
        cells = [[str(g[(i, r + i)]) if (i, r + i) in g else "." for i in cols] for r in rows]
        totals = [str(t) for t in self.totals()]
        width = max(len(x) for x in [*totals, *(str(i) for i in cols), *(c for row in cells for c in row)])
        lab = max(len("total:"), max(len(f"{r}:") for r in rows))
        lines = [" " * lab + " " + " ".join(str(i).rjust(width) for i in cols),
                 "total:".rjust(lab) + " " + " ".join(t.rjust(width) for t in totals)]
        for r, row in zip(rows, cells):
            lines.append(f"{r}:".rjust(lab) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def _record(entries: dict, a: tuple, h: list[int]):
    for k, d in enumerate(h):
        if d:
            entries[(k, a)] = d


@lru_cache(maxsize=512)
def betti_multigraded(i: MonomialIdeal, field: int | None = None,
                      lattice_cap: int = DEFAULT_LATTICE_CAP) -> BettiTable:
    """beta_{i,a} = dim H~_{i-1}(K^a(I)) over the lcm lattice."""
    if i.is_zero():
        raise ValueError("Betti table of the zero ideal is undefined")
    lat = lcm_lattice(i, lattice_cap)
    L = lat.array()
    G = np.array(i.gens, dtype=np.int64)
    m, n = G.shape
    entries: dict = {}
    block = max(1, 4_000_000 // max(1, m * n))
    for start in range(0, len(L), block):
        A = L[start:start + block]
        div = (G[None, :, :] <= A[:, None, :]).all(axis=2)
        T = G[None, :, :] <= A[:, None, :] - 1
        for r in range(len(A)):
            facets = _pack(T[r][div[r]])
            _record(entries, lat.elements[start + r], homology_from_facets(facets, field))
    return BettiTable(i.ring, entries)


def _thermometer(L: np.ndarray, top: np.ndarray):
    """Encode exponent rows so that x <= y componentwise iff bits(x) & ~bits(y) == 0.

    Exponent k of a variable with maximum m occupies k of that variable's m
    bits. Returns None when the code does not fit in an int64.
    """
    if int(top.sum()) > 62:
        return None
    out = np.zeros(len(L), dtype=np.int64)
    shift = 0
    for k, m in enumerate(top.tolist()):
        out |= ((np.int64(1) << L[:, k]) - 1) << shift
        shift += m
    return out


class _Order:
    """Componentwise order on lattice elements sorted by degree."""

    def __init__(self, L: np.ndarray, atoms: np.ndarray):
        self.L = L
        deg = L.sum(axis=1)
        self.first_of_deg = np.searchsorted(deg, deg, side="left")
        top = L.max(axis=0)
        self.bits = _thermometer(L, top)
        self.atom_bits = None if self.bits is None else _thermometer(atoms, top)
        self.atoms = atoms

    def below(self, t: int):
        """Elements strictly below element t (all have smaller degree), ascending degree."""
        k = self.first_of_deg[t]
        if self.bits is not None:
            cand = self.bits[:k]
            return cand[(cand & ~self.bits[t]) == 0]
        cand = self.L[:k]
        return cand[(cand <= self.L[t]).all(axis=1)]

    def leq(self, xs, y):
        if self.bits is not None:
            return (xs & ~y) == 0
        return (xs <= y).all(axis=1)

    def coatoms(self, P) -> list:
        """Maximal elements of P, scanning from the highest degree down."""
        rest = P[::-1]
        out = []
        while len(rest):
            top = rest[0]
            out.append(top)
            rest = rest[~self.leq(rest, top)]
        return out

    def atoms_under(self, b):
        xs = self.atom_bits if self.bits is not None else self.atoms
        return self.leq(xs, b)


def order_complex(elements: list, less) -> SimplicialComplex:
    """Chains of a finite poset as a simplicial complex (vertices = element indices)."""
    k = len(elements)
    up = [[j for j in range(k) if less(elements[i], elements[j])] for i in range(k)]
    faces = {frozenset()}

    def grow(chain, last):
        faces.add(frozenset(chain))
        for j in up[last]:
            grow(chain + [j], j)

    for i in range(k):
        grow([i], i)
    return SimplicialComplex(tuple(range(k)), frozenset(faces))


@lru_cache(maxsize=512)
def betti_gpw_oracle(i: MonomialIdeal, field: int | None = None,
                     lattice_cap: int = DEFAULT_LATTICE_CAP, method: str = "crosscut") -> BettiTable:
    """beta_{i,a} = dim H~_{i-1} of the order complex of the open interval (0, a).

    ``method="chains"`` builds the order complex literally (small lattices only).
    ``method="crosscut"`` replaces it by the homotopy-equivalent crosscut
    complex on the coatoms of [0, a]: coatom sets whose meet is not 0, i.e.
    which lie above a common atom.
    """
    if i.is_zero():
        raise ValueError("Betti table of the zero ideal is undefined")
    if method not in ("crosscut", "chains"):
        raise ValueError(f"unknown method {method!r}")
    lat = lcm_lattice(i, lattice_cap)
    order = _Order(lat.array(), np.array(lat.gens, dtype=np.int64))
    entries: dict = {}
    for t, a in enumerate(lat.elements):
        P = order.below(t)
        if len(P) == 0:
            _record(entries, a, [1])
            continue
        if method == "chains":
            below = [x for x in lat.elements[:order.first_of_deg[t]] if all(u <= v for u, v in zip(x, a))]
            k = order_complex(below, lambda x, y: x != y and all(u <= v for u, v in zip(x, y)))
            _record(entries, a, reduced_homology(k, field))
            continue
        coatoms = order.coatoms(P)
        if len(coatoms) == 1:
            continue  # the interval has a top element: contractible
        # facet of atom g: the coatoms above g
        under = np.stack([order.atoms_under(b) for b in coatoms])
        _record(entries, a, homology_from_facets(_pack(under.T), field))
    return BettiTable(i.ring, entries)


def regularity(i: MonomialIdeal, field: int | None = None, lattice_cap: int = DEFAULT_LATTICE_CAP) -> int:
    """reg of the ideal I (one more than reg of S/I)."""
    return betti_multigraded(i, field, lattice_cap).regularity


def betti_scan(i: MonomialIdeal, field: int | None = None) -> BettiTable:
    """Brute force over every multidegree below the join of all generators.

    Only for tiny ideals; used to confirm nothing lives off the lcm lattice.
    """
    if i.is_zero():
        raise ValueError("Betti table of the zero ideal is undefined")
    top = np.max(np.array(i.gens), axis=0)
    entries: dict = {}
    for a in np.ndindex(*(top + 1)):
        k = koszul_complex(i, a)
        if k.is_void():
            continue
        _record(entries, tuple(a), reduced_homology(k, field))
    return BettiTable(i.ring, entries)



class FieldDisagreement(RuntimeError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def verify_field_agreement(p: int, ideals) -> int:
    """Raise FieldDisagreement unless GF(p) and Q give identical Betti tables on ``ideals``.

    Returns the number of ideals compared.
    """
    count = 0
    for i in ideals:
        q = betti_multigraded(i)
        fp = betti_multigraded(i, p)
        if q != fp:
            raise FieldDisagreement(f"Betti tables of {i} differ between Q and GF({p})")
        count += 1
    return count
