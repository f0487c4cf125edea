"""Validity checks: GF(2) homology, Morse inequalities, edge-path group.

Betti numbers are computed over GF(2) only; boundary matrix columns are
packed into Python integers and eliminated by xor, which is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import BudgetExceededError, Face, SimplicialComplex

__all__ = [
    "UnionFind",
    "betti_gf2",
    "connected_components",
    "check_morse_output",
    "MorseCheckReport",
    "GroupPresentation",
    "edge_path_presentation",
]


class UnionFind:
    """Disjoint sets over arbitrary hashable items."""

    def __init__(self):
        self.parent: dict = {}
        self.size: dict = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            self.size[x] = 1
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def _rank_gf2(columns: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for v in columns:
        while v:
            b = v.bit_length() - 1
            p = pivots.get(b)
            if p is None:
                pivots[b] = v
                rank += 1
                break
            v ^= p
    return rank


def betti_gf2(C: SimplicialComplex, max_faces: int = 20000) -> tuple[int, ...]:
    """GF(2) Betti numbers (beta_0, ..., beta_dim)."""
    if C.n_faces > max_faces:
        raise BudgetExceededError(f"complex has {C.n_faces} faces, budget is {max_faces}")
    f = C.f_vector()
    ranks = [0] * (C.dim + 2)  # ranks[i] = rank of the boundary map from dim i
    for i in range(1, C.dim + 1):
        pos = {face: j for j, face in enumerate(C.faces_by_dim[i - 1])}
        cols = []
        for face in C.faces_by_dim[i]:
            v = 0
            for sub in combinations(face, i):
                v |= 1 << pos[sub]
            cols.append(v)
        ranks[i] = _rank_gf2(cols)
    return tuple(f[i] - ranks[i] - ranks[i + 1] for i in range(C.dim + 1))


def connected_components(C: SimplicialComplex) -> tuple[int, dict[int, int]]:
    """Component count and a labeling of each vertex by the least vertex of
    its component."""
    uf = UnionFind()
    for v in C.vertices():
        uf.find(v)
    if C.dim >= 1:
        for a, b in C.faces_by_dim[1]:
            uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for v in C.vertices():
        groups.setdefault(uf.find(v), []).append(v)
    labels = {}
    for members in groups.values():
        least = min(members)
        for v in members:
            labels[v] = least
    return len(groups), labels


@dataclass(frozen=True)
class MorseCheckReport:
    vector: tuple[int, ...]
    euler: int
    alternating_sum: int
    euler_ok: bool
    betti_gf2: tuple[int, ...] | None
    inequalities_ok: bool | None
    slack: tuple[int, ...] | None

    @property
    def passed(self) -> bool:
        return self.euler_ok and self.inequalities_ok is not False


def check_morse_output(C: SimplicialComplex, vector, betti=None,
                       compute_betti: bool = True) -> MorseCheckReport:
    """Check a Morse vector against the complex: alternating sum must equal
    chi, and each c_i must dominate beta_i (weak Morse inequalities)."""
    v = tuple(int(x) for x in vector)
    if len(v) != C.dim + 1:
        raise ValueError(f"vector has {len(v)} entries, complex has dimension {C.dim}")
    if any(x < 0 for x in v):
        raise ValueError("Morse vector entries must be nonnegative")
    chi = C.euler_characteristic()
    alt = sum((-1) ** i * x for i, x in enumerate(v))
    if betti is None and compute_betti:
        try:
            betti = betti_gf2(C)
        except BudgetExceededError:
            betti = None
    b = tuple(betti) if betti is not None else None
    slack = tuple(v[i] - b[i] for i in range(len(v))) if b is not None else None
    return MorseCheckReport(
        vector=v,
        euler=chi,
        alternating_sum=alt,
        euler_ok=alt == chi,
        betti_gf2=b,
        inequalities_ok=None if slack is None else all(x >= 0 for x in slack),
        slack=slack,
    )


@dataclass(frozen=True)
class GroupPresentation:
    """Edge-path presentation of the fundamental group.

    Generators are the non-tree edges of a breadth-first spanning tree, in
    lexicographic order.  Each triangle (a < b < c) contributes the relator
    ab . bc . (ac)^-1 written as signed 1-based generator indices, with tree
    edges dropped.
    """

    generators: tuple[Face, ...]
    relators: tuple[tuple[int, ...], ...]

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @property
    def n_relators(self) -> int:
        return len(self.relators)


def edge_path_presentation(C: SimplicialComplex) -> GroupPresentation:
    n_comp, _ = connected_components(C)
    if n_comp != 1:
        raise ValueError("edge-path presentation requires a connected complex")
    adj: dict[int, list[int]] = {v: [] for v in C.vertices()}
    if C.dim >= 1:
        for a, b in C.faces_by_dim[1]:
            adj[a].append(b)
            adj[b].append(a)
    root = min(adj)
    tree: set[Face] = set()
    seen = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    tree.add((v, w) if v < w else (w, v))
                    nxt.append(w)
        frontier = nxt
    gens = tuple(e for e in (C.faces_by_dim[1] if C.dim >= 1 else ()) if e not in tree)
    gen_index = {e: i + 1 for i, e in enumerate(gens)}
    relators = []
    if C.dim >= 2:
        for a, b, c in C.faces_by_dim[2]:
            word = []
            for edge, sign in (((a, b), 1), ((b, c), 1), ((a, c), -1)):
                g = gen_index.get(edge)
                if g is not None:
                    word.append(sign * g)
            relators.append(tuple(word))
    return GroupPresentation(generators=gens, relators=tuple(relators))
