"""Example complexes and constructions.

All generators are deterministic given their arguments (seeded where random)
and label vertices with positive integers starting at 1.
"""
from __future__ import annotations

from collections import Counter, deque
from itertools import combinations, permutations
from random import Random

from .complexes import Face, SimplicialComplex, from_facets

__all__ = [
    "bipyramid",
    "simplex",
    "boundary_of_simplex",
    "graph_A",
    "bouquet_B",
    "complex_C",
    "stack_once",
    "cone",
    "boundary_complex",
    "cyclic_polytope_boundary",
    "stacked_sphere",
    "barycentric_subdivision",
    "linial_meshulam",
    "dunce_hat_8",
]


def bipyramid() -> SimplicialComplex:
    """Boundary of the bipyramid over a triangle: a 2-sphere with f = (5, 9, 6)."""
    return from_facets([
        [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5],
    ])


def simplex(d: int) -> SimplicialComplex:
    """The solid d-simplex on vertices 1..d+1."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return from_facets([range(1, d + 2)])


def boundary_of_simplex(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex: the (d-1)-sphere with d+1 facets."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return from_facets(combinations(range(1, d + 2), d))


def graph_A(k: int) -> SimplicialComplex:
    """Two triangles joined by a path of k edges.

    Vertices 1..k+5: triangle {1,2,3}, path 3, 4, ..., k+3, triangle
    {k+3, k+4, k+5}.  k+6 edges in total.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a, b = 3, k + 3
    edges = [[1, 2], [1, 3], [2, 3]]
    edges += [[v, v + 1] for v in range(a, b)]
    edges += [[b, k + 4], [b, k + 5], [k + 4, k + 5]]
    return from_facets(edges)


def bouquet_B(k: int, s: int) -> SimplicialComplex:
    """Wedge of s relabeled copies of graph_A(k).

    The designated gluing point of each copy is its first path vertex
    (vertex 3 in the graph_A labeling); it becomes vertex 1, the lex-least
    vertex of the bouquet.  All other vertices get fresh labels per copy.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    base = graph_A(k)
    width = k + 4  # fresh vertices per copy (all but the wedge point)
    edges = []
    for j in range(s):
        off = j * width
        relabel = {3: 1}
        for i, v in enumerate(u for u in range(1, k + 6) if u != 3):
            relabel[v] = 2 + off + i
        for e in base.facets:
            edges.append([relabel[v] for v in e])
    return from_facets(edges)


def complex_C(d: int, k: int) -> SimplicialComplex:
    """A d-simplex S, subdivided into k simplices by repeated stacking, with
    the boundary of F * e glued in along every boundary ridge F of S (e a
    fresh free edge), so no free ridge survives.

    Requires k = 1 mod d; the subdivision performs (k-1)/d stackings in FIFO
    order of facet creation, starting with S itself.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if k < 1 or (k - 1) % d != 0:
        raise ValueError("k must be >= 1 and equal to 1 mod d")
    S = tuple(range(1, d + 2))
    nxt = d + 2
    facets: list[tuple[int, ...]] = [S]
    for v in S:
        ridge = tuple(x for x in S if x != v)
        e = (nxt, nxt + 1)
        nxt += 2
        join = tuple(sorted(ridge + e))
        facets.extend(combinations(join, d + 1))
    queue = deque([S])
    for _ in range((k - 1) // d):
        sigma = queue.popleft()
        w = nxt
        nxt += 1
        children = [tuple(sorted(set(sigma) - {v}) + [w]) for v in sigma]
        facets.remove(sigma)
        facets.extend(children)
        queue.extend(children)
    return from_facets(facets)


def stack_once(C: SimplicialComplex, facet) -> SimplicialComplex:
    """Stellar subdivision of a top-dimensional facet: replace it by the cone
    from a fresh vertex over its boundary.  Adds dim(C) facets."""
    f = tuple(sorted(facet))
    if f not in C.facets or len(f) != C.dim + 1:
        raise ValueError(f"{tuple(facet)} is not a top-dimensional facet")
    w = max(C.vertices()) + 1
    out = [g for g in C.facets if g != f]
    out += [tuple(sorted(set(f) - {v})) + (w,) for v in f]
    return from_facets(out)


def cone(C: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Cone over C from a fresh apex (default: max vertex + 1)."""
    if apex is None:
        apex = max(C.vertices()) + 1
    elif apex in set(C.vertices()):
        raise ValueError(f"apex {apex} is already a vertex")
    return from_facets([f + (apex,) for f in C.facets])


def boundary_complex(C: SimplicialComplex) -> SimplicialComplex:
    """Closure of the codimension-one faces lying in exactly one facet."""
    if any(len(f) != C.dim + 1 for f in C.facets):
        raise ValueError("boundary is only defined for pure complexes")
    if C.dim < 1:
        raise ValueError("complex of dimension 0 has no boundary complex")
    count: Counter[Face] = Counter()
    for f in C.facets:
        count.update(combinations(f, C.dim))
    rim = [r for r, n in count.items() if n == 1]
    if not rim:
        raise ValueError("complex has empty boundary")
    return from_facets(rim)


def cyclic_polytope_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic d-polytope on n vertices, even d only.

    For even d = 2m a d-subset of the cyclic order 1..n is a facet exactly
    when it is a disjoint union of m cyclically consecutive pairs {i, i+1}
    (Gale evenness).
    """
    if d < 2 or d % 2 != 0:
        raise ValueError("d must be even and >= 2")
    if n < d + 1:
        raise ValueError("need n >= d + 1 vertices")
    m = d // 2
    facets: list[tuple[int, ...]] = []
    # pairs {s, s+1} inside 1..n: starts s_t = c_t + t are >= 2 apart
    for comb in combinations(range(1, n - m + 1), m):
        starts = [c + t for t, c in enumerate(comb)]
        face: list[int] = []
        for s in starts:
            face += [s, s + 1]
        facets.append(tuple(face))
    # arrangements using the wrapping pair {n, 1}: rest inside 2..n-1
    for comb in combinations(range(2, n - m + 1), m - 1):
        starts = [c + t for t, c in enumerate(comb)]
        face = [1, n]
        for s in starts:
            face += [s, s + 1]
        facets.append(tuple(sorted(face)))
    return from_facets(facets)


def stacked_sphere(d: int, n: int, seed: int = 0) -> SimplicialComplex:
    """Stacked d-sphere on n vertices: start with the boundary of the
    (d+1)-simplex and stack uniformly random facets.  (d+2) + d*(n-d-2)
    facets."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if n < d + 2:
        raise ValueError("need n >= d + 2 vertices")
    rng = Random(seed)
    facets = [tuple(f) for f in combinations(range(1, d + 3), d + 1)]
    for w in range(d + 3, n + 1):
        sigma = facets.pop(rng.randrange(len(facets)))
        facets.extend(tuple(sorted(set(sigma) - {v})) + (w,) for v in sigma)
    return from_facets(facets)


def barycentric_subdivision(C: SimplicialComplex) -> SimplicialComplex:
    """Flag complex of the face poset: one vertex per face of C, one facet
    per maximal chain sigma_0 < ... < sigma_k ending in a facet of C."""
    ids: dict[Face, int] = {}
    for level in C.faces_by_dim:
        for f in level:
            ids[f] = len(ids) + 1
    out = []
    for facet in C.facets:
        for order in permutations(facet):
            out.append([ids[tuple(sorted(order[:j]))] for j in range(1, len(order) + 1)])
    return from_facets(out)


def linial_meshulam(n: int, p: float, seed: int = 0) -> SimplicialComplex:
    """Random 2-complex: full 1-skeleton of K_n plus each triangle
    independently with probability p."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = Random(seed)
    facets: list[tuple[int, ...]] = [t for t in combinations(range(1, n + 1), 3)
                                     if rng.random() < p]
    facets += list(combinations(range(1, n + 1), 2))
    return from_facets(facets)


# The dunce hat: a disk whose boundary circle is glued to itself three times
# around, once against orientation.  Contractible but not collapsible.
#
# Disk: a 9-gon (rim 0..8) around an inner pentagon (9..13), 17 triangles.
# The rim is split at 0, 3, 6 into three arcs of three edges; the gluing maps
# each arc onto the arc w-x-y-w, the third one reversed, so rim vertices
# collapse into classes w = {0,3,6}, x = {1,4,8}, y = {2,5,7}.  Every quotient
# edge lies in two triangles except the three glued rim edges, which lie in
# three.
_DUNCE_DISK = [
    (0, 1, 9), (1, 2, 9), (2, 9, 10), (2, 3, 10), (3, 4, 10), (4, 10, 11),
    (4, 5, 11), (5, 6, 11), (6, 11, 12), (6, 7, 12), (7, 8, 12), (8, 12, 13),
    (8, 0, 13), (0, 13, 9), (9, 10, 11), (9, 11, 12), (9, 12, 13),
]
_DUNCE_GLUE = {
    0: 1, 3: 1, 6: 1,
    1: 2, 4: 2, 8: 2,
    2: 3, 5: 3, 7: 3,
    9: 4, 10: 5, 11: 6, 12: 7, 13: 8,
}


def dunce_hat_8() -> SimplicialComplex:
    """An 8-vertex triangulation of the dunce hat, f = (8, 24, 17)."""
    return from_facets(sorted({tuple(sorted(_DUNCE_GLUE[v] for v in t))
                               for t in _DUNCE_DISK}))
