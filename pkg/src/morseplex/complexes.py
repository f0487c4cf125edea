"""Finite abstract simplicial complexes.

A face is a tuple of strictly increasing positive integer vertex ids; its
dimension is one less than its length.  A complex is stored as its facet list
plus the full closure bucketed by dimension, both in lexicographic order, so
every downstream consumer sees one canonical representation.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import IO, Iterable

__all__ = [
    "SimplicialComplex",
    "from_facets",
    "as_simplicial_complex",
    "read_complex",
    "write_complex",
    "BudgetExceededError",
]

Face = tuple[int, ...]


class BudgetExceededError(ValueError):
    """Raised when an exact computation would exceed its size budget."""


def _check_face(entry: Iterable[int], pos: int) -> Face:
    vs = list(entry)
    if not vs:
        raise ValueError(f"facet #{pos} is empty")
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"facet #{pos}: vertex ids must be positive integers, got {v!r}")
    if len(set(vs)) != len(vs):
        raise ValueError(f"facet #{pos} has repeated vertices: {vs}")
    return tuple(sorted(vs))


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple[Face, ...]
    faces_by_dim: tuple[tuple[Face, ...], ...]
    pruned_input: bool = field(default=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    @property
    def n_faces(self) -> int:
        return sum(len(level) for level in self.faces_by_dim)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.faces_by_dim)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector()))

    def vertices(self) -> tuple[int, ...]:
        return tuple(v for (v,) in self.faces_by_dim[0])

    def has_face(self, face: Iterable[int]) -> bool:
        f = tuple(sorted(face))
        d = len(f) - 1
        return 0 <= d <= self.dim and f in set(self.faces_by_dim[d])

    def __repr__(self) -> str:  # keep prints short in test output
        return f"SimplicialComplex(f={self.f_vector()}, facets={len(self.facets)})"


def from_facets(raw: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from a facet list.

    Duplicate entries and entries contained in another entry are dropped and
    flagged via ``pruned_input``.  Vertex ids may be arbitrary positive
    integers; no contiguity is required.
    """
    entries = [_check_face(e, i) for i, e in enumerate(raw)]
    if not entries:
        raise ValueError("facet list is empty")
    pruned = len(set(entries)) != len(entries)
    # Insert largest first: an entry already present in the closure of the
    # kept facets is redundant.
    closure: set[Face] = set()
    kept: list[Face] = []
    for f in sorted(set(entries), key=lambda t: (-len(t), t)):
        if f in closure:
            pruned = True
            continue
        kept.append(f)
        for k in range(1, len(f) + 1):
            closure.update(combinations(f, k))
    top = max(len(f) for f in kept)
    by_dim = [[] for _ in range(top)]
    for f in closure:
        by_dim[len(f) - 1].append(f)
    return SimplicialComplex(
        facets=tuple(sorted(kept)),
        faces_by_dim=tuple(tuple(sorted(level)) for level in by_dim),
        pruned_input=pruned,
    )


def as_simplicial_complex(X) -> SimplicialComplex:
    """Coerce input to a SimplicialComplex.

    Accepts a SimplicialComplex (returned as is), a path to a facet file, or
    an iterable of facets.
    """
    if isinstance(X, SimplicialComplex):
        return X
    if isinstance(X, (str, os.PathLike)):
        return read_complex(X)
    if isinstance(X, Iterable):
        return from_facets(X)
    raise TypeError(f"cannot interpret {type(X).__name__} as a simplicial complex")


# ---------------------------------------------------------------------------
# io
#
# Text format: one facet per line, whitespace-separated vertex ids; blank
# lines and '#' comments are skipped.  JSON format: {"facets": [[...], ...]}.


def _parse_text(text: str) -> SimplicialComplex:
    raw: list[list[int]] = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            raw.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ValueError(f"line {ln}: {exc}") from None
    if not raw:
        raise ValueError("no facets found in input")
    return from_facets(raw)


def _parse_json(text: str) -> SimplicialComplex:
    data = json.loads(text)
    if not isinstance(data, dict) or "facets" not in data:
        raise ValueError('JSON complex must be an object with a "facets" key')
    return from_facets(data["facets"])


def read_complex(source: str | os.PathLike | IO[str], format: str | None = None) -> SimplicialComplex:
    """Read a complex from a path or text stream.

    ``format`` is "text" or "json"; by default it is inferred from the file
    extension, falling back to content sniffing.
    """
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        if format is None:
            format = "json" if path.endswith(".json") else None
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source.read()
    if format is None:
        format = "json" if text.lstrip()[:1] == "{" else "text"
    if format == "json":
        return _parse_json(text)
    if format == "text":
        return _parse_text(text)
    raise ValueError(f"unknown format {format!r}")


def write_complex(C: SimplicialComplex, format: str = "text") -> str:
    """Serialize the facet list; facets and vertices in ascending order."""
    if format == "text":
        return "".join(" ".join(map(str, f)) + "\n" for f in C.facets)
    if format == "json":
        return json.dumps({"facets": [list(f) for f in C.facets]}) + "\n"
    raise ValueError(f"unknown format {format!r}")
