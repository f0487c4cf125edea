"""Hasse diagram of the face poset, plus the mutable state of one run.

Faces get flat integer ids, contiguous by dimension and lexicographic within
a dimension, so id order equals (dim, lex) order.  The immutable diagram is
built once per complex; each run owns a RunState holding liveness flags and a
shrinking copy of the upward adjacency.

Processing is level by level: the run works at the top dimension that still
has live faces, and the free set tracks only faces one dimension below the
current level.  A face is free when it has exactly one live coface.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import Iterable

from .complexes import Face, SimplicialComplex

__all__ = ["HasseDiagram", "RunState"]


class HasseDiagram:
    __slots__ = (
        "complex", "faces", "dims", "offsets", "up", "down",
        "dim", "n_faces", "euler",
    )

    def __init__(self, C: SimplicialComplex):
        self.complex = C
        self.dim = C.dim
        faces: list[Face] = []
        offsets = [0]
        for level in C.faces_by_dim:
            faces.extend(level)
            offsets.append(len(faces))
        self.faces = tuple(faces)
        self.offsets = offsets
        self.n_faces = len(faces)
        self.euler = C.euler_characteristic()
        dims = [0] * self.n_faces
        for d in range(self.dim + 1):
            for i in range(offsets[d], offsets[d + 1]):
                dims[i] = d
        self.dims = dims
        index = {f: i for i, f in enumerate(faces)}
        down: list[list[int]] = [[] for _ in range(self.n_faces)]
        up: list[list[int]] = [[] for _ in range(self.n_faces)]
        for i, f in enumerate(faces):
            if len(f) == 1:
                continue
            for k in range(len(f)):
                j = index[f[:k] + f[k + 1:]]
                down[i].append(j)
                up[j].append(i)
        self.up = up
        self.down = down

    # -- lookups ------------------------------------------------------------

    def face_id(self, face: Iterable[int]) -> int:
        f = tuple(sorted(face))
        d = len(f) - 1
        if 0 <= d <= self.dim:
            lo, hi = self.offsets[d], self.offsets[d + 1]
            i = bisect_left(self.faces, f, lo, hi)
            if i < hi and self.faces[i] == f:
                return i
        raise ValueError(f"{tuple(face)} is not a face of the complex")

    def cofaces(self, face: Iterable[int]) -> tuple[Face, ...]:
        return tuple(self.faces[j] for j in self.up[self.face_id(face)])

    def subfaces(self, face: Iterable[int]) -> tuple[Face, ...]:
        return tuple(self.faces[j] for j in self.down[self.face_id(face)])

    def incidences(self) -> int:
        return sum(len(u) for u in self.up)

    def new_run(self) -> "RunState":
        return RunState(self)


class RunState:
    """Liveness bookkeeping for a single teardown of the complex.

    ``live_up[f]`` always equals the list of live cofaces of a live face f
    (cleared when f dies).  ``ops`` counts live-coface-list updates; the
    teardown touches each Hasse edge a bounded number of times.
    """

    __slots__ = (
        "h", "alive", "live_up", "remaining", "total_remaining", "level",
        "free_list", "free_pos", "cur_live", "cur_pos", "ops",
    )

    def __init__(self, h: HasseDiagram):
        self.h = h
        n = h.n_faces
        self.alive = bytearray(b"\x01") * n
        self.live_up = [list(u) for u in h.up]
        self.remaining = [h.offsets[d + 1] - h.offsets[d] for d in range(h.dim + 1)]
        self.total_remaining = n
        self.level = h.dim
        self.ops = 0
        self.free_list: list[int] = []
        self.free_pos: dict[int, int] = {}
        self.cur_live: list[int] = []
        self.cur_pos: dict[int, int] = {}
        self._rebuild_level_structures()

    # -- views used by callers and tests ------------------------------------

    @property
    def free_set(self) -> frozenset[int]:
        return frozenset(self.free_pos)

    def free_faces(self) -> tuple[Face, ...]:
        return tuple(sorted(self.h.faces[i] for i in self.free_list))

    def live_cofaces(self, face: Iterable[int]) -> tuple[Face, ...]:
        i = self.h.face_id(face)
        return tuple(self.h.faces[j] for j in self.live_up[i])

    def is_alive(self, face: Iterable[int]) -> bool:
        return bool(self.alive[self.h.face_id(face)])

    def live_ids_at(self, d: int) -> list[int]:
        lo, hi = self.h.offsets[d], self.h.offsets[d + 1]
        return [i for i in range(lo, hi) if self.alive[i]]

    # -- internal structure maintenance -------------------------------------

    def _rebuild_level_structures(self) -> None:
        h, lvl = self.h, self.level
        self.cur_live = self.live_ids_at(lvl)
        self.cur_pos = {f: k for k, f in enumerate(self.cur_live)}
        self.free_list = []
        self.free_pos = {}
        if lvl > 0:
            for i in range(h.offsets[lvl - 1], h.offsets[lvl]):
                if self.alive[i] and len(self.live_up[i]) == 1:
                    self.free_pos[i] = len(self.free_list)
                    self.free_list.append(i)

    def _drop_from(self, lst: list[int], pos: dict[int, int], f: int) -> None:
        # swap-remove keeps index sampling O(1)
        k = pos.pop(f)
        last = lst.pop()
        if last != f:
            lst[k] = last
            pos[last] = k

    def _update_free(self, rho: int) -> None:
        self.ops += 1
        is_free = len(self.live_up[rho]) == 1
        if is_free and rho not in self.free_pos:
            self.free_pos[rho] = len(self.free_list)
            self.free_list.append(rho)
        elif not is_free and rho in self.free_pos:
            self._drop_from(self.free_list, self.free_pos, rho)

    def _detach(self, f: int) -> None:
        track = self.level - 1
        dims, down = self.h.dims, self.h.down
        for rho in down[f]:
            if self.alive[rho]:
                self.live_up[rho].remove(f)
                self.ops += 1
                if dims[rho] == track:
                    self._update_free(rho)

    def _kill(self, f: int) -> None:
        self.alive[f] = 0
        self.remaining[self.h.dims[f]] -= 1
        self.total_remaining -= 1
        self.live_up[f].clear()

    # -- the three moves -----------------------------------------------------

    def remove_free_pair(self, sigma: int, tau: int) -> None:
        """Elementary collapse: delete free face sigma with its unique live
        coface tau."""
        if sigma not in self.free_pos:
            raise ValueError(f"{self.h.faces[sigma]} is not free at level {self.level}")
        if self.live_up[sigma] != [tau]:
            raise ValueError(
                f"{self.h.faces[tau]} is not the unique live coface of {self.h.faces[sigma]}"
            )
        self._drop_from(self.free_list, self.free_pos, sigma)
        self._drop_from(self.cur_live, self.cur_pos, tau)
        self._kill(sigma)
        self._kill(tau)
        self._detach(tau)
        self._detach(sigma)

    def remove_critical(self, tau: int) -> None:
        """Delete a live top-dimensional face at the current level."""
        if not self.alive[tau]:
            raise ValueError(f"{self.h.faces[tau]} is already removed")
        if self.h.dims[tau] != self.level:
            raise ValueError(
                f"{self.h.faces[tau]} has dimension {self.h.dims[tau]}, level is {self.level}"
            )
        self._drop_from(self.cur_live, self.cur_pos, tau)
        self._kill(tau)
        self._detach(tau)

    def descend_level(self) -> None:
        """Move to the next lower nonempty level and rebuild the free set."""
        if self.total_remaining == 0:
            raise ValueError("state is empty, nothing to descend to")
        if self.remaining[self.level] != 0:
            raise ValueError(f"level {self.level} still has live faces")
        while self.level > 0 and self.remaining[self.level] == 0:
            self.level -= 1
        self._rebuild_level_structures()
