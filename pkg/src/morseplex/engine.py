"""Teardown engine.

One run deletes the whole complex: while free faces exist at the current
level, delete a free face together with its unique live coface (an elementary
collapse); otherwise delete one top-dimensional face at the current level and
count it as critical.  The output is the vector of critical face counts per
dimension.  The vector (1, 0, ..., 0) certifies collapsibility.

Strategies: "random" picks uniformly (among free faces, respectively among
live top faces), "lex" picks the lexicographically least face, "revlex" the
greatest.  The choice is uniform over free faces, not over (face, coface)
pairs; the coface is forced.

Normalized runs behave identically until the live complex is at most
1-dimensional, then switch to a deterministic endgame: first remove cycle
edges as critical (lexicographically least edge lying on a cycle, repeatedly),
then collapse the remaining forest leaf first, leaving one critical vertex per
component.  On connected input this forces c_0 = 1.

Per-round seeds are derived as SHA-256(master_seed || round_index), both
packed as little-endian u64, truncated to 8 bytes.  The derivation is fixed so
that results are bit-reproducible for any worker count.
"""
from __future__ import annotations

import hashlib
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from random import Random

from .complexes import Face, SimplicialComplex, as_simplicial_complex
from .hasse import HasseDiagram, RunState
from .spectra import Spectrum

__all__ = [
    "CollapseTrace",
    "TraceInvalidError",
    "MorseVector",
    "run_once",
    "run_once_normalized",
    "run_many",
    "verify_trace",
    "round_seed",
]

MorseVector = tuple[int, ...]

_STRATEGIES = ("random", "lex", "revlex")


@dataclass
class CollapseTrace:
    """Replayable certificate of one run.

    Events are ("pair", sigma, tau) and ("critical", tau) with faces as
    vertex tuples, in execution order.  ``normalized`` marks runs that used
    the deterministic 1-dimensional endgame, whose cycle-edge removals are
    legal even when free vertices exist.
    """

    events: list[tuple] = field(default_factory=list)
    normalized: bool = False

    def __len__(self) -> int:
        return len(self.events)


class TraceInvalidError(ValueError):
    def __init__(self, index: int, reason: str):
        self.index = index
        self.reason = reason
        super().__init__(f"trace invalid at event {index}: {reason}")


def round_seed(master_seed: int, index: int) -> int:
    """Deterministic per-round seed, independent of worker scheduling."""
    raw = struct.pack("<QQ", master_seed & 0xFFFFFFFFFFFFFFFF, index & 0xFFFFFFFFFFFFFFFF)
    return int.from_bytes(hashlib.sha256(raw).digest()[:8], "little")


def _as_hasse(target) -> HasseDiagram:
    if isinstance(target, HasseDiagram):
        return target
    return HasseDiagram(as_simplicial_complex(target))


# ---------------------------------------------------------------------------
# endgame graph helpers (live 1-skeleton)


def _live_edge_adjacency(st: RunState) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = {}
    if st.h.dim < 1:
        return adj
    lo, hi = st.h.offsets[1], st.h.offsets[2]
    for e in range(lo, hi):
        if st.alive[e]:
            a, b = st.h.faces[e]
            adj.setdefault(a, []).append((b, e))
            adj.setdefault(b, []).append((a, e))
    return adj


def _bridge_edge_ids(adj: dict[int, list[tuple[int, int]]]) -> set[int]:
    # iterative Tarjan; parent edge id distinguishes the tree edge
    bridges: set[int] = set()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    timer = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list] = [[root, -1, adj[root], 0]]
        while stack:
            frame = stack[-1]
            v, parent_edge, nbrs, i = frame
            if i < len(nbrs):
                frame[3] = i + 1
                w, e = nbrs[i]
                if e == parent_edge:
                    continue
                if w in disc:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, e, adj[w], 0])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] > disc[u]:
                        bridges.add(parent_edge)
    return bridges


def _lex_least_cycle_edge(st: RunState) -> int | None:
    adj = _live_edge_adjacency(st)
    bridges = _bridge_edge_ids(adj)
    best = None
    lo, hi = st.h.offsets[1], st.h.offsets[2]
    for e in range(lo, hi):
        if st.alive[e] and e not in bridges:
            best = e
            break
    return best


def _edge_on_live_cycle(st: RunState, e: int) -> bool:
    # independent check used by the verifier: endpoints stay connected
    # without the edge itself
    a, b = st.h.faces[e]
    adj = _live_edge_adjacency(st)
    seen = {a}
    queue = [a]
    while queue:
        v = queue.pop()
        for w, ee in adj.get(v, ()):
            if ee != e and w not in seen:
                if w == b:
                    return True
                seen.add(w)
                queue.append(w)
    return False


# ---------------------------------------------------------------------------
# the run loop


def _run(h: HasseDiagram, strategy: str, seed, finisher: bool, collect_trace: bool):
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {_STRATEGIES}")
    mode = _STRATEGIES.index(strategy)
    rng = seed if isinstance(seed, Random) else Random(seed)
    st = h.new_run()
    c = [0] * (h.dim + 1)
    events: list[tuple] | None = [] if collect_trace else None
    faces = h.faces
    dims = h.dims
    endgame = False
    cycles_done = False
    while st.total_remaining:
        if st.remaining[st.level] == 0:
            st.descend_level()
            continue
        if finisher and not endgame and st.level <= 1:
            endgame = True
        if endgame and st.level == 1:
            if not cycles_done:
                e = _lex_least_cycle_edge(st)
                if e is None:
                    cycles_done = True
                else:
                    st.remove_critical(e)
                    c[1] += 1
                    if events is not None:
                        events.append(("critical", faces[e]))
                    continue
            if not st.free_list:
                raise RuntimeError("internal: live forest without a leaf")
            sigma = min(st.free_list)
            tau = st.live_up[sigma][0]
            st.remove_free_pair(sigma, tau)
            if events is not None:
                events.append(("pair", faces[sigma], faces[tau]))
            continue
        if endgame and st.level == 0:
            tau = min(st.cur_live)
            st.remove_critical(tau)
            c[0] += 1
            if events is not None:
                events.append(("critical", faces[tau]))
            continue
        if st.free_list:
            if mode == 0:
                sigma = st.free_list[rng.randrange(len(st.free_list))]
            elif mode == 1:
                sigma = min(st.free_list)
            else:
                sigma = max(st.free_list)
            tau = st.live_up[sigma][0]
            st.remove_free_pair(sigma, tau)
            if events is not None:
                events.append(("pair", faces[sigma], faces[tau]))
        else:
            if mode == 0:
                tau = st.cur_live[rng.randrange(len(st.cur_live))]
            elif mode == 1:
                tau = min(st.cur_live)
            else:
                tau = max(st.cur_live)
            st.remove_critical(tau)
            c[dims[tau]] += 1
            if events is not None:
                events.append(("critical", faces[tau]))
    if sum((-1) ** i * ci for i, ci in enumerate(c)) != h.euler:
        raise RuntimeError("internal: alternating sum of the Morse vector differs from chi")
    vector = tuple(c)
    trace = CollapseTrace(events, normalized=finisher) if collect_trace else None
    return vector, trace


def run_once(target, strategy: str = "random", seed=None, collect_trace: bool = True):
    """One plain run; returns (morse_vector, trace)."""
    return _run(_as_hasse(target), strategy, seed, finisher=False, collect_trace=collect_trace)


def run_once_normalized(target, strategy: str = "random", seed=None, collect_trace: bool = True):
    """One run with the deterministic 1-dimensional endgame."""
    return _run(_as_hasse(target), strategy, seed, finisher=True, collect_trace=collect_trace)


# ---------------------------------------------------------------------------
# trace replay


def verify_trace(target, trace: CollapseTrace) -> MorseVector:
    """Replay a trace on a fresh state, checking every precondition.

    Returns the recomputed Morse vector; raises TraceInvalidError with the
    offending event index otherwise.
    """
    h = _as_hasse(target)
    st = h.new_run()
    c = [0] * (h.dim + 1)
    for idx, ev in enumerate(trace.events):
        while st.total_remaining and st.remaining[st.level] == 0:
            st.descend_level()
        if st.total_remaining == 0:
            raise TraceInvalidError(idx, "complex already empty")
        kind = ev[0]
        try:
            if kind == "pair":
                sigma = h.face_id(ev[1])
                tau = h.face_id(ev[2])
                st.remove_free_pair(sigma, tau)
            elif kind == "critical":
                tau = h.face_id(ev[1])
                if st.free_pos:
                    if not trace.normalized:
                        raise ValueError("critical removal while free faces exist")
                    if st.level != 1 or h.dims[tau] != 1:
                        raise ValueError("normalized early critical outside level 1")
                    if not _edge_on_live_cycle(st, tau):
                        raise ValueError(f"edge {ev[1]} does not lie on a live cycle")
                st.remove_critical(tau)
                c[h.dims[tau]] += 1
            else:
                raise ValueError(f"unknown event kind {kind!r}")
        except ValueError as exc:
            raise TraceInvalidError(idx, str(exc)) from None
    if st.total_remaining != 0:
        raise TraceInvalidError(len(trace.events), "trace ends before the complex is empty")
    return tuple(c)


# ---------------------------------------------------------------------------
# many rounds, optionally in parallel


def _count_rounds(h: HasseDiagram, start: int, stop: int, strategy: str,
                  master_seed: int, normalized: bool) -> dict[MorseVector, int]:
    counts: dict[MorseVector, int] = {}
    for i in range(start, stop):
        v, _ = _run(h, strategy, round_seed(master_seed, i), finisher=normalized,
                    collect_trace=False)
        counts[v] = counts.get(v, 0) + 1
    return counts


def _rounds_worker(args) -> dict[MorseVector, int]:
    facets, start, stop, strategy, master_seed, normalized = args
    from .complexes import from_facets

    h = HasseDiagram(from_facets(facets))
    return _count_rounds(h, start, stop, strategy, master_seed, normalized)


def run_many(target, rounds: int, strategy: str = "random", master_seed: int = 0,
             workers: int = 1, normalized: bool = False) -> Spectrum:
    """Run ``rounds`` independent rounds and return their Spectrum.

    The result depends only on (input, rounds, master_seed, strategy,
    normalized); worker count and scheduling never change it.
    """
    if rounds < 1:
        raise ValueError("rounds must be positive")
    if not 0 <= master_seed < 2 ** 64:
        raise ValueError("master_seed must fit in u64")
    h = _as_hasse(target)
    if workers <= 1 or rounds == 1:
        counts = _count_rounds(h, 0, rounds, strategy, master_seed, normalized)
    else:
        workers = min(workers, rounds)
        facets = [list(f) for f in h.complex.facets]
        step = (rounds + workers - 1) // workers
        chunks = [
            (facets, lo, min(lo + step, rounds), strategy, master_seed, normalized)
            for lo in range(0, rounds, step)
        ]
        counts = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_rounds_worker, chunks):
                for v, n in part.items():
                    counts[v] = counts.get(v, 0) + n
    spec = Spectrum()
    for v in sorted(counts):
        spec.record(v, counts[v])
    return spec
