"""Morse spectra: empirical counts, exact distributions, analytic laws.

The spectrum of a complex is the probability distribution of the Morse
vectors produced by random runs.  Empirical spectra are counted over rounds;
the brute-force oracle computes the exact distribution in rational arithmetic
by exhausting the decision tree (memoized on live-face sets).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from .complexes import BudgetExceededError, as_simplicial_complex
from .hasse import HasseDiagram

__all__ = [
    "Spectrum",
    "normalize_vector",
    "c_avg",
    "c_avg_normalized",
    "exact_spectrum_bruteforce",
    "analytic_spectrum_A",
    "analytic_spectrum_B",
    "pathological_rate",
    "pathological_rate_argmin",
    "build_report",
]


class Spectrum:
    """Multiset of Morse vectors with counts."""

    __slots__ = ("counts", "total")

    def __init__(self, counts: Mapping[tuple, int] | None = None):
        self.counts: dict[tuple[int, ...], int] = {}
        self.total = 0
        if counts:
            for v, n in counts.items():
                self.record(v, n)

    def record(self, vector, count: int = 1) -> None:
        if count < 1:
            raise ValueError("count must be positive")
        v = tuple(int(x) for x in vector)
        self.counts[v] = self.counts.get(v, 0) + count
        self.total += count

    def merge(self, other: "Spectrum") -> "Spectrum":
        out = Spectrum(self.counts)
        for v, n in other.counts.items():
            out.record(v, n)
        return out

    __add__ = merge

    def freq(self, vector) -> Fraction:
        if self.total == 0:
            raise ValueError("empty spectrum has no frequencies")
        return Fraction(self.counts.get(tuple(vector), 0), self.total)

    def vectors(self) -> list[tuple[int, ...]]:
        return sorted(self.counts)

    def most_frequent(self) -> tuple[int, ...]:
        if not self.counts:
            raise ValueError("empty spectrum")
        top = max(self.counts.values())
        return min(v for v, n in self.counts.items() if n == top)

    def normalized(self) -> "Spectrum":
        out = Spectrum()
        for v in sorted(self.counts):
            out.record(normalize_vector(v), self.counts[v])
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Spectrum) and self.counts == other.counts

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.vectors())

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {n}" for v, n in sorted(self.counts.items()))
        return f"Spectrum({{{body}}}, total={self.total})"


def normalize_vector(v) -> tuple[int, ...]:
    """Map (c_0, c_1, c_2, ...) to (1, c_1 - c_0 + 1, c_2, ...).

    A negative second entry signals disconnected input and raises; it is
    reported, never clamped.
    """
    w = tuple(int(x) for x in v)
    if not w:
        raise ValueError("empty vector")
    if any(x < 0 for x in w):
        raise ValueError("Morse vector entries must be nonnegative")
    c1 = w[1] if len(w) > 1 else 0
    second = c1 - w[0] + 1
    if second < 0:
        raise ValueError(f"normalizing {w} gives a negative entry (input disconnected?)")
    if len(w) == 1:
        return (1,)
    return (1, second) + w[2:]


def _as_weights(S) -> Mapping[tuple, int | Fraction]:
    if isinstance(S, Spectrum):
        if S.total == 0:
            raise ValueError("empty spectrum")
        return S.counts
    if isinstance(S, Mapping):
        if not S:
            raise ValueError("empty distribution")
        return S
    raise TypeError("expected a Spectrum or a vector->weight mapping")


def c_avg(S) -> Fraction:
    """Average total number of critical faces, exact."""
    w = _as_weights(S)
    total = sum(w.values())
    return Fraction(sum(sum(v) * n for v, n in w.items()), 1) / total


def c_avg_normalized(S) -> Fraction:
    w = _as_weights(S)
    total = sum(w.values())
    return Fraction(sum(sum(normalize_vector(v)) * n for v, n in w.items()), 1) / total


# ---------------------------------------------------------------------------
# exact oracle


def exact_spectrum_bruteforce(target, max_faces: int = 40,
                              max_nodes: int = 10_000_000) -> dict[tuple[int, ...], Fraction]:
    """Exact spectrum by exhausting every choice path, uniform at each step.

    Exponential; guarded by a face-count precondition and a node budget.
    """
    h = target if isinstance(target, HasseDiagram) else HasseDiagram(as_simplicial_complex(target))
    if h.n_faces > max_faces:
        raise BudgetExceededError(
            f"complex has {h.n_faces} faces, brute force budget is {max_faces}"
        )
    up, dims = h.up, h.dims
    zero = (0,) * (h.dim + 1)
    memo: dict[frozenset, dict[tuple, Fraction]] = {}
    nodes = 0

    def solve(alive: frozenset) -> dict[tuple, Fraction]:
        nonlocal nodes
        if not alive:
            return {zero: Fraction(1)}
        cached = memo.get(alive)
        if cached is not None:
            return cached
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceededError(f"decision tree exceeded {max_nodes} nodes")
        level = max(dims[i] for i in alive)
        pairs: list[tuple[int, int]] = []
        if level > 0:
            for i in alive:
                if dims[i] == level - 1:
                    cofs = [j for j in up[i] if j in alive]
                    if len(cofs) == 1:
                        pairs.append((i, cofs[0]))
        out: dict[tuple, Fraction] = {}
        if pairs:
            w = Fraction(1, len(pairs))
            for sigma, tau in pairs:
                for vec, p in solve(alive - {sigma, tau}).items():
                    out[vec] = out.get(vec, 0) + w * p
        else:
            tops = [i for i in alive if dims[i] == level]
            w = Fraction(1, len(tops))
            bump = level
            for tau in tops:
                for vec, p in solve(alive - {tau}).items():
                    v2 = vec[:bump] + (vec[bump] + 1,) + vec[bump + 1:]
                    out[v2] = out.get(v2, 0) + w * p
        memo[alive] = out
        return out

    dist = solve(frozenset(range(h.n_faces)))
    if sum(dist.values()) != 1:
        raise RuntimeError("internal: exact spectrum does not sum to 1")
    return dist


# ---------------------------------------------------------------------------
# analytic laws for the two graph families


def analytic_spectrum_A(k: int) -> dict[tuple[int, int], Fraction]:
    """Two triangles joined by a path of k edges: optimal (1,2) unless the
    first critical edge falls on the path."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return {(1, 2): Fraction(6, 6 + k), (2, 3): Fraction(k, 6 + k)}


def analytic_spectrum_B(k: int, s: int) -> dict[tuple[int, int], Fraction]:
    """Wedge of s copies: binomial mix, each copy independently optimal with
    probability 6/(6+k)."""
    if k < 1 or s < 1:
        raise ValueError("k and s must be >= 1")
    p = Fraction(6, 6 + k)
    q = 1 - p
    return {
        (1 + i, 2 * s + i): math.comb(s, i) * p ** (s - i) * q ** i
        for i in range(s + 1)
    }


def pathological_rate(k: int, rounds: int | float) -> float:
    """Probability that ``rounds`` independent rounds on the wedge built from
    parameter k all miss some copy's optimal outcome, for the adversarial
    copy count s = rounds/(6+k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if rounds <= 0:
        raise ValueError("rounds must be positive")
    return float((6 / (6 + k)) ** (rounds / (6 + k)))


def pathological_rate_argmin(k_max: int = 200) -> int:
    """The integer k minimizing the rate; independent of the round count."""
    # minimize log(6/(6+k))/(6+k), the exponent per round
    return min(range(1, k_max + 1), key=lambda k: math.log(6 / (6 + k)) / (6 + k))


# ---------------------------------------------------------------------------
# report


def build_report(spec: Spectrum, euler: int, master_seed: int, strategy: str,
                 betti_gf2=None) -> dict:
    """Spectrum report with a fixed field order for byte-stable serialization."""
    if spec.total == 0:
        raise ValueError("empty spectrum")
    report: dict = {
        "rounds": spec.total,
        "vectors": [
            {"vector": list(v), "count": spec.counts[v], "freq": spec.counts[v] / spec.total}
            for v in sorted(spec.counts)
        ],
        "c_avg": float(c_avg(spec)),
    }
    try:
        report["c_avg_normalized"] = float(c_avg_normalized(spec))
    except ValueError:
        report["c_avg_normalized"] = None
    report["euler"] = euler
    if betti_gf2 is not None:
        report["betti_gf2"] = list(betti_gf2)
    report["master_seed"] = master_seed
    report["strategy"] = strategy
    return report
