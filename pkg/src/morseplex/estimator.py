"""Scikit-learn style front end for spectrum estimation."""
from __future__ import annotations

from random import Random

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .complexes import BudgetExceededError, as_simplicial_complex
from .engine import run_many
from .spectra import build_report, c_avg, c_avg_normalized
from .topology import betti_gf2

__all__ = ["RandomDiscreteMorse"]

_entropy = Random()


class RandomDiscreteMorse(BaseEstimator):
    """Estimate the discrete Morse spectrum of a simplicial complex.

    Runs ``rounds`` randomized teardown rounds on the input and exposes the
    empirical spectrum and derived summaries as fitted attributes.

    Parameters
    ----------
    rounds : int, default=1000
        Number of independent rounds.
    strategy : {"random", "lex", "revlex"}, default="random"
        Face selection rule; the deterministic strategies make every round
        identical.
    normalize : bool, default=False
        Use the deterministic 1-dimensional endgame, which forces c_0 = 1 on
        connected input.
    random_state : int or None, default=None
        Master seed (u64).  None draws a fresh seed; the seed actually used
        is stored in ``random_state_``.
    n_jobs : int or None, default=None
        Worker processes for the rounds; results do not depend on it.

    Attributes
    ----------
    spectrum_ : Spectrum of observed Morse vectors.
    morse_vectors_ : sorted list of distinct observed vectors.
    most_frequent_vector_ : modal vector (lex-least on ties).
    c_avg_, c_avg_normalized_ : float summaries (the latter None when
        normalization fails on disconnected input).
    euler_characteristic_, f_vector_, n_faces_ : input invariants.
    betti_gf2_ : GF(2) Betti numbers, or None when over budget.
    random_state_ : the master seed used.

    Examples
    --------
    >>> est = RandomDiscreteMorse(rounds=200, random_state=7)
    >>> est.fit([[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]])
    RandomDiscreteMorse(random_state=7, rounds=200)
    >>> est.most_frequent_vector_
    (1, 0, 1)
    """

    def __init__(self, rounds: int = 1000, strategy: str = "random",
                 normalize: bool = False, random_state: int | None = None,
                 n_jobs: int | None = None):
        self.rounds = rounds
        self.strategy = strategy
        self.normalize = normalize
        self.random_state = random_state
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        """Run the rounds on X (a complex, a facet list, or a path)."""
        C = as_simplicial_complex(X)
        if not isinstance(self.rounds, int) or self.rounds < 1:
            raise ValueError(f"rounds must be a positive integer, got {self.rounds!r}")
        if self.random_state is None:
            seed = _entropy.getrandbits(64)
        elif isinstance(self.random_state, int) and 0 <= self.random_state < 2 ** 64:
            seed = self.random_state
        else:
            raise ValueError("random_state must be None or an integer in [0, 2**64)")
        spec = run_many(
            C, rounds=self.rounds, strategy=self.strategy, master_seed=seed,
            workers=self.n_jobs or 1, normalized=self.normalize,
        )
        self.complex_ = C
        self.spectrum_ = spec
        self.random_state_ = seed
        self.morse_vectors_ = spec.vectors()
        self.most_frequent_vector_ = spec.most_frequent()
        self.c_avg_ = float(c_avg(spec))
        try:
            self.c_avg_normalized_ = float(c_avg_normalized(spec))
        except ValueError:
            self.c_avg_normalized_ = None
        self.euler_characteristic_ = C.euler_characteristic()
        self.f_vector_ = C.f_vector()
        self.n_faces_ = C.n_faces
        try:
            self.betti_gf2_ = betti_gf2(C)
        except BudgetExceededError:
            self.betti_gf2_ = None
        return self

    def report(self) -> dict:
        """JSON-ready spectrum report for the fitted input."""
        check_is_fitted(self, "spectrum_")
        return build_report(
            self.spectrum_,
            euler=self.euler_characteristic_,
            master_seed=self.random_state_,
            strategy=self.strategy,
            betti_gf2=self.betti_gf2_,
        )
