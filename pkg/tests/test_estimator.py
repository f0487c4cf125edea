"""The scikit-learn style estimator wrapper."""
import pytest
from sklearn.base import clone

from morseplex.estimator import RandomDiscreteMorse
from morseplex.generators import bipyramid, bouquet_B, graph_A

BIPYRAMID_FACETS = [[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]]


def test_params_roundtrip():
    est = RandomDiscreteMorse(rounds=50, strategy="lex", normalize=True,
                              random_state=3, n_jobs=2)
    p = est.get_params()
    assert p == {"rounds": 50, "strategy": "lex", "normalize": True,
                 "random_state": 3, "n_jobs": 2}
    est.set_params(rounds=10)
    assert est.rounds == 10
    c = clone(est)
    assert c.get_params() == est.get_params()


def test_fit_attributes():
    est = RandomDiscreteMorse(rounds=300, random_state=0).fit(graph_A(7))
    assert est.spectrum_.total == 300
    assert est.random_state_ == 0
    assert est.morse_vectors_ == [(1, 2), (2, 3)]
    assert est.most_frequent_vector_ == (1, 2)
    assert 3.0 < est.c_avg_ < 5.0
    # both observed vectors normalize to (1, 2), so the normalized mean is flat
    assert est.c_avg_normalized_ == 3.0
    assert est.euler_characteristic_ == -1
    assert est.f_vector_ == (12, 13)
    assert est.n_faces_ == 25
    assert est.betti_gf2_ == (1, 2)


def test_fit_accepts_raw_facets_and_files(tmp_path):
    a = RandomDiscreteMorse(rounds=40, random_state=5).fit(BIPYRAMID_FACETS)
    assert a.most_frequent_vector_ == (1, 0, 1)
    path = tmp_path / "bipyramid.txt"
    path.write_text("".join(" ".join(map(str, f)) + "\n" for f in BIPYRAMID_FACETS))
    b = RandomDiscreteMorse(rounds=40, random_state=5).fit(str(path))
    assert b.spectrum_ == a.spectrum_


def test_reproducibility_and_worker_independence():
    base = RandomDiscreteMorse(rounds=200, random_state=11).fit(bouquet_B(2, 2))
    again = RandomDiscreteMorse(rounds=200, random_state=11).fit(bouquet_B(2, 2))
    parallel = RandomDiscreteMorse(rounds=200, random_state=11, n_jobs=2).fit(bouquet_B(2, 2))
    assert base.spectrum_ == again.spectrum_ == parallel.spectrum_
    other = RandomDiscreteMorse(rounds=200, random_state=12).fit(bouquet_B(2, 2))
    assert other.spectrum_ != base.spectrum_


def test_unseeded_fit_records_the_drawn_seed():
    est = RandomDiscreteMorse(rounds=20).fit(bipyramid())
    assert 0 <= est.random_state_ < 2 ** 64
    replay = RandomDiscreteMorse(rounds=20, random_state=est.random_state_).fit(bipyramid())
    assert replay.spectrum_ == est.spectrum_


def test_normalize_flag():
    est = RandomDiscreteMorse(rounds=150, normalize=True, random_state=2).fit(graph_A(4))
    assert est.morse_vectors_ == [(1, 2)]


def test_report_matches_fit():
    est = RandomDiscreteMorse(rounds=100, random_state=9).fit(bipyramid())
    rep = est.report()
    assert rep["rounds"] == 100
    assert rep["master_seed"] == 9
    assert rep["strategy"] == "random"
    assert rep["euler"] == 2
    assert rep["betti_gf2"] == [1, 0, 1]
    assert sum(v["count"] for v in rep["vectors"]) == 100


def test_report_before_fit_raises():
    with pytest.raises(Exception):
        RandomDiscreteMorse().report()


def test_parameter_validation():
    with pytest.raises(ValueError):
        RandomDiscreteMorse(rounds=0).fit(bipyramid())
    with pytest.raises(ValueError):
        RandomDiscreteMorse(rounds="many").fit(bipyramid())
    with pytest.raises(ValueError):
        RandomDiscreteMorse(random_state=-1).fit(bipyramid())
    with pytest.raises(ValueError):
        RandomDiscreteMorse(strategy="greedy").fit(bipyramid())
