"""Face poset construction and the per-run mutable state."""
import random

import pytest

from morseplex.complexes import from_facets
from morseplex.generators import (
    bipyramid,
    boundary_of_simplex,
    cyclic_polytope_boundary,
    graph_A,
    simplex,
    stacked_sphere,
)
from morseplex.hasse import HasseDiagram


def ith_face(C, d, k):
    """k-th d-face, 1-based, in lexicographic order."""
    return C.faces_by_dim[d][k - 1]


def test_ids_are_contiguous_by_dim_then_lex():
    C = bipyramid()
    h = HasseDiagram(C)
    flat = [f for level in C.faces_by_dim for f in level]
    assert list(h.faces) == flat
    for i, f in enumerate(flat):
        assert h.face_id(f) == i
        assert h.dims[i] == len(f) - 1
    assert h.offsets == [0, 5, 14, 20]
    assert h.n_faces == 20


def test_up_down_adjacency():
    C = bipyramid()
    h = HasseDiagram(C)
    # third edge is (1,4); its cofaces are the first and third triangles
    assert ith_face(C, 1, 3) == (1, 4)
    assert set(h.cofaces((1, 4))) == {ith_face(C, 2, 1), ith_face(C, 2, 3)}
    assert h.cofaces((1, 4)) == ((1, 2, 4), (1, 3, 4))
    # fifth triangle is (2,3,4); its edges are the 5th, 6th, 8th 1-faces
    assert ith_face(C, 2, 5) == (2, 3, 4)
    assert set(h.subfaces((2, 3, 4))) == {(2, 3), (2, 4), (3, 4)}
    edge_positions = {h.face_id(e) - h.offsets[1] + 1 for e in h.subfaces((2, 3, 4))}
    assert edge_positions == {5, 6, 8}


def test_face_id_rejects_non_faces():
    h = HasseDiagram(from_facets([[1, 2, 3]]))
    with pytest.raises(ValueError):
        h.face_id((1, 4))
    with pytest.raises(ValueError):
        h.face_id((1, 2, 3, 4))


def test_incidences_count():
    # each i-face has i+1 subfaces
    for C in [bipyramid(), simplex(3), graph_A(2)]:
        h = HasseDiagram(C)
        expected = sum((i + 1) * f for i, f in enumerate(C.f_vector()) if i >= 1)
        assert h.incidences() == expected
        assert sum(len(d) for d in h.down) == expected


# ---------------------------------------------------------------------------
# run state


def test_initial_state_bipyramid():
    C = bipyramid()
    st = HasseDiagram(C).new_run()
    assert st.level == 2
    assert st.total_remaining == 20
    assert st.free_faces() == ()  # closed surface, nothing free


def test_critical_removal_frees_its_ridges():
    C = bipyramid()
    h = HasseDiagram(C)
    st = h.new_run()
    tau = h.face_id((2, 3, 4))  # the fifth triangle
    st.remove_critical(tau)
    assert st.free_faces() == ((2, 3), (2, 4), (3, 4))
    assert not st.is_alive((2, 3, 4))
    assert st.remaining[2] == 5


def test_pair_removal_updates_live_cofaces():
    C = bipyramid()
    h = HasseDiagram(C)
    st = h.new_run()
    st.remove_critical(h.face_id((2, 3, 4)))
    # (3,4) is now free with unique live coface (1,3,4)
    assert st.live_cofaces((3, 4)) == ((1, 3, 4),)
    st.remove_free_pair(h.face_id((3, 4)), h.face_id((1, 3, 4)))
    assert not st.is_alive((3, 4)) and not st.is_alive((1, 3, 4))
    # (1,3) lost one coface and keeps the other
    assert st.live_cofaces((1, 3)) == ((1, 3, 5),)
    # (1,3) and (1,4) became free in turn
    assert set(st.free_faces()) == {(1, 3), (1, 4), (2, 3), (2, 4)}
    assert st.total_remaining == 17


def test_pair_removal_preconditions():
    h = HasseDiagram(bipyramid())
    st = h.new_run()
    e = h.face_id((3, 4))
    t = h.face_id((1, 3, 4))
    with pytest.raises(ValueError):
        st.remove_free_pair(e, t)  # (3,4) still has two live cofaces
    st.remove_critical(h.face_id((2, 3, 4)))
    with pytest.raises(ValueError):
        st.remove_free_pair(e, h.face_id((1, 2, 4)))  # not its coface
    st.remove_free_pair(e, t)
    with pytest.raises(ValueError):
        st.remove_free_pair(e, t)  # already dead


def test_critical_removal_preconditions():
    h = HasseDiagram(bipyramid())
    st = h.new_run()
    with pytest.raises(ValueError):
        st.remove_critical(h.face_id((1, 2)))  # below the current level
    st.remove_critical(h.face_id((2, 3, 4)))
    with pytest.raises(ValueError):
        st.remove_critical(h.face_id((2, 3, 4)))  # dead


def test_descend_level():
    h = HasseDiagram(from_facets([[1, 2], [3]]))
    st = h.new_run()
    assert st.level == 1
    with pytest.raises(ValueError):
        st.descend_level()  # the edge is still live
    st.remove_critical(h.face_id((1, 2)))
    st.descend_level()
    assert st.level == 0
    # isolated vertices are never free; they leave as criticals
    assert st.free_faces() == ()
    assert st.remaining[0] == 3
    assert st.is_alive((3,))


def test_descend_on_empty_state_raises():
    h = HasseDiagram(from_facets([[1]]))
    st = h.new_run()
    st.remove_critical(0)
    assert st.total_remaining == 0
    with pytest.raises(ValueError):
        st.descend_level()


def exhaust(h, seed):
    """Drive a full random teardown through the public mutation api."""
    st = h.new_run()
    rng = random.Random(seed)
    vec = [0] * (h.dim + 1)
    while st.total_remaining:
        if st.remaining[st.level] == 0:
            st.descend_level()
            continue
        if st.free_list:
            sigma = rng.choice(st.free_list)
            st.remove_free_pair(sigma, st.live_up[sigma][0])
        else:
            tau = rng.choice(st.cur_live)
            st.remove_critical(tau)
            vec[st.level] += 1
    return st, tuple(vec)


def test_full_teardown_reaches_empty_and_counts_ops():
    sizes = [
        graph_A(8),
        bipyramid(),
        boundary_of_simplex(4),
        cyclic_polytope_boundary(4, 10),
        stacked_sphere(3, 60, seed=2),
    ]
    for C in sizes:
        h = HasseDiagram(C)
        st, vec = exhaust(h, seed=5)
        assert st.total_remaining == 0
        assert sum(v * (-1) ** i for i, v in enumerate(vec)) == h.euler
        # teardown cost stays linear in the size of the Hasse diagram
        assert st.ops <= 3 * h.incidences(), (C, st.ops, h.incidences())
    print(f"teardown ops within 3x incidences on {len(sizes)} complexes")


def test_state_isolation_between_runs():
    h = HasseDiagram(bipyramid())
    st1 = h.new_run()
    st1.remove_critical(h.face_id((2, 3, 4)))
    st2 = h.new_run()
    assert st2.total_remaining == 20
    assert st2.free_faces() == ()
    assert st1.total_remaining == 19
