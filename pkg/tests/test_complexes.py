"""Construction, validation, and io for SimplicialComplex."""
import io
import json

import pytest

from morseplex.complexes import (
    SimplicialComplex,
    as_simplicial_complex,
    from_facets,
    read_complex,
    write_complex,
)


def test_from_facets_builds_full_closure():
    C = from_facets([[1, 2, 3], [3, 4]])
    assert C.facets == ((1, 2, 3), (3, 4))
    assert C.f_vector() == (4, 4, 1)
    assert C.dim == 2
    assert C.n_faces == 9
    assert C.vertices() == (1, 2, 3, 4)
    for face in [(1,), (2, 3), (1, 2, 3), (3, 4)]:
        assert C.has_face(face)
    assert not C.has_face((1, 4))
    assert not C.has_face((1, 2, 3, 4))


def test_vertex_order_inside_faces_is_sorted():
    C = from_facets([[3, 1, 2]])
    assert C.facets == ((1, 2, 3),)
    assert C.faces_by_dim[1] == ((1, 2), (1, 3), (2, 3))


def test_redundant_entries_are_pruned_and_flagged():
    C = from_facets([[1, 2, 3], [1, 2], [2, 3], [1, 2, 3]])
    assert C.facets == ((1, 2, 3),)
    assert C.pruned_input
    clean = from_facets([[1, 2, 3]])
    assert not clean.pruned_input
    # pruned_input does not take part in equality
    assert C == clean


def test_no_facet_contains_another():
    C = from_facets([[1, 2], [2, 3], [1, 2, 3], [4, 5]])
    for f in C.facets:
        for g in C.facets:
            if f != g:
                assert not set(f) <= set(g)


def test_labels_need_not_be_contiguous():
    C = from_facets([[10, 7], [7, 99]])
    assert C.vertices() == (7, 10, 99)
    assert C.f_vector() == (3, 2)


def test_euler_characteristic():
    assert from_facets([[1, 2, 3]]).euler_characteristic() == 1
    assert from_facets([[1, 2], [2, 3], [1, 3]]).euler_characteristic() == 0
    # two disjoint triangles
    assert from_facets([[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]]).euler_characteristic() == 0


@pytest.mark.parametrize(
    "bad",
    [
        [],
        [[]],
        [[0, 1]],
        [[-2, 3]],
        [[1, 1, 2]],
        [[1, "a"]],
        [[True, 2]],
        [[1.5, 2]],
    ],
)
def test_invalid_facet_lists_are_rejected(bad):
    with pytest.raises(ValueError):
        from_facets(bad)


def test_as_simplicial_complex_coercions(tmp_path):
    C = from_facets([[1, 2, 3]])
    assert as_simplicial_complex(C) is C
    assert as_simplicial_complex([[1, 2, 3]]) == C
    p = tmp_path / "tri.txt"
    p.write_text("1 2 3\n")
    assert as_simplicial_complex(p) == C
    with pytest.raises(TypeError):
        as_simplicial_complex(42)


# ---------------------------------------------------------------------------
# io


def test_text_roundtrip():
    C = from_facets([[1, 2, 4], [2, 3], [5]])
    text = write_complex(C, format="text")
    assert read_complex(io.StringIO(text)) == C


def test_json_roundtrip():
    C = from_facets([[1, 2, 4], [2, 3], [5]])
    blob = write_complex(C, format="json")
    assert json.loads(blob)["facets"]
    assert read_complex(io.StringIO(blob), format="json") == C


def test_text_comments_and_blank_lines():
    text = "# a triangle and a whisker\n\n1 2 3\n3 4   # trailing comment\n"
    C = read_complex(io.StringIO(text), format="text")
    assert C.facets == ((1, 2, 3), (3, 4))


def test_format_inference_by_extension(tmp_path):
    C = from_facets([[1, 2], [2, 3]])
    t = tmp_path / "c.txt"
    t.write_text(write_complex(C, format="text"))
    j = tmp_path / "c.json"
    j.write_text(write_complex(C, format="json"))
    assert read_complex(t) == C
    assert read_complex(j) == C


def test_format_inference_by_content(tmp_path):
    C = from_facets([[1, 2, 3]])
    p = tmp_path / "noext"
    p.write_text(write_complex(C, format="json"))
    assert read_complex(p) == C
    p.write_text(write_complex(C, format="text"))
    assert read_complex(p) == C


def test_read_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\nnot a vertex\n")
    with pytest.raises(ValueError):
        read_complex(bad)
    with pytest.raises(OSError):
        read_complex(tmp_path / "missing.txt")
    with pytest.raises(ValueError):
        write_complex(from_facets([[1]]), format="xml")
