import pytest

from matroidlab.complexes import (
    HVector,
    Ordering,
    bc_faces,
    bc_facets,
    broken_circuits,
    f_h_vectors,
    h_recursion_check,
    join_decomposition_check,
)
from matroidlab.errors import BadParams, DegenerateElement
from matroidlab.matroids import from_circuits, from_graph, uniform

TRIANGLE = (("a", "b"), ("b", "c"), ("c", "a"))


def test_ordering_basics():
    o = Ordering(("b", "a", "c"))
    assert o.position("b") == 1 and o.position("c") == 3
    assert o.induced({"a", "c"}).labels == ("a", "c")
    assert Ordering.from_string(" b , a,c ").labels == ("b", "a", "c")
    assert len(o) == 3 and list(o) == ["b", "a", "c"]
    assert o.show() == "b,a,c"
    with pytest.raises(BadParams):
        Ordering(("a", "a"))
    with pytest.raises(BadParams):
        o.position("zz")
    with pytest.raises(BadParams):
        o.validate_for(uniform(1, 2))


def test_broken_circuits_drop_minimum():
    m = from_graph(TRIANGLE)
    assert broken_circuits(m, m.ground) == (frozenset({"e2", "e3"}),)
    flipped = broken_circuits(m, ("e3", "e2", "e1"))
    assert flipped == (frozenset({"e1", "e2"}),)


def test_triangle_face_counts():
    m = from_graph(TRIANGLE)
    faces = bc_faces(m, m.ground)
    assert frozenset({"e2", "e3"}) not in faces
    f, h = f_h_vectors(m, m.ground)
    assert f == (1, 3, 2)
    assert h.entries == (1, 1, 0)
    assert bc_facets(m, m.ground) == (
        frozenset({"e1", "e2"}),
        frozenset({"e1", "e3"}),
    )


def test_u24_face_counts():
    m = uniform(2, 4)
    f, h = f_h_vectors(m, m.ground)
    assert f == (1, 4, 3)
    assert h.entries == (1, 2, 0)
    assert h.total == len(bc_facets(m, m.ground)) == 3


def test_free_matroid_is_a_simplex():
    m = uniform(3, 3)
    f, h = f_h_vectors(m, m.ground)
    assert f == (1, 3, 3, 1)
    assert h.entries == (1, 0, 0, 0)


def test_loops_make_the_complex_void():
    m = from_circuits([{"a"}], ("a", "b"))
    assert bc_faces(m, m.ground) == ()
    f, h = f_h_vectors(m, m.ground)
    assert f == (0, 0) and h.entries == (0, 0)


def test_face_counts_are_ordering_invariant():
    m = uniform(2, 4)
    base = f_h_vectors(m, m.ground)
    assert f_h_vectors(m, ("e3", "e1", "e4", "e2")) == base
    assert f_h_vectors(m, ("e4", "e3", "e2", "e1")) == base


def test_h_recursion_on_graphs():
    m = from_graph(TRIANGLE + (("c", "d"), ("d", "a")))
    for e in m.ground:
        rep = h_recursion_check(m, m.ground, e)
        assert rep.ok
        assert rep.element == e
        total = [a + b for a, b in zip(
            rep.h_delete.entries + (0,) * 3,
            (0,) + rep.h_contract.entries + (0,) * 3,
        )][: len(rep.h.entries)]
        assert tuple(total) == rep.h.entries


def test_h_recursion_rejects_degenerate_elements():
    pendant = from_graph(TRIANGLE + (("c", "d"),))
    with pytest.raises(DegenerateElement):
        h_recursion_check(pendant, pendant.ground, "e4")
    looped = from_circuits([{"a"}, {"b", "c"}], ("a", "b", "c"))
    with pytest.raises(DegenerateElement):
        h_recursion_check(looped, looped.ground, "a")


def test_join_decomposition():
    m = from_graph(TRIANGLE + (("d", "e"), ("e", "f"), ("f", "d")))
    rep = join_decomposition_check(m, m.ground)
    assert rep.ok
    assert len(rep.components) == 2
    assert rep.f == rep.f_product


def test_hvector_helpers():
    h = HVector((1, 2, 1, 0))
    assert h.total == 4
    assert h.show() == "(1, 2, 1, 0)"


def test_k4_face_counts_and_purity():
    m = from_graph(
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
    )
    o = Ordering.natural(m.ground)
    f, h = f_h_vectors(m, o)
    assert f == (1, 6, 11, 6)
    assert h.entries == (1, 3, 2, 0)
    facets = bc_facets(m, o)
    assert len(facets) == 6 and all(len(F) == 3 for F in facets)
    faces = bc_faces(m, o)
    assert all(m.is_independent(F) for F in faces)
    # purity: every face extends to a facet
    assert all(any(F >= s for F in facets) for s in faces)
