from fractions import Fraction
from itertools import combinations

import pytest

from matroidlab.errors import BadParams, NotRegular, NotStandardOrdering
from matroidlab.fields import GF2_FIELD, Q_FIELD
from matroidlab.incidence import (
    basis_is_nonsingular,
    check_rank_identities,
    full_circuit_matrix,
    full_cocircuit_matrix,
    fundamental_matrices,
)
from matroidlab.matroids import from_graph, uniform

TRIANGLE = (("a", "b"), ("b", "c"), ("c", "a"))


def test_fundamental_shapes_u23_over_q():
    m = uniform(2, 3)
    fm = fundamental_matrices(m, ("e1", "e2", "e3"), Q_FIELD)
    assert fm.cobasis == ("e1",) and fm.basis == ("e2", "e3")
    assert (fm.circuit_matrix.nrows, fm.circuit_matrix.ncols) == (1, 3)
    assert (fm.cocircuit_matrix.nrows, fm.cocircuit_matrix.ncols) == (2, 3)
    # identity blocks: circuit rows start with I, cocircuit rows end with I
    assert fm.circuit_matrix.entries[0][0] == Fraction(1)
    assert fm.cocircuit_matrix.entries[0][1] == Fraction(1)
    assert fm.cocircuit_matrix.entries[1][2] == Fraction(1)
    assert fm.cocircuit_matrix.entries[0][2] == Fraction(0)
    prod = fm.circuit_matrix.matmul(fm.cocircuit_matrix.transpose())
    assert prod.is_zero()


def test_fundamental_rows_support_matches_oracle():
    m = from_graph(TRIANGLE + (("c", "d"), ("d", "a")))
    ordering = ("e2", "e4", "e1", "e3", "e5")
    for field in (GF2_FIELD, Q_FIELD):
        fm = fundamental_matrices(m, ordering, field)
        basis = frozenset(fm.basis)
        z = field.zero()
        for i, e in enumerate(fm.cobasis):
            want = m.fundamental_circuit(basis, e)
            got = {ordering[j] for j, x in enumerate(fm.circuit_matrix.entries[i]) if x != z}
            assert got == want
        for i, b in enumerate(fm.basis):
            want = m.fundamental_cocircuit(basis, b)
            got = {ordering[j] for j, x in enumerate(fm.cocircuit_matrix.entries[i]) if x != z}
            assert got == want


def test_char2_matches_signed_mod2():
    m = from_graph(TRIANGLE + (("c", "d"),))
    ordering = ("e3", "e1", "e2", "e4")
    over_q = fundamental_matrices(m, ordering, Q_FIELD)
    over_2 = fundamental_matrices(m, ordering, GF2_FIELD)
    assert over_q.cocircuit_matrix.map_to_field(GF2_FIELD) == over_2.cocircuit_matrix
    assert over_q.circuit_matrix.map_to_field(GF2_FIELD) == over_2.circuit_matrix


def test_char2_path_needs_no_representation():
    m = uniform(2, 4)  # representable over neither gf2 nor q
    fm = fundamental_matrices(m, ("e1", "e2", "e3", "e4"), GF2_FIELD)
    assert fm.circuit_matrix.entries[0] == (1, 0, 1, 1)
    assert fm.circuit_matrix.entries[1] == (0, 1, 1, 1)


def test_fundamental_rejects_dependent_tail():
    m = from_graph(TRIANGLE + (("c", "d"),))
    with pytest.raises(NotStandardOrdering):
        fundamental_matrices(m, ("e4", "e1", "e2", "e3"), Q_FIELD)
    with pytest.raises(BadParams):
        fundamental_matrices(m, ("e1", "e2", "e3"), Q_FIELD)


def test_full_matrices_first_nonzero_is_one():
    m = from_graph(TRIANGLE + (("c", "d"), ("d", "a")))
    for field in (Q_FIELD, GF2_FIELD):
        cm = full_circuit_matrix(m, field)
        dm = full_cocircuit_matrix(m, field)
        assert cm.nrows == len(m.circuits())
        assert dm.nrows == len(m.cocircuits())
        one, zero = field.one(), field.zero()
        for row in cm.entries + dm.entries:
            lead = next(x for x in row if x != zero)
            assert lead == one
        assert cm.matmul(dm.transpose()).is_zero()


def test_rank_identities_on_graphs():
    m = from_graph(TRIANGLE + (("c", "d"), ("d", "a"), ("d", "b")))
    for field in (GF2_FIELD, Q_FIELD):
        rep = check_rank_identities(m, m.ground, field)
        assert rep.ok
        assert rep.fundamental_circuit_rank == rep.full_circuit_rank == rep.n - rep.rank
        assert rep.fundamental_cocircuit_rank == rep.full_cocircuit_rank == rep.rank
        assert rep.orthogonal


def test_basis_nonsingular_agrees_with_oracle():
    m = from_graph(TRIANGLE + (("c", "d"),))
    fm = fundamental_matrices(m, ("e3", "e1", "e2", "e4"), Q_FIELD)
    for sub in combinations(m.ground, m.rank()):
        assert basis_is_nonsingular(m, fm.cocircuit_matrix, sub) == m.is_independent(sub)
    with pytest.raises(BadParams):
        basis_is_nonsingular(m, fm.cocircuit_matrix, ("e1",))


def test_u23_exact_signed_entries():
    # hand-derived from the standard form of [[1,0,1],[0,1,1]]
    m = uniform(2, 3)
    fm = fundamental_matrices(m, ("e1", "e2", "e3"), Q_FIELD)
    assert fm.circuit_matrix.entries == ((Fraction(1), Fraction(1), Fraction(-1)),)
    assert fm.cocircuit_matrix.entries == (
        (Fraction(-1), Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(0), Fraction(1)),
    )


def test_non_regular_refuses_signed_construction():
    m = uniform(2, 4)
    with pytest.raises(NotRegular):
        fundamental_matrices(m, ("e1", "e2", "e3", "e4"), Q_FIELD)
    # the char-2 indicator path needs no representation
    fm = fundamental_matrices(m, ("e1", "e2", "e3", "e4"), GF2_FIELD)
    assert fm.circuit_matrix.nrows == 2
