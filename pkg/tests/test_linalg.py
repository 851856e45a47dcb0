import random
from fractions import Fraction

import pytest

from matroidlab.errors import BadParams, BadRank, Overbudget, SingularBasis
from matroidlab.fields import GF2_FIELD, GFp, Q_FIELD
from matroidlab.linalg import Matrix, RowSpace, gf2_matrix, tu_signing

FIELDS = (GF2_FIELD, GFp(5), Q_FIELD)


def test_constructors_and_shape():
    m = Matrix.from_int_rows(Q_FIELD, [[1, 2], [3, 4]])
    assert (m.nrows, m.ncols) == (2, 2)
    assert m.entries[1][0] == Fraction(3)
    assert Matrix.identity(GF2_FIELD, 3).rank() == 3
    assert Matrix.zero(Q_FIELD, 2, 5).rank() == 0
    with pytest.raises(Exception):
        Matrix(Q_FIELD, [[1, 2], [3]])


def test_equality_ignores_labels():
    a = Matrix.from_int_rows(GF2_FIELD, [[1, 0]], col_labels=("a", "b"))
    b = Matrix.from_int_rows(GF2_FIELD, [[1, 0]])
    assert a == b


@pytest.mark.parametrize("field", FIELDS)
def test_rank_and_rref(field):
    m = Matrix.from_int_rows(field, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    # over gf2 the three rows sum to zero; elsewhere they are independent
    assert m.rank() == (2 if field.char == 2 else 3)
    r = m.rref()
    assert r.rank() == m.rank()
    assert r.nrows == m.rank()


def test_rref_is_reduced():
    m = Matrix.from_int_rows(Q_FIELD, [[2, 4, 0], [1, 2, 1]])
    r = m.rref()
    assert r.entries == ((Fraction(1), Fraction(2), Fraction(0)),
                         (Fraction(0), Fraction(0), Fraction(1)))


@pytest.mark.parametrize("field", FIELDS)
def test_standard_form_identity_block(field):
    m = Matrix.from_int_rows(field, [[1, 1, 1, 0], [0, 1, 1, 1]])
    s = m.standard_form([2, 3])
    one, zero = field.one(), field.zero()
    assert [s.entries[0][2], s.entries[0][3]] == [one, zero]
    assert [s.entries[1][2], s.entries[1][3]] == [zero, one]


def test_standard_form_errors():
    m = Matrix.from_int_rows(Q_FIELD, [[1, 1, 0], [2, 2, 0]])
    with pytest.raises(SingularBasis):
        m.standard_form([0, 1])  # columns 0,1 are proportional
    with pytest.raises(BadRank):
        Matrix.from_int_rows(Q_FIELD, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).standard_form([0, 1])
    with pytest.raises(BadParams):
        m.standard_form([0, 0])
    with pytest.raises(BadParams):
        m.standard_form([5])


@pytest.mark.parametrize("field", FIELDS)
def test_null_space_is_orthogonal(field):
    m = Matrix.from_int_rows(field, [[1, 1, 1, 0], [0, 1, 0, 1]])
    ns = m.null_space_basis()
    assert ns.nrows == 2
    prod = m.matmul(ns.transpose())
    assert prod.is_zero()


def test_total_unimodularity():
    tri = Matrix.from_int_rows(Q_FIELD, [[1, 0, -1], [-1, 1, 0], [0, -1, 1]])
    assert tri.is_totally_unimodular()
    bad = Matrix.from_int_rows(Q_FIELD, [[1, 1], [-1, 1]])
    assert not bad.is_totally_unimodular()
    with pytest.raises(BadParams):
        Matrix.from_int_rows(Q_FIELD, [[2]]).is_totally_unimodular()
    with pytest.raises(Overbudget):
        Matrix.zero(Q_FIELD, 10, 10).is_totally_unimodular(budget=3)


def test_tu_signing_roundtrip():
    support = gf2_matrix([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    signed = tu_signing(support)
    assert signed.is_totally_unimodular()
    back = signed.map_to_field(GF2_FIELD)
    assert back == support
    fano = gf2_matrix([
        [1, 0, 0, 1, 1, 0, 1],
        [0, 1, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1],
    ])
    with pytest.raises(BadParams):
        tu_signing(fano)


def test_text_roundtrip():
    m = Matrix.from_int_rows(Q_FIELD, [[1, -2], [0, 3]])
    again = Matrix.from_text(m.to_text())
    assert again == m
    assert "q" in m.to_text().splitlines()[0]
    with pytest.raises(BadParams):
        Matrix.from_text("1 2\n1 0")


@pytest.mark.parametrize("field", FIELDS)
def test_rowspace_matches_batch_rank(field):
    rng = random.Random(414)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 5)
        rows = [[field.from_int(rng.randint(-2, 2)) for _ in range(ncols)]
                for _ in range(nrows)]
        space = RowSpace(field, ncols)
        grew = sum(space.add(r) for r in rows)
        batch = Matrix(field, rows).rank()
        assert space.rank == batch == grew


def test_rowspace_add_reports_growth():
    space = RowSpace(GF2_FIELD, 3)
    assert space.add([1, 1, 0])
    assert space.add([0, 1, 1])
    assert not space.add([1, 0, 1])  # sum of the first two
    assert space.rank == 2
