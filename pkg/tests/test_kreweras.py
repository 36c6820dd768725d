from hypothesis import given
from hypothesis import strategies as st

from skewcount.exact import binomial
from skewcount.kreweras import kreweras_count, kreweras_matrix, remove_empty_rows
from skewcount.paths import count_paths_dp
from skewcount.shapes import Partition, SkewShape, parse_shape, partitions_in_box, subpartitions

# pinned after first computation; also the value behind the 4x4 matrix below
BIG_SHAPE = "9,7,6,2/3,1"
BIG_COUNT = 399
BIG_MATRIX = [
    [7, 10, 4, 0],
    [1, 7, 15, 0],
    [0, 1, 7, 3],
    [0, 0, 1, 3],
]


def test_matrix_two_one():
    km = kreweras_matrix(parse_shape("2,1"))
    assert km.matrix.row_lists() == [[3, 1], [1, 2]]


def test_matrix_single_cell():
    assert kreweras_matrix(parse_shape("1")).matrix.row_lists() == [[2]]


def test_matrix_empty_shape():
    m = kreweras_matrix(parse_shape("0")).matrix
    assert (m.rows, m.cols) == (0, 0)


def test_matrix_big_fixture():
    km = kreweras_matrix(parse_shape(BIG_SHAPE))
    assert km.matrix.row_lists() == BIG_MATRIX


def test_count_examples():
    assert kreweras_count(parse_shape("2,1")) == 5
    assert kreweras_count(parse_shape("0")) == 1
    assert kreweras_count(parse_shape("2,2")) == 6
    assert kreweras_count(parse_shape("3,1/2")) == 4


def test_count_big_fixture():
    s = parse_shape(BIG_SHAPE)
    assert kreweras_count(s) == BIG_COUNT
    assert count_paths_dp(s) == BIG_COUNT


def test_empty_inner_entry_reduction():
    for lam in [(3,), (3, 2), (4, 2, 1), (2, 2, 2)]:
        s = SkewShape(Partition(lam))
        m = kreweras_matrix(s).matrix
        n = s.n
        for i in range(n):
            for j in range(n):
                assert m.entry(i, j) == binomial(s.outer.part(j) + 1, j - i + 1)


class TestRemoveEmptyRows:
    def test_drops_matching_row(self):
        got = remove_empty_rows(parse_shape("2,1,1/1,1"))
        assert got == parse_shape("2,1/1")

    def test_no_empty_rows_unchanged(self):
        s = parse_shape("3,2/1")
        assert remove_empty_rows(s) == s

    def test_all_rows_empty(self):
        assert remove_empty_rows(parse_shape("2,1/2,1")) == parse_shape("0")

    def test_count_unchanged(self):
        s = parse_shape("2,1,1/1,1")
        assert kreweras_count(s) == kreweras_count(remove_empty_rows(s)) == 4


@given(st.sampled_from(partitions_in_box(3, 3)))
def test_determinant_equals_dp(lam):
    # one slice of the central identity; the acceptance suite sweeps 4x4
    for mu in subpartitions(lam):
        s = SkewShape(Partition(lam), Partition(mu))
        assert kreweras_count(s) == count_paths_dp(s)
