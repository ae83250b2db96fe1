"""
Unit tests for the Coxeter-number and leaf-dimension rows.
"""

import pytest

from poisson_pencils.algebra import (
    build_algebra,
    classical_rows,
    exceptional_rows,
    expected_row,
    table1_report,
)

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]
LARGE = [(series, rank) for series in "ABCD" for rank in (5, 6)]


# Test table1_report
@pytest.mark.parametrize("series,rank", SMALL)
def test_classical_rows_match_closed_forms(series, rank):
    """(h, h_vee, dim leaf) agree with the closed forms."""
    row = table1_report(build_algebra(series, rank))

    assert (row.h, row.h_vee, row.dim_leaf) == expected_row(series, rank)
    assert row.dim_leaf == 2 * row.h_vee - 2
    assert row.dim_g1 == 2 * (row.h_vee - 2)


@pytest.mark.slow
@pytest.mark.parametrize("series,rank", LARGE)
def test_classical_rows_up_to_rank_six(series, rank):
    """The closed forms also hold at ranks five and six."""
    row = table1_report(build_algebra(series, rank))

    assert (row.h, row.h_vee, row.dim_leaf) == expected_row(series, rank)


def test_theta_grading_has_lines_at_the_ends():
    """g^{-2} and g^{2} are one-dimensional."""
    row = table1_report(build_algebra("B", 2))

    assert row.theta_grading[2] == 1
    assert row.theta_grading[-2] == 1
    assert row.theta_grading == {-2: 1, -1: 2, 0: 4, 1: 2, 2: 1}


# Test classical_rows
def test_classical_rows_cover_every_series():
    """Rows start at the minimal rank of each series."""
    names = [row.name for row in classical_rows(3)]

    assert names == ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3"]


# Test exceptional_rows
def test_exceptional_rows_are_references():
    """Exceptional rows are reference data with dim = 2h_vee - 2."""
    rows = exceptional_rows()

    assert {row.name for row in rows} == {"E6", "E7", "E8", "F4", "G2"}
    assert all(row.reference and row.dim_leaf == 2 * row.h_vee - 2 for row in rows)
