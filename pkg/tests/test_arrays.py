import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aontlab import (
    AONT,
    NEITHER,
    WEAK_AONT_ONLY,
    AontArray,
    check_covering,
    check_unbiased,
    classify,
    dump_array_csv,
    parse_array,
    parse_array_csv,
)
from aontlab.arrays import column_set_family, passes_unbiased_family
from aontlab.constructions import _TABLE1, _TABLE3, builtin
from aontlab.errors import (
    DimensionMismatchError,
    InvalidParametersError,
    OversizedColumnSetError,
    UnknownSymbolError,
)


def test_parse_table1_glyphs(table1):
    assert table1.v == 3 and table1.s == 2
    assert table1.n_rows == 9
    assert table1.alphabet.glyphs == ("a", "b", "c")
    assert table1.rows[1] == (0, 1, 2, 1)  # a,b,c,b


def test_parse_table3(table3):
    assert table3.v == 2 and table3.s == 3
    assert table3.rows[4] == (1, 0, 0, 0, 1, 1)  # b,a,a,a,b,b


def test_parse_rejects_wrong_row_count():
    rows = [("a", "a", "a", "a")] * 8
    with pytest.raises(DimensionMismatchError):
        parse_array(rows, v=3, s=2)


def test_parse_rejects_wrong_width(table1):
    rows = [row[:3] for row in table1.rows]
    with pytest.raises(DimensionMismatchError):
        parse_array(rows, v=3, s=2)


def test_parse_rejects_unknown_symbol():
    rows = [(0, 1, 2, 3)] + [(0, 0, 0, 0)] * 8
    with pytest.raises(UnknownSymbolError):
        parse_array(rows, v=3, s=2)


def test_parse_infers_glyphs_by_first_appearance():
    # first row introduces only "z"; mapping must follow row-major appearance
    rows = [("z", "z"), ("z", "q")]
    arr = parse_array(rows, v=2, s=1)
    assert arr.rows == ((0, 0), (0, 1))
    assert arr.alphabet.glyphs == ("z", "q")


def test_unbiased_table1_input_pair(table1):
    rep = check_unbiased(table1, (1, 2))
    assert rep.holds and rep.expected_multiplicity == 1


def test_unbiased_table1_single_output(table1):
    rep = check_unbiased(table1, (3,))
    assert rep.holds and rep.expected_multiplicity == 3


def test_unbiased_table3_mixed_pair_fails(table3):
    rep = check_unbiased(table3, (1, 4))
    assert not rep.holds
    assert rep.expected_multiplicity == 2
    # lexicographically first bad tuple is (a,a), observed once
    assert rep.first_violation == (0, 0) and rep.observed_count == 1
    # and the (a,b) projection indeed appears three times
    count_ab = sum(1 for row in table3.rows if (row[0], row[3]) == (0, 1))
    assert count_ab == 3


def test_covering_table3_mixed_pair_holds(table3):
    assert check_covering(table3, (1, 4)).holds


def test_covering_fails_on_constant_column(table1):
    rows = [row[:2] + (0,) + row[3:] for row in table1.rows]
    arr = AontArray(table1.alphabet, 2, tuple(rows))
    rep = check_covering(arr, (3,))
    assert not rep.holds and rep.first_violation == (1,) and rep.observed_count == 0


def test_oversized_column_set(table1):
    with pytest.raises(OversizedColumnSetError):
        check_unbiased(table1, (1, 2, 3))
    with pytest.raises(OversizedColumnSetError):
        check_covering(table1, (1, 2, 3))


def test_classify_golden(table1, table2, table3):
    assert classify(table1, 1, 1).verdict == AONT
    assert classify(table2, 1, 2).verdict == AONT
    v3 = classify(table3, 1, 2)
    assert v3.verdict == WEAK_AONT_ONLY
    assert v3.witness == (1, 4)


def test_classify_neither_reports_covering_witness(table1):
    rows = [row[:2] + (0,) + row[3:] for row in table1.rows]
    arr = AontArray(table1.alphabet, 2, tuple(rows))
    verdict = classify(arr, 1, 1)
    assert verdict.verdict == NEITHER
    assert verdict.witness is not None


def test_classify_parameter_checks(table1):
    with pytest.raises(InvalidParametersError):
        classify(table1, 0, 1)
    with pytest.raises(InvalidParametersError):
        classify(table1, 2, 1)


def test_family_enumeration_order():
    fam = list(column_set_family(2, 1, 1))
    assert fam == [(1, 2), (3, 4), (1, 3), (1, 4), (2, 3), (2, 4)]
    fam_asym = list(column_set_family(3, 1, 2))
    assert fam_asym[:2] == [(1, 2, 3), (4, 5, 6)]
    assert fam_asym[2:5] == [(1, 4), (1, 5), (1, 6)]


def test_fast_family_check_matches_classify(table1, table2, table3):
    for arr, t_i, t_o in [(table1, 1, 1), (table2, 1, 2), (table2, 2, 2), (table3, 1, 2)]:
        assert passes_unbiased_family(arr, t_i, t_o) == (classify(arr, t_i, t_o).verdict == AONT)


@given(st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_row_permutation_invariance(rnd):
    arr = builtin("table1")
    rows = list(arr.rows)
    rnd.shuffle(rows)
    shuffled = AontArray(arr.alphabet, arr.s, tuple(rows))
    for cols in column_set_family(arr.s, 1, 1):
        assert check_unbiased(arr, cols) == check_unbiased(shuffled, cols)
        assert check_covering(arr, cols) == check_covering(shuffled, cols)


@pytest.mark.parametrize("name,t", [("table1", 1), ("table2", 1)])
def test_unbiased_implies_covering(name, t):
    arr = builtin(name)
    for cols in column_set_family(arr.s, t, t if name == "table1" else 2):
        if check_unbiased(arr, cols).holds:
            assert check_covering(arr, cols).holds


def test_symmetric_aont_is_asymmetric_at_smaller_ti():
    # the full symmetric verdict at t implies the (t', t) verdict for t' <= t
    arr = builtin("table2")
    assert classify(arr, 1, 2).verdict == AONT
    # table1 at t=1: only t'=1 available, trivially equal
    t1 = builtin("table1")
    assert classify(t1, 1, 1).verdict == AONT


def test_blockwise_unbiased_implies_bijection(table1, table2):
    for arr in (table1, table2):
        assert check_unbiased(arr, arr.input_columns).holds
        assert check_unbiased(arr, arr.output_columns).holds
        inputs = [arr.project(row, arr.input_columns) for row in arr.rows]
        outputs = [arr.project(row, arr.output_columns) for row in arr.rows]
        assert len(set(inputs)) == arr.n_rows
        assert len(set(outputs)) == arr.n_rows


def test_csv_round_trip_is_byte_exact(table1, table3):
    for arr, text in [(table1, _TABLE1), (table3, _TABLE3)]:
        canonical = text.strip() + "\n"
        parsed = parse_array_csv(canonical)
        assert dump_array_csv(parsed, header=False) == canonical
        # header round trip too
        with_header = dump_array_csv(parsed, header=True)
        assert dump_array_csv(parse_array_csv(with_header), header=True) == with_header


def test_csv_header_inference_and_conflicts():
    text = "# v=3 s=2\n" + _TABLE1.strip() + "\n"
    arr = parse_array_csv(text)
    assert (arr.v, arr.s) == (3, 2)
    with pytest.raises(DimensionMismatchError):
        parse_array_csv(text, v=2)


def test_csv_truncated_file_rejected():
    lines = _TABLE1.strip().splitlines()[:-1]
    with pytest.raises(DimensionMismatchError):
        parse_array_csv("\n".join(lines))
