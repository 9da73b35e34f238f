"""Cell-by-cell reproduction of the frozen bus-study tables.

These tests recompute every frozen table from the raw inputs and check
each cell.  The transcription defects documented in reference_data are
asserted as defects: each test proves both that the labelled reading
fails and that the documented substitution reproduces the numbers.
"""

import numpy as np
import pytest

import reference_data as ref
from wmsdrank import (
    AggregationSpec,
    LexSpec,
    agg_M,
    agg_classic,
    agg_elliptic,
    apply_weights,
    evaluate_dataset,
    rank,
    round_half_away,
    score_dataset,
    to_utility_space,
    wmsd_many,
)
from wmsdrank.config import TWO_DECIMAL, config_from_mapping

COLUMN_EPSILON = {
    "eps1": 1.0,
    "eps08": 0.8,
    "eps3_7": 3.0 / 7.0,
    "eps7_3": 7.0 / 3.0,
    "M": None,
}

TABLES = {"R": ref.R_TABLE, "I": ref.I_TABLE, "A": ref.A_TABLE}


def rounded_config():
    return config_from_mapping({
        "criteria": [{"name": n, "direction": d, "range": [lo, hi]}
                     for n, d, lo, hi in ref.CRITERIA],
        "rounding_mode": TWO_DECIMAL,
    })


def column_scores(kind, column, weights):
    eps = COLUMN_EPSILON[column]
    out = {}
    for bus in ref.IDS:
        p = ref.WMSD_2DP[bus]
        if eps is None:
            val = agg_M(p)
        else:
            val = agg_elliptic(kind, eps, p, weights)
        out[bus] = round_half_away(val, 3)
    return out


def test_wmsd_table_from_raw_pipeline(bus_matrix, unit_weights):
    u = to_utility_space(bus_matrix)
    v = apply_weights(u, unit_weights)
    wm, wsd = wmsd_many(v, unit_weights)
    for i, bus in enumerate(ref.IDS):
        got = (round_half_away(wm[i], 2), round_half_away(wsd[i], 2))
        assert got == ref.WMSD_2DP[bus], bus


def test_utility_rows_disagree_with_wsd_only_for_b07(unit_weights):
    # the 2-decimal utility rows are a lossy transcription; nine of the
    # ten still round back onto the frozen (WM, WSD) pairs
    mismatched = []
    for bus in ref.IDS:
        v = np.array(ref.UTILITY_2DP[bus], dtype=float).reshape(1, -1)
        wm, wsd = wmsd_many(v, unit_weights)
        got = (round_half_away(wm[0], 2), round_half_away(wsd[0], 2))
        if got != ref.WMSD_2DP[bus]:
            mismatched.append(bus)
    assert mismatched == ["b07"]

    v = np.array(ref.UTILITY_2DP["b07"], dtype=float).reshape(1, -1)
    _, wsd = wmsd_many(v, unit_weights)
    assert wsd[0] == pytest.approx(0.095131, abs=1e-6)
    assert round_half_away(wsd[0], 2) == 0.10


@pytest.mark.parametrize("kind", sorted(TABLES))
@pytest.mark.parametrize("column", sorted(COLUMN_EPSILON))
def test_score_table_cells(kind, column, unit_weights):
    got = column_scores(kind, column, unit_weights)
    for bus in ref.IDS:
        printed = TABLES[kind][column][bus][0]
        if kind == "R" and column == "eps7_3" and bus == "b07":
            assert got[bus] == round_half_away(ref.R_EPS7_3_B07_CORRECT, 3)
            assert got[bus] != printed
        else:
            assert got[bus] == printed, (kind, column, bus)


@pytest.mark.parametrize("kind", sorted(TABLES))
@pytest.mark.parametrize("column", sorted(COLUMN_EPSILON))
def test_score_table_positions(kind, column, unit_weights):
    got = column_scores(kind, column, unit_weights)
    entries = rank([(bus, got[bus]) for bus in ref.IDS])
    positions = {e.id: e.position for e in entries}
    if kind == "R" and column == "eps7_3":
        expect = ref.R_EPS7_3_CORRECTED_POSITIONS
    else:
        expect = {bus: TABLES[kind][column][bus][1] for bus in ref.IDS}
    assert positions == expect


@pytest.mark.parametrize("kind", sorted(TABLES))
@pytest.mark.parametrize("column", sorted(COLUMN_EPSILON))
def test_printed_positions_follow_printed_values(kind, column):
    entries = rank([(bus, TABLES[kind][column][bus][0]) for bus in ref.IDS])
    for e in entries:
        assert e.position == TABLES[kind][column][e.id][1], (kind, column)


def test_label_04_columns_were_produced_at_3_7(unit_weights):
    # at the literal label the R b07 cell misses by 9e-3, far outside
    # even the relaxed 1.5e-3 budget; at 3/7 it lands within 5e-4
    literal = agg_elliptic("R", 0.4, (0.95, 0.09), unit_weights)
    assert abs(literal - 0.818) > 1.5e-3
    substituted = agg_elliptic("R", 3.0 / 7.0, (0.95, 0.09), unit_weights)
    assert abs(substituted - 0.818) <= 5e-4

    literal = agg_elliptic("I", 0.4, (0.45, 0.32), unit_weights)
    assert abs(literal - 0.073) > 1.5e-3
    substituted = agg_elliptic("I", 3.0 / 7.0, (0.45, 0.32), unit_weights)
    assert abs(substituted - 0.073) <= 5e-4


def test_label_23_columns_were_produced_at_7_3(unit_weights):
    literal = agg_elliptic("A", 2.3, (0.45, 0.32), unit_weights)
    assert abs(literal - 0.470) > 5e-4
    substituted = agg_elliptic("A", 7.0 / 3.0, (0.45, 0.32), unit_weights)
    assert abs(substituted - 0.470) <= 5e-4

    literal = agg_elliptic("R", 2.3, (0.94, 0.08), unit_weights)
    assert round_half_away(literal, 3) == 0.931
    substituted = agg_elliptic("R", 7.0 / 3.0, (0.94, 0.08), unit_weights)
    assert round_half_away(substituted, 3) == 0.932


def test_r_b07_cell_under_7_3_is_a_paste_from_13_7(unit_weights):
    true_val = agg_elliptic("R", 7.0 / 3.0, (0.95, 0.09), unit_weights)
    assert true_val == pytest.approx(ref.R_EPS7_3_B07_CORRECT, abs=1e-6)
    assert abs(true_val - ref.R_EPS7_3_B07_PRINTED) > 5e-3
    # the literal 2.3 reading does not explain the cell either
    assert abs(agg_elliptic("R", 2.3, (0.95, 0.09), unit_weights)
               - ref.R_EPS7_3_B07_PRINTED) > 5e-3
    paste = agg_elliptic("R", ref.R_EPS7_3_B07_PASTE_EPSILON,
                         (0.95, 0.09), unit_weights)
    assert abs(paste - ref.R_EPS7_3_B07_PRINTED) < 2.5e-4


@pytest.mark.parametrize("variant", sorted(ref.LEX_TABLE))
def test_lexicographic_table(variant, bus_matrix):
    ev = evaluate_dataset(bus_matrix, rounded_config())
    scores = dict(score_dataset(ev, LexSpec(variant)))
    for bus in ref.IDS:
        want = ref.LEX_TABLE[variant][bus][0]
        assert scores[bus] == pytest.approx(want, abs=1e-12), (variant, bus)
    if variant == "RL":
        assert scores["b03"][1] == 0.0

    entries = rank(sorted(scores.items()))
    positions = {e.id: e.position for e in entries}
    assert positions == {bus: ref.LEX_TABLE[variant][bus][1]
                         for bus in ref.IDS}


def test_classic_column_equals_score_dataset_route(bus_matrix):
    ev = evaluate_dataset(bus_matrix, rounded_config())
    scores = dict(score_dataset(ev, AggregationSpec("classic", "R")))
    for bus in ref.IDS:
        assert round_half_away(scores[bus], 3) == ref.R_TABLE["eps1"][bus][0]
        assert scores[bus] == agg_classic(
            "R", ref.WMSD_2DP[bus], ev.weights)
