"""Dense descending ranking over scalar and tuple scores."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference_data as ref
from wmsdrank import DomainViolation, MixedScoreKinds, rank


def positions(entries):
    return {e.id: e.position for e in entries}


def test_dense_positions_with_ties():
    got = rank([("a", 0.9), ("b", 0.7), ("c", 0.9), ("d", 0.5)])
    assert positions(got) == {"a": 1, "c": 1, "b": 2, "d": 3}


def test_descending_and_stable_within_ties():
    got = rank([("late", 0.5), ("top", 0.9), ("early", 0.5)])
    assert [e.id for e in got] == ["top", "late", "early"]
    assert [e.position for e in got] == [1, 2, 2]


def test_tolerance_merges_adjacent_runs():
    scores = [("a", 1.000), ("b", 0.9995), ("c", 0.9991), ("d", 0.90)]
    strict = rank(scores)
    assert [e.position for e in strict] == [1, 2, 3, 4]
    loose = rank(scores, tolerance=5e-4)
    # chained: a~b and b~c collapse all three into one class
    assert positions(loose) == {"a": 1, "b": 1, "c": 1, "d": 2}
    with pytest.raises(DomainViolation):
        rank(scores, tolerance=-1e-3)


def test_tuple_scores_rank_lexicographically():
    got = rank([("x", (0.88, -0.11)), ("y", (0.88, -0.09)),
                ("z", (0.96, -0.06))])
    assert positions(got) == {"z": 1, "y": 2, "x": 3}


def test_mixed_scores_rejected():
    with pytest.raises(MixedScoreKinds):
        rank([("a", 0.5), ("b", (0.5, 0.1))])
    with pytest.raises(MixedScoreKinds):
        rank([("a", (0.5, 0.1)), ("b", (0.5, 0.1, 0.2))])


def test_empty_input():
    assert rank([]) == []


def test_printed_table_column_reproduces_its_tie():
    """Feeding a printed 3-decimal column back through rank() must
    reproduce the printed dense positions, tie included."""
    col = ref.R_TABLE["eps7_3"]
    got = rank([(bus, col[bus][0]) for bus in ref.IDS])
    assert positions(got) == {bus: col[bus][1] for bus in ref.IDS}


@settings(deadline=None, max_examples=150)
@given(st.lists(st.floats(0, 1), min_size=1, max_size=12))
def test_positions_are_dense_from_one(values):
    entries = rank([(f"a{i}", v) for i, v in enumerate(values)])
    seen = [e.position for e in entries]
    assert seen[0] == 1
    assert all(b - a in (0, 1) for a, b in zip(seen, seen[1:]))
    assert max(seen) == len(set(values))


@settings(deadline=None, max_examples=150)
@given(st.lists(st.floats(0, 1), min_size=2, max_size=10))
def test_scores_nonincreasing_in_output_order(values):
    entries = rank([(f"a{i}", v) for i, v in enumerate(values)])
    out = [e.score for e in entries]
    assert all(a >= b for a, b in zip(out, out[1:]))
