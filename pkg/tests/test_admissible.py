import pytest

from genocchi.admissible import (
    AdmissibleSequence,
    GammaGraph,
    collect_admissible,
    count_closed_column_graded,
    enumerate_admissible,
    is_closed_in_gamma,
)
from genocchi.errors import ResourceLimitError
from genocchi.seidel import normalized_h


def test_n1_is_the_empty_sequence():
    seqs = collect_admissible(1)
    assert len(seqs) == 1
    assert seqs[0].sets() == ()


def test_n2_lists_both_singletons():
    seqs = collect_admissible(2)
    assert sorted(s.sets() for s in seqs) == [((1,),), ((2,),)]


def test_n3_count():
    assert enumerate_admissible(3) == 7


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_the_triangle(n):
    assert enumerate_admissible(n) == normalized_h(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_closed_subset_count_agrees(n):
    assert count_closed_column_graded(n) == enumerate_admissible(n)


def test_closed_subset_golden_values():
    assert count_closed_column_graded(3) == 7
    assert count_closed_column_graded(1) == 1
    assert count_closed_column_graded(4) == 38


def test_validation_enforces_sizes_and_containment():
    AdmissibleSequence(3, (0b0010, 0b0110))  # I1={1}, I2={1,2}
    with pytest.raises(ValueError):
        AdmissibleSequence(3, (0b0110, 0b0010))  # |I1| = 2
    with pytest.raises(ValueError):
        # I1={2} but I2 ∪ {2} = {1,3} ∪ {2} contains 2, so pick a real violation:
        # I1={4} is outside {1..3}
        AdmissibleSequence(3, (0b10000, 0b0110))
    with pytest.raises(ValueError):
        # I1={3}, I2={1,2}: 3 not in I2 ∪ {2}
        AdmissibleSequence(3, (0b1000, 0b0110))


def test_containment_condition_on_the_visited_stream():
    for seq in collect_admissible(5):
        sets = [set(s) for s in seq.sets()]
        for l in range(len(sets) - 1):
            assert sets[l] <= sets[l + 1] | {l + 2}


def test_visit_order_is_deterministic():
    a = [s.sets() for s in collect_admissible(5)]
    b = [s.sets() for s in collect_admissible(5)]
    assert a == b


def test_subset_map_is_injective_and_lands_on_closed_sets():
    n = 5
    graph = GammaGraph(n)
    images = set()
    for seq in collect_admissible(n):
        vertices = frozenset(
            (l, j) for l, s in enumerate(seq.sets(), start=1) for j in s
        )
        assert is_closed_in_gamma(vertices, graph)
        images.add(vertices)
    assert len(images) == normalized_h(n)


def test_is_closed_golden_cases():
    g = GammaGraph(5)
    assert is_closed_in_gamma(set(), g)
    assert is_closed_in_gamma(set(g.vertices()), g)
    assert not is_closed_in_gamma({(1, 5)}, g)  # (1,5) -> (2,5) leaves the set
    assert is_closed_in_gamma({(1, 2)}, g)  # arrow to (2,2) does not exist
    with pytest.raises(ValueError):
        is_closed_in_gamma({(9, 9)}, g)


def test_gamma_graph_arrows_match_the_rule():
    g = GammaGraph(5)
    arrows = set(g.arrows())
    assert ((1, 1), (2, 1)) in arrows
    assert all(t == (v[0] + 1, v[1]) for v, t in arrows)
    assert not any(v[0] + 1 == v[1] for v, _ in arrows)
    # out-degree: 1 unless the next column equals the row or is off the grid
    for l, j in g.vertices():
        expected = 1 if (l + 1 <= 4 and l + 1 != j) else 0
        assert (g.arrow_target((l, j)) is not None) == bool(expected)


def test_resource_limit_and_domain_errors():
    with pytest.raises(ResourceLimitError):
        enumerate_admissible(9)
    with pytest.raises(ValueError):
        enumerate_admissible(0)
    with pytest.raises(ResourceLimitError):
        count_closed_column_graded(9)


def test_json_shape():
    seq = AdmissibleSequence(3, (0b0010, 0b1010))
    assert seq.json_dict() == {"n": 3, "sets": [[1], [1, 3]]}
