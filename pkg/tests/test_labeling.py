"""Vertex sums and the antimagic / strongly antimagic verifiers."""

import pytest
from hypothesis import given, settings, strategies as st

from antimagic import (
    DoubleSpiderSpec,
    EdgeAddress,
    EdgeLabeling,
    LabelingError,
    canonicalize,
    enumerate_instances,
    materialize_tree,
    verify_antimagic,
    verify_bijection,
    verify_strongly_antimagic,
    vertex_sums,
)
from antimagic.labelers import SPECIAL_INSTANCE_ASSIGNMENT
from antimagic.labelers import SPECIAL_INSTANCE
from antimagic.trees import edge_key, path_tree


def path_labels(*labels):
    return {edge_key(f"p{i}", f"p{i+1}"): lab for i, lab in enumerate(labels, start=1)}


def special():
    spider = materialize_tree(SPECIAL_INSTANCE)
    return spider, EdgeLabeling(8, dict(SPECIAL_INSTANCE_ASSIGNMENT))


def test_vertex_sums_path3():
    rep = vertex_sums(path_tree(3), path_labels(1, 2))
    assert rep.sums == {"p1": 1, "p2": 3, "p3": 2}


def test_vertex_sums_single_edge():
    rep = vertex_sums(path_tree(2), path_labels(1))
    assert rep.sums == {"p1": 1, "p2": 1}


def test_vertex_sums_special_instance():
    spider, labeling = special()
    rep = vertex_sums(spider, labeling)
    assert rep.sums["vl"] == 15 and rep.sums["vr"] == 13
    deg2 = sorted(rep.sums[v] for v in rep.degree_classes[2])
    leaves = sorted(rep.sums[v] for v in rep.degree_classes[1])
    assert deg2 == [8, 9, 11]
    assert leaves == [1, 4, 5, 6]


def test_vertex_sums_rejects_mismatched_edges():
    with pytest.raises(LabelingError):
        vertex_sums(path_tree(3), path_labels(1))


def test_verify_bijection():
    assert verify_bijection({("a", "b"): 1, ("b", "c"): 2, ("c", "d"): 3})
    assert not verify_bijection({("a", "b"): 1, ("b", "c"): 1, ("c", "d"): 3})
    assert not verify_bijection({("a", "b"): 2, ("b", "c"): 3, ("c", "d"): 4})


def test_verify_antimagic_special_instance():
    spider, labeling = special()
    assert verify_antimagic(spider, labeling)


def test_verify_antimagic_k2_false():
    assert not verify_antimagic(path_tree(2), path_labels(1))


def test_verify_antimagic_path4_sequential_false():
    assert not verify_antimagic(path_tree(4), path_labels(1, 2, 3))


def test_verify_antimagic_reports_bad_bijection_distinctly():
    with pytest.raises(LabelingError):
        verify_antimagic(path_tree(4), path_labels(1, 1, 3))


def test_strongly_antimagic_special_instance():
    spider, labeling = special()
    assert verify_strongly_antimagic(spider, labeling).strong_ok


def test_strongly_antimagic_path4():
    rep = verify_strongly_antimagic(path_tree(4), path_labels(1, 3, 2))
    assert rep.strong_ok
    assert sorted(rep.sums.values()) == [1, 2, 4, 5]


def test_strongly_antimagic_detects_swap():
    spider, _ = special()
    tampered = dict(SPECIAL_INSTANCE_ASSIGNMENT)
    a7 = next(a for a, l in tampered.items() if l == 7)
    a1 = next(a for a, l in tampered.items() if l == 1)
    tampered[a7], tampered[a1] = 1, 7
    rep = verify_strongly_antimagic(spider, EdgeLabeling(8, tampered))
    assert not rep.strong_ok
    assert rep.violation is not None


def test_bad_bijection_flagged_in_report():
    rep = verify_strongly_antimagic(path_tree(4), path_labels(1, 1, 3))
    assert not rep.bijection_ok and not rep.strong_ok
    assert rep.violation.reason == "bad-bijection"


@st.composite
def labeled_instance(draw):
    core = draw(st.integers(min_value=1, max_value=3))
    left = draw(st.lists(st.integers(min_value=1, max_value=3), min_size=2, max_size=3))
    right = draw(st.lists(st.integers(min_value=1, max_value=3), min_size=2, max_size=3))
    spider = materialize_tree(canonicalize(DoubleSpiderSpec(core, tuple(left), tuple(right))))
    m = spider.params.m
    labels = draw(st.permutations(list(range(1, m + 1))))
    return spider, dict(zip(sorted(spider.tree.edges), labels))


@given(labeled_instance())
@settings(max_examples=120, deadline=None)
def test_handshake_identity(case):
    spider, labels = case
    rep = vertex_sums(spider.tree, labels)
    assert sum(rep.sums.values()) == len(labels) * (len(labels) + 1)


@given(labeled_instance())
@settings(max_examples=120, deadline=None)
def test_strong_implies_antimagic_and_class_monotone(case):
    spider, labels = case
    rep = vertex_sums(spider.tree, labels)
    if not rep.strong_ok:
        return
    assert rep.antimagic_ok
    # strictly increasing across every occupied degree-class boundary
    degrees = sorted(rep.degree_classes)
    for lo, hi in zip(degrees, degrees[1:]):
        max_lo = max(rep.sums[v] for v in rep.degree_classes[lo])
        min_hi = min(rep.sums[v] for v in rep.degree_classes[hi])
        assert max_lo < min_hi


def test_strong_verifier_over_small_enumeration():
    # sanity: reports agree with a direct quadratic re-check
    from antimagic import strongly_antimagic_label
    for c in enumerate_instances(8):
        lt = strongly_antimagic_label(c)
        rep = lt.report
        sums, tree = rep.sums, lt.tree
        for u in tree.vertices:
            for v in tree.vertices:
                if u < v:
                    assert sums[u] != sums[v]
                if tree.degree(u) < tree.degree(v):
                    assert sums[u] < sums[v]
