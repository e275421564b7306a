"""Composition operators that grow a strongly antimagic labeling.

Three moves, each shifting old labels up and giving the new pendant edges
the smallest labels:

- extend_leaves: hang one new pendant edge off every leaf;
- attach_pendants_to_degree_class: same, but off every degree-k vertex;
- insert_unit_path: put one new unit path back on a double spider hub.

The instance-level reductions these moves undo (leaf-level deletion, unit
path removal) live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .labeling import EdgeLabeling, LabeledTree, labeled_spider, labeled_tree
from .spiders import (
    HUB_LEFT,
    HUB_RIGHT,
    CanonicalDoubleSpider,
    EdgeAddress,
    InvalidSpider,
    materialize_tree,
    oriented,
)
from .trees import edge_key, make_tree


class CompositionError(ValueError):
    """Preconditions of a composition move do not hold."""


class ConstructionBug(RuntimeError):
    """A move that is guaranteed to preserve the strong property failed to."""


@dataclass(frozen=True)
class ReductionStep:
    """One recorded reduction; replaying the stack LIFO undoes the whole chain."""

    kind: str  # "delete-leaf-level" | "remove-unit-right" | "remove-unit-left"

    def invert(self, lt: LabeledTree) -> LabeledTree:
        if self.kind == "delete-leaf-level":
            return extend_leaves(lt)
        if self.kind == "remove-unit-right":
            return insert_unit_path(lt, "right")
        if self.kind == "remove-unit-left":
            return insert_unit_path(lt, "left")
        raise ValueError(f"unknown reduction kind {self.kind!r}")


DELETE_LEAF_LEVEL = ReductionStep("delete-leaf-level")
REMOVE_UNIT_RIGHT = ReductionStep("remove-unit-right")
REMOVE_UNIT_LEFT = ReductionStep("remove-unit-left")


# ---------------------------------------------------------------------------
# Instance-level reductions
# ---------------------------------------------------------------------------


def delete_leaf_level(c: CanonicalDoubleSpider) -> CanonicalDoubleSpider:
    """Drop every leaf, shortening each pendant path by one edge."""
    if min(min(c.left_lengths), min(c.right_lengths)) < 2:
        raise InvalidSpider("cannot delete the leaf level: a unit path would vanish")
    return oriented(
        c.core_length,
        (l - 1 for l in c.left_lengths),
        (l - 1 for l in c.right_lengths),
    )


def remove_unit_path(c: CanonicalDoubleSpider, side: str) -> CanonicalDoubleSpider:
    lengths = c.left_lengths if side == "left" else c.right_lengths
    if 1 not in lengths:
        raise InvalidSpider(f"no unit path on the {side} side")
    trimmed = list(lengths)
    trimmed.remove(1)
    if side == "left":
        return oriented(c.core_length, trimmed, c.right_lengths)
    return oriented(c.core_length, c.left_lengths, trimmed)


def grow_all_paths(c: CanonicalDoubleSpider) -> CanonicalDoubleSpider:
    """Inverse of delete_leaf_level at the instance level."""
    return oriented(
        c.core_length,
        (l + 1 for l in c.left_lengths),
        (l + 1 for l in c.right_lengths),
    )


def add_unit_path(c: CanonicalDoubleSpider, side: str) -> CanonicalDoubleSpider:
    if side == "left":
        return oriented(c.core_length, c.left_lengths + (1,), c.right_lengths)
    return oriented(c.core_length, c.left_lengths, c.right_lengths + (1,))


# ---------------------------------------------------------------------------
# Leaf extension
# ---------------------------------------------------------------------------


def _fresh_id(base: str, taken: set[str]) -> str:
    vid = base + "+"
    while vid in taken:
        vid += "+"
    return vid


def extend_leaves(lt: LabeledTree) -> LabeledTree:
    """Attach one new pendant edge to every leaf (Lemma-1 style growth).

    New edges get 1..|V1| in ascending order of the old leaf sums; every old
    label shifts up by |V1|.
    """
    if not lt.report.strong_ok:
        raise CompositionError("input labeling is not strongly antimagic")
    leaves = lt.tree.leaves()
    if not leaves:
        raise CompositionError("tree has no leaves")
    if lt.spider is not None:
        return _extend_leaves_spider(lt)

    n = len(leaves)
    ranked = sorted(leaves, key=lambda v: lt.report.sums[v])
    taken = set(lt.tree.vertices)
    new_vertices = list(lt.tree.vertices)
    new_edges = list(lt.tree.edges)
    labels = {e: lab + n for e, lab in lt.labels.items()}
    for rank, leaf in enumerate(ranked, start=1):
        mate = _fresh_id(leaf, taken)
        taken.add(mate)
        new_vertices.append(mate)
        e = edge_key(leaf, mate)
        new_edges.append(e)
        labels[e] = rank
    out = labeled_tree(make_tree(new_vertices, new_edges), labels)
    if not out.report.strong_ok:
        raise ConstructionBug("leaf extension broke the strong property")
    return out


def _extend_leaves_spider(lt: LabeledTree) -> LabeledTree:
    spider = lt.spider
    p = spider.params
    grown = grow_all_paths(spider.instance)
    n = len(spider.instance.left_lengths) + len(spider.instance.right_lengths)

    # Every path switches parity class; indices line up because the per-class
    # orderings are preserved (old units become the shortest even paths).
    addr_map: dict[EdgeAddress, EdgeAddress] = {}
    pendants: list[tuple[int, EdgeAddress]] = []  # (old pendant label, new pendant address)
    old = lt.labeling.assignment

    for j in range(1, p.s + 1):
        addr_map[EdgeAddress.core(j)] = EdgeAddress.core(j)
    for i, xi in enumerate(p.x, start=1):
        for j in range(1, 2 * xi + 2):
            addr_map[EdgeAddress.r_odd(i, j)] = EdgeAddress.r_even(i, j)
        pendants.append((old[EdgeAddress.r_odd(i, 2 * xi + 1)], EdgeAddress.r_even(i, 2 * xi + 2)))
    for i, yi in enumerate(p.y, start=1):
        for j in range(1, 2 * yi + 1):
            addr_map[EdgeAddress.r_even(i, j)] = EdgeAddress.r_odd(i, j)
        pendants.append((old[EdgeAddress.r_even(i, 2 * yi)], EdgeAddress.r_odd(i, 2 * yi + 1)))
    for i, wi in enumerate(p.w, start=1):
        for j in range(1, 2 * wi + 2):
            addr_map[EdgeAddress.l_odd(i, j)] = EdgeAddress.l_even(p.t + i, j + 1)
        pendants.append((old[EdgeAddress.l_odd(i, 1)], EdgeAddress.l_even(p.t + i, 1)))
    for i, zi in enumerate(p.z, start=1):
        for j in range(1, 2 * zi + 1):
            addr_map[EdgeAddress.l_even(i, j)] = EdgeAddress.l_odd(i, j + 1)
        pendants.append((old[EdgeAddress.l_even(i, 1)], EdgeAddress.l_odd(i, 1)))
    for i in range(1, p.t + 1):
        addr_map[EdgeAddress.l_unit(i)] = EdgeAddress.l_even(i, 2)
        pendants.append((old[EdgeAddress.l_unit(i)], EdgeAddress.l_even(i, 1)))

    assignment = {addr_map[a]: lab + n for a, lab in old.items()}
    pendants.sort(key=lambda pair: pair[0])
    for rank, (_, new_addr) in enumerate(pendants, start=1):
        assignment[new_addr] = rank

    out = labeled_spider(materialize_tree(grown), EdgeLabeling(p.m + n, assignment))
    if not out.report.strong_ok:
        raise ConstructionBug("leaf extension broke the strong property")
    return out


def attach_pendants_to_degree_class(lt: LabeledTree, k: int) -> LabeledTree:
    """Attach one new pendant edge to every degree-k vertex.

    Generalizes extend_leaves (which is the k = 1 case); the output is a
    plain labeled tree even when the input was a double spider, since the
    attachment usually leaves that family.
    """
    if not lt.report.strong_ok:
        raise CompositionError("input labeling is not strongly antimagic")
    targets = [v for v in lt.tree.vertices if lt.tree.degree(v) == k]
    if not targets:
        raise CompositionError(f"no vertices of degree {k}")

    n = len(targets)
    ranked = sorted(targets, key=lambda v: lt.report.sums[v])
    taken = set(lt.tree.vertices)
    new_vertices = list(lt.tree.vertices)
    new_edges = list(lt.tree.edges)
    labels = {e: lab + n for e, lab in lt.labels.items()}
    for rank, v in enumerate(ranked, start=1):
        mate = _fresh_id(v, taken)
        taken.add(mate)
        new_vertices.append(mate)
        e = edge_key(v, mate)
        new_edges.append(e)
        labels[e] = rank
    out = labeled_tree(make_tree(new_vertices, new_edges), labels)
    if not out.report.strong_ok:
        raise ConstructionBug("pendant attachment broke the strong property")
    return out


# ---------------------------------------------------------------------------
# Unit-path insertion at a hub
# ---------------------------------------------------------------------------


def insert_unit_path(lt: LabeledTree, side: str) -> LabeledTree:
    """Add a unit path at a hub: the new edge gets 1, everything shifts by 1.

    Right insertion needs the right hub to reach degree > 3 without passing
    the left one; left insertion needs the left hub to stay strictly ahead in
    degree and to already carry the larger vertex sum.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if lt.spider is None:
        raise CompositionError("unit-path insertion needs a double spider instance")
    if not lt.report.strong_ok:
        raise CompositionError("input labeling is not strongly antimagic")

    p = lt.spider.params
    if side == "right":
        if p.deg_vl < p.deg_vr + 1:
            raise CompositionError("right insertion would push deg(vr) past deg(vl)")
    else:
        if p.deg_vl + 1 <= p.deg_vr:
            raise CompositionError("left insertion needs deg(vl)+1 > deg(vr)")
        if lt.report.sums[HUB_LEFT] <= lt.report.sums[HUB_RIGHT]:
            raise CompositionError("left insertion needs phi(vl) > phi(vr)")

    enlarged = add_unit_path(lt.spider.instance, side)
    old = lt.labeling.assignment
    assignment: dict[EdgeAddress, int] = {}
    if side == "left":
        for addr, lab in old.items():
            assignment[addr] = lab + 1
        assignment[EdgeAddress.l_unit(p.t + 1)] = 1
    else:
        units = sum(1 for xi in p.x if xi == 0)
        for addr, lab in old.items():
            if addr.kind == "R/odd" and addr.i > units:
                addr = EdgeAddress.r_odd(addr.i + 1, addr.j)
            assignment[addr] = lab + 1
        assignment[EdgeAddress.r_odd(units + 1, 1)] = 1

    out = labeled_spider(materialize_tree(enlarged), EdgeLabeling(p.m + 1, assignment))
    if not out.report.strong_ok:
        raise ConstructionBug("unit-path insertion broke the strong property")
    return out
