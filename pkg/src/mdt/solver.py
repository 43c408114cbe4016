"""Group assignment: candidate instantiation and constraint-satisfaction search.

A candidate pins a group entry onto concrete token positions. The
solver picks a subset of candidates that covers as many tokens as
possible with as few groups as possible, subject to:

  * no token belongs to two groups, except a merged token, which is the
    category slot of one group and the head of another;
  * every category slot of a selected group is merged (none dangle).

The search is exhaustive branch and bound at the scale this engine
targets; all co-optimal assignments are returned so downstream stages
can preserve ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .lexicon import GroupEntry, Lexicon
from .morpho import Analysis
from .pipeline import AnalyzedSentence, match_item


@dataclass(frozen=True)
class GroupInstance:
    """A group entry matched onto concrete, strictly increasing positions."""

    entry_index: int
    entry: GroupEntry
    positions: tuple[int, ...]
    chosen: tuple[Analysis, ...]

    @property
    def head_position(self) -> int:
        return self.positions[self.entry.head_index - 1]

    @property
    def span(self) -> tuple[int, int]:
        return (self.positions[0], self.positions[-1])

    def category_slots(self) -> tuple[tuple[int, int], ...]:
        """(1-based item index, token position) for each category item."""
        return tuple(
            (i, self.positions[i - 1])
            for i, item in enumerate(self.entry.items, 1)
            if item.is_category
        )

    def dump(self, merges: Iterable[tuple["GroupInstance", int, "GroupInstance"]] = ()) -> str:
        merged = [
            f"{item_index}->{child.entry.head_key}@{child.head_position}"
            for parent, item_index, child in merges
            if parent == self
        ]
        return (
            f"span={self.span[0]}..{self.span[1]} head={self.entry.head_key} "
            f"entry={self.entry_index + 1} merges=[{', '.join(merged)}]"
        )


@dataclass(frozen=True)
class Assignment:
    """A consistent set of instances plus the merge links between them.

    A merge link (A, i, B) means B's head token fills the category item
    ``i`` of A.
    """

    instances: tuple[GroupInstance, ...]
    merges: tuple[tuple[GroupInstance, int, GroupInstance], ...] = ()

    def covered_positions(self) -> set[int]:
        covered: set[int] = set()
        for inst in self.instances:
            covered.update(inst.positions)
        return covered

    def slot_fills(self, instance: GroupInstance) -> dict[int, GroupInstance]:
        return {i: child for parent, i, child in self.merges if parent == instance}

    def merged_children(self) -> set[GroupInstance]:
        return {child for _, _, child in self.merges}

    def dump(self) -> list[str]:
        return [inst.dump(self.merges) for inst in self.instances]


def score(assignment: Assignment) -> tuple[int, int]:
    """(covered token count, -group count); merged tokens count once."""
    return (len(assignment.covered_positions()), -len(assignment.instances))


def find_candidates(
    sentence: AnalyzedSentence, lexicon: Lexicon, max_gap: int = 0
) -> list[GroupInstance]:
    """Every way any entry matches the analyzed sentence.

    Entries are looked up by each non-deleted token's lookup form and
    analysis lexemes via the head index, then matched outward from the
    head over non-deleted tokens, allowing up to ``max_gap`` skipped
    tokens between adjacent items. Results are ordered by leftmost
    position, then entry file order, then positions.
    """
    visible = sentence.visible()
    v_index = {pos: vi for vi, pos in enumerate(visible)}
    found: list[GroupInstance] = []
    seen: set[tuple[int, tuple[int, ...]]] = set()

    for pos in visible:
        token = sentence.tokens[pos]
        keys: list[str] = [token.lookup]
        for analysis in token.analyses:
            if analysis.lexeme not in keys:
                keys.append(analysis.lexeme)
        for key in keys:
            for entry_index, entry in lexicon.entries_for_head(key):
                head_analysis = match_item(entry.head_item, token, lexicon.cats)
                if head_analysis is None:
                    continue
                h = entry.head_index - 1
                lefts = _matches_outward(
                    sentence, lexicon, visible, entry, range(h - 1, -1, -1), v_index[pos], -1, max_gap
                )
                rights = _matches_outward(
                    sentence, lexicon, visible, entry, range(h + 1, len(entry.items)), v_index[pos], 1, max_gap
                )
                for left in lefts:
                    for right in rights:
                        assignment = dict(left)
                        assignment.update(right)
                        assignment[h] = (pos, head_analysis)
                        positions = tuple(assignment[i][0] for i in range(len(entry.items)))
                        key2 = (entry_index, positions)
                        if key2 in seen:
                            continue
                        seen.add(key2)
                        chosen = tuple(assignment[i][1] for i in range(len(entry.items)))
                        found.append(GroupInstance(entry_index, entry, positions, chosen))
    found.sort(key=lambda g: (g.positions[0], g.entry_index, g.positions))
    return found


def _matches_outward(
    sentence: AnalyzedSentence,
    lexicon: Lexicon,
    visible: list[int],
    entry: GroupEntry,
    item_order: range,
    head_vi: int,
    direction: int,
    max_gap: int,
) -> list[dict[int, tuple[int, Analysis]]]:
    """All ways of matching the items in ``item_order`` walking away from
    the head; each result maps item index (0-based) to (position, analysis)."""
    results: list[dict[int, tuple[int, Analysis]]] = []

    def recurse(order_at: int, from_vi: int, acc: dict) -> None:
        if order_at == len(item_order):
            results.append(dict(acc))
            return
        item_i = item_order[order_at]
        item = entry.items[item_i]
        for gap in range(max_gap + 1):
            vi = from_vi + direction * (1 + gap)
            if vi < 0 or vi >= len(visible):
                break
            pos = visible[vi]
            analysis = match_item(item, sentence.tokens[pos], lexicon.cats)
            if analysis is not None:
                acc[item_i] = (pos, analysis)
                recurse(order_at + 1, vi, acc)
                del acc[item_i]
    recurse(0, head_vi, {})
    return results


def _merge_partners(a: GroupInstance, b: GroupInstance) -> Optional[list[tuple[GroupInstance, int, GroupInstance]]]:
    """Merge links implied by the overlap of two instances, or None when
    the overlap is illegal (any shared token must be a category slot of
    one instance and the head of the other)."""
    overlap = set(a.positions) & set(b.positions)
    if not overlap:
        return []
    links = []
    a_slots = dict((pos, i) for i, pos in a.category_slots())
    b_slots = dict((pos, i) for i, pos in b.category_slots())
    for pos in sorted(overlap):
        if pos in a_slots and b.head_position == pos:
            links.append((a, a_slots[pos], b))
        elif pos in b_slots and a.head_position == pos:
            links.append((b, b_slots[pos], a))
        else:
            return None
    return links


def _finalize(chosen: list[GroupInstance]) -> Optional[Assignment]:
    """Build the assignment for a pairwise-compatible subset; None if a
    category slot dangles or the merge structure is cyclic."""
    merges: list[tuple[GroupInstance, int, GroupInstance]] = []
    for a in chosen:
        for item_index, pos in a.category_slots():
            fillers = [b for b in chosen if b is not a and b.head_position == pos]
            if len(fillers) != 1:
                return None
            merges.append((a, item_index, fillers[0]))
    parent_of = {id(child): parent for parent, _, child in merges}
    for inst in chosen:
        hops, node = 0, inst
        while id(node) in parent_of:
            node = parent_of[id(node)]
            hops += 1
            if hops > len(chosen):
                return None
    ordered = tuple(sorted(chosen, key=lambda g: (g.positions[0], g.entry_index, g.positions)))
    merges.sort(key=lambda link: (link[0].positions[0], link[0].entry_index, link[1]))
    return Assignment(ordered, tuple(merges))


def solve(candidates: list[GroupInstance], sentence: AnalyzedSentence) -> list[Assignment]:
    """All co-optimal assignments, best first.

    Exhaustive branch-and-bound over candidate subsets. The bound is
    optimistic coverage (current plus every token still coverable), so
    only subtrees that cannot reach the best known coverage are pruned;
    ties are kept. Assignments are ranked by (covered, -groups) and
    tie-broken by leftmost-longest span order, so identical inputs give
    identical output.
    """
    head_positions = {c.head_position for c in candidates}
    usable = [
        c
        for c in candidates
        if all(pos in head_positions for _, pos in c.category_slots())
    ]

    complete: list[Assignment] = []
    best_covered = 0

    def recurse(at: int, chosen: list[GroupInstance], covered: set[int]) -> None:
        nonlocal best_covered
        reachable = set(covered)
        for c in usable[at:]:
            reachable.update(c.positions)
        if len(reachable) < best_covered:
            return
        if at == len(usable):
            assignment = _finalize(chosen)
            if assignment is not None:
                best_covered = max(best_covered, len(covered))
                complete.append(assignment)
            return
        candidate = usable[at]
        compatible = all(_merge_partners(candidate, other) is not None for other in chosen)
        if compatible:
            chosen.append(candidate)
            recurse(at + 1, chosen, covered | set(candidate.positions))
            chosen.pop()
        recurse(at + 1, chosen, covered)

    recurse(0, [], set())
    if not complete:
        complete.append(Assignment((), ()))
    top = max(score(a) for a in complete)
    winners = [a for a in complete if score(a) == top]
    winners.sort(key=_tie_key)
    return winners


def _tie_key(assignment: Assignment):
    spans = tuple(
        (inst.positions[0], inst.positions[0] - inst.positions[-1], inst.entry_index, inst.positions)
        for inst in assignment.instances
    )
    return spans


def verify_assignment(assignment: Assignment, sentence: AnalyzedSentence) -> list[str]:
    """Invariant check for a returned assignment; empty means clean.

    Checks coverage multiplicities, merge typing, dangling slots, merge
    acyclicity, and that matched tokens are non-deleted with strictly
    increasing positions.
    """
    problems = []
    for inst in assignment.instances:
        if list(inst.positions) != sorted(set(inst.positions)):
            problems.append(f"{inst.dump()}: positions not strictly increasing")
        for pos in inst.positions:
            if pos >= len(sentence.tokens) or sentence.tokens[pos].deleted:
                problems.append(f"{inst.dump()}: position {pos} is deleted or out of range")

    owners: dict[int, list[GroupInstance]] = {}
    for inst in assignment.instances:
        for pos in inst.positions:
            owners.setdefault(pos, []).append(inst)
    links = set((id(a), i, id(b)) for a, i, b in assignment.merges)
    for pos, insts in owners.items():
        if len(insts) == 1:
            continue
        if len(insts) > 2:
            problems.append(f"token {pos} covered by {len(insts)} instances")
            continue
        a, b = insts
        slot_ab = [(x, i, y) for x, y in ((a, b), (b, a)) for i, p in x.category_slots() if p == pos and y.head_position == pos]
        if not slot_ab:
            problems.append(f"token {pos} doubly covered without a slot/head merge")
        elif not any((id(x), i, id(y)) in links for x, i, y in slot_ab):
            problems.append(f"token {pos} merge not recorded")
    for inst in assignment.instances:
        fills = assignment.slot_fills(inst)
        for item_index, pos in inst.category_slots():
            if item_index not in fills:
                problems.append(f"{inst.dump()}: category slot {item_index} dangles")
            elif fills[item_index].head_position != pos:
                problems.append(f"{inst.dump()}: slot {item_index} filled by a non-head token")
    parent_of = {id(child): parent for parent, _, child in assignment.merges}
    for inst in assignment.instances:
        hops, node = 0, inst
        while id(node) in parent_of:
            node = parent_of[id(node)]
            hops += 1
            if hops > len(assignment.instances):
                problems.append("merge links form a cycle")
                break
    return problems
