"""Independent brute-force oracle for group assignment scoring.

Deliberately shares no search or validity code with the solver: it
enumerates every candidate subset and re-derives coverage and merge
legality from the raw entry items.
"""

from __future__ import annotations

from itertools import combinations


def _roles(instance):
    """token position -> set of roles ('head', 'slot', 'plain')."""
    roles = {}
    for i, (item, pos) in enumerate(zip(instance.entry.items, instance.positions), 1):
        tags = roles.setdefault(pos, set())
        if i == instance.entry.head_index:
            tags.add("head")
        elif item.kind == "cat":
            tags.add("slot")
        else:
            tags.add("plain")
    return roles


def subset_score(subset):
    """(covered, -groups) if the subset is a legal assignment, else None."""
    owners = {}
    for inst in subset:
        for pos, tags in _roles(inst).items():
            owners.setdefault(pos, []).append((inst, tags))

    parents = {}
    for pos, held in owners.items():
        if len(held) == 1:
            continue
        if len(held) > 2:
            return None
        (inst_a, tags_a), (inst_b, tags_b) = held
        if "slot" in tags_a and "head" in tags_b:
            parents[id(inst_b)] = id(inst_a)
        elif "slot" in tags_b and "head" in tags_a:
            parents[id(inst_a)] = id(inst_b)
        else:
            return None

    for inst in subset:
        for pos, tags in _roles(inst).items():
            if "slot" not in tags:
                continue
            fillers = [
                other
                for other in subset
                if other is not inst
                and other.positions[other.entry.head_index - 1] == pos
            ]
            if len(fillers) != 1:
                return None

    for start in parents:
        node, steps = start, 0
        while node in parents:
            node = parents[node]
            steps += 1
            if steps > len(subset):
                return None

    covered = {pos for inst in subset for pos in inst.positions}
    return (len(covered), -len(subset))


def best_score(candidates):
    """Maximum score over all legal subsets (exhaustive)."""
    best = (0, 0)
    for size in range(len(candidates) + 1):
        for subset in combinations(candidates, size):
            got = subset_score(subset)
            if got is not None and got > best:
                best = got
    return best
