"""Transfer, linearization, and surface realization.

A source assignment becomes one target group instance tree per selected
top-level group. Agreement constraints copy features from matched
source tokens onto target items; merged category slots recurse into the
instance that filled them, with the slot's imposed features and any
agreement into the slot landing on the filler's head item.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .features import EMPTY, FeatureMap
from .lexicon import GroupItem, Lexicon, Translation
from .morpho import FormTable, generate
from .pipeline import AnalyzedSentence, AnalyzedToken, analyze_sentence, apply_transforms
from .solver import Assignment, GroupInstance, find_candidates, solve

#: Rendering of a generation gap: the lexeme stays visible for CAT review.
GAP_OPEN, GAP_CLOSE = "⟦", "⟧"


@dataclass(frozen=True)
class TargetGroupInstance:
    """A transferred group: chosen translation, per-item features, and
    expansions for merged category slots (keyed by 1-based target item
    index)."""

    source: GroupInstance
    translation: Translation
    item_features: tuple[FeatureMap, ...]
    slot_expansions: tuple[tuple[int, "TargetGroupInstance"], ...] = ()

    def expansion_for(self, target_index: int) -> Optional["TargetGroupInstance"]:
        for i, child in self.slot_expansions:
            if i == target_index:
                return child
        return None


@dataclass(frozen=True)
class LinearItem:
    """One slot of the linearized output: either a target item with its
    features or an untranslated source token."""

    item: Optional[GroupItem] = None
    features: FeatureMap = EMPTY
    token: Optional[AnalyzedToken] = None

    @property
    def untranslated(self) -> bool:
        return self.token is not None


@dataclass(frozen=True)
class Segment:
    text: str
    untranslated: bool = False


@dataclass
class AssignmentOutputs:
    assignment: Assignment
    sentences: list[list[Segment]]


@dataclass
class TranslationResult:
    """End-to-end result: analyzed source plus outputs per assignment."""

    source: str
    sentence: Optional[AnalyzedSentence]
    per_assignment: list[AssignmentOutputs] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    @property
    def outputs(self) -> list[str]:
        return [
            " ".join(seg.text for seg in sentence)
            for block in self.per_assignment
            for sentence in block.sentences
        ]

    def to_doc(self) -> dict:
        """JSON-ready structured document (service and --json output)."""
        analyses = []
        if self.sentence is not None:
            for tok in self.sentence.tokens:
                analyses.append(
                    {
                        "surface": tok.surface,
                        "deleted": tok.deleted,
                        "analyses": [
                            {"lexeme": a.lexeme, "pos": a.pos, "features": a.features.as_dict()}
                            for a in tok.analyses
                        ],
                    }
                )
        assignments = []
        for block in self.per_assignment:
            assignments.append(
                {
                    "score": list(_score_of(block.assignment)),
                    "instances": block.assignment.dump(),
                }
            )
        outputs = [
            [{"text": seg.text, "untranslated": seg.untranslated} for seg in sentence]
            for block in self.per_assignment
            for sentence in block.sentences
        ]
        return {
            "source": self.source,
            "analyses": analyses,
            "assignments": assignments,
            "outputs": outputs,
        }


def _score_of(assignment: Assignment) -> tuple[int, int]:
    from .solver import score

    return score(assignment)


def _tree_positions(inst: GroupInstance, children_of: dict[int, dict[int, GroupInstance]]) -> set[int]:
    positions = set(inst.positions)
    for child in children_of.get(id(inst), {}).values():
        positions |= _tree_positions(child, children_of)
    return positions


def _head_target_index(tgi: TargetGroupInstance) -> int:
    entry = tgi.source.entry
    return tgi.translation.alignment[entry.head_index - 1]


def _impose_on_head(tgi: TargetGroupInstance, features: FeatureMap) -> Optional[TargetGroupInstance]:
    """Unify ``features`` into the tree's head item, following nested
    expansions if the head position is itself a merged slot."""
    if not features:
        return tgi
    head_index = _head_target_index(tgi)
    nested = tgi.expansion_for(head_index)
    if nested is not None:
        replaced = _impose_on_head(nested, features)
        if replaced is None:
            return None
        expansions = tuple(
            (i, replaced if i == head_index else child) for i, child in tgi.slot_expansions
        )
        return TargetGroupInstance(tgi.source, tgi.translation, tgi.item_features, expansions)
    unified = tgi.item_features[head_index - 1].unify(features)
    if unified is None:
        return None
    item_features = tuple(
        unified if i == head_index else feats
        for i, feats in enumerate(tgi.item_features, 1)
    )
    return TargetGroupInstance(tgi.source, tgi.translation, item_features, tgi.slot_expansions)


def _expand_instance(
    inst: GroupInstance,
    target_lang: str,
    children_of: dict[int, dict[int, GroupInstance]],
) -> list[TargetGroupInstance]:
    """All surviving translation alternatives for one instance, in entry
    order. An alternative dies when feature unification fails anywhere
    in its tree."""
    children = children_of.get(id(inst), {})
    alternatives: list[TargetGroupInstance] = []
    for translation in inst.entry.translations:
        if translation.target_lang != target_lang:
            continue
        item_features: list[FeatureMap] = [item.constraints for item in translation.items]
        ok = True
        for agc in translation.agreements:
            source_features = inst.chosen[agc.source_pos - 1].features
            copied = {}
            for src_name, tgt_name in agc.mappings:
                value = source_features.get(src_name)
                if value is not None:
                    copied[tgt_name] = value
            if not copied:
                continue
            unified = item_features[agc.target_pos - 1].unify(FeatureMap(copied))
            if unified is None:
                ok = False
                break
            item_features[agc.target_pos - 1] = unified
        if not ok:
            continue

        # Category slots: the accumulated features move onto the filler's
        # head item instead of being realized in place.
        slot_targets: dict[int, tuple[int, FeatureMap]] = {}
        for source_item_index, child in children.items():
            target_index = translation.alignment[source_item_index - 1]
            slot_targets[target_index] = (source_item_index, item_features[target_index - 1])

        child_alternatives: list[list[tuple[int, TargetGroupInstance]]] = []
        for target_index, (source_item_index, imposed) in sorted(slot_targets.items()):
            child = children[source_item_index]
            expanded = []
            for alt in _expand_instance(child, target_lang, children_of):
                adjusted = _impose_on_head(alt, imposed)
                if adjusted is not None:
                    expanded.append((target_index, adjusted))
            child_alternatives.append(expanded)

        base = tuple(item_features)
        for combo in itertools.product(*child_alternatives):
            alternatives.append(TargetGroupInstance(inst, translation, base, tuple(combo)))
    return alternatives


def transfer(
    assignment: Assignment, lexicon: Lexicon, target_lang: str
) -> list[dict[int, TargetGroupInstance]]:
    """All combinations of translation choices for an assignment.

    Each combination maps ``id(instance)`` of a surviving top-level
    instance to its transferred tree. Instances whose alternatives all
    fail are left out; their tokens surface untranslated downstream.
    """
    children_of: dict[int, dict[int, GroupInstance]] = {}
    for parent, item_index, child in assignment.merges:
        children_of.setdefault(id(parent), {})[item_index] = child
    merged = assignment.merged_children()
    top_level = [inst for inst in assignment.instances if inst not in merged]

    surviving: list[tuple[GroupInstance, list[TargetGroupInstance]]] = []
    for inst in top_level:
        alternatives = _expand_instance(inst, target_lang, children_of)
        if alternatives:
            surviving.append((inst, alternatives))

    combos: list[dict[int, TargetGroupInstance]] = []
    for picks in itertools.product(*(alts for _, alts in surviving)):
        combos.append({id(inst): tree for (inst, _), tree in zip(surviving, picks)})
    return combos


def linearize(
    combo: dict[int, TargetGroupInstance],
    assignment: Assignment,
    sentence: AnalyzedSentence,
) -> list[LinearItem]:
    """Flatten one transfer combination into an ordered item list.

    Top-level trees sit at their leftmost source position (top-level
    spans never overlap, so this also orders them by head position);
    category items are replaced in place by their expansion; non-deleted
    tokens outside every surviving tree pass through untranslated at
    their source position.
    """
    children_of: dict[int, dict[int, GroupInstance]] = {}
    for parent, item_index, child in assignment.merges:
        children_of.setdefault(id(parent), {})[item_index] = child

    trees = []
    claimed: set[int] = set()
    for inst in assignment.instances:
        tree = combo.get(id(inst))
        if tree is None:
            continue
        positions = _tree_positions(inst, children_of)
        trees.append((min(positions), tree))
        claimed |= positions

    starts = {start: tree for start, tree in trees}
    out: list[LinearItem] = []
    for pos, token in enumerate(sentence.tokens):
        if pos in starts:
            _linearize_tree(starts[pos], out)
        elif pos in claimed or token.deleted:
            continue
        else:
            out.append(LinearItem(token=token))
    if not out and sentence.tokens:
        # Nothing survived (e.g. punctuation-only input): pass the raw
        # tokens through so non-empty input never realizes to nothing.
        out = [LinearItem(token=token) for token in sentence.tokens]
    return out


def _linearize_tree(tgi: TargetGroupInstance, out: list[LinearItem]) -> None:
    for index, item in enumerate(tgi.translation.items, 1):
        expansion = tgi.expansion_for(index)
        if expansion is not None:
            _linearize_tree(expansion, out)
        else:
            out.append(LinearItem(item=item, features=tgi.item_features[index - 1]))


def realize(items: list[LinearItem], table: FormTable) -> list[list[Segment]]:
    """Expand a linearized item list into concrete output sentences.

    Surface items and untranslated tokens pass through; lexeme items are
    generated from the table, fanning out over every compatible form in
    table order. A generation gap renders the lexeme in white brackets.
    """
    alternatives: list[list[Segment]] = []
    for linear in items:
        if linear.token is not None:
            alternatives.append([Segment(linear.token.surface, untranslated=True)])
            continue
        item = linear.item
        assert item is not None
        if item.is_lexeme:
            forms = generate(item.text, linear.features, table)
            if forms:
                alternatives.append([Segment(form) for form in forms])
            else:
                alternatives.append([Segment(f"{GAP_OPEN}{item.text}{GAP_CLOSE}")])
        elif item.is_category:
            alternatives.append([Segment(f"{GAP_OPEN}{item.text}{GAP_CLOSE}")])
        else:
            alternatives.append([Segment(item.text)])
    return [list(combo) for combo in itertools.product(*alternatives)]


def translate(
    text: str,
    lexicon: Lexicon,
    source_lang: Optional[str] = None,
    target_lang: Optional[str] = None,
    max_outputs: Optional[int] = None,
    trace: bool = False,
    max_gap: int = 0,
) -> TranslationResult:
    """Run the full pipeline on one sentence.

    tokenize -> analyze -> apply_transforms -> find_candidates -> solve
    -> transfer -> linearize -> realize. All co-optimal assignments
    contribute outputs, capped at ``max_outputs`` across the whole
    result.
    """
    source = source_lang or lexicon.source_lang
    if source != lexicon.source_lang:
        raise ValueError(f"lexicon is for source language {lexicon.source_lang!r}, not {source!r}")
    target = target_lang or (lexicon.target_langs[0] if lexicon.target_langs else "")

    result = TranslationResult(source=text, sentence=None)
    sentence = analyze_sentence(text, lexicon.source_forms())
    if not sentence.tokens:
        return result

    transformed = apply_transforms(sentence, lexicon.rules, lexicon.cats)
    result.sentence = transformed
    candidates = find_candidates(transformed, lexicon, max_gap=max_gap)
    assignments = solve(candidates, transformed)
    if trace:
        result.trace.append(f"tokens: {sentence.dump()}")
        result.trace.append(f"transformed: {transformed.dump()}")
        result.trace.append("candidates:")
        result.trace.extend(f"  {c.dump()}" for c in candidates)

    table = lexicon.target_forms(target)
    remaining = max_outputs if max_outputs is not None else float("inf")
    for assignment in assignments:
        if remaining <= 0:
            break
        block = AssignmentOutputs(assignment, [])
        if trace:
            result.trace.append("assignment:")
            result.trace.extend(f"  {line}" for line in assignment.dump())
        for combo in transfer(assignment, lexicon, target):
            if remaining <= 0:
                break
            linear = linearize(combo, assignment, transformed)
            for sentence_out in realize(linear, table):
                if remaining <= 0:
                    break
                block.sentences.append(sentence_out)
                remaining -= 1
        result.per_assignment.append(block)
    return result
