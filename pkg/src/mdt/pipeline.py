"""Sentence preprocessing: tokenize, analyze, apply transformation rules.

Tokens are never physically removed. Transformation rules and the
punctuation filter only set a ``deleted`` flag, so positions stay stable
for the later matching and transfer stages.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .features import EMPTY, FeatureMap
from .lexicon import BUILTIN_CATEGORIES, CategoryDict, GroupItem, Lexicon, TransformRule
from .morpho import Analysis, FormTable, analyze

#: Characters detached from word edges as standalone punctuation tokens.
#: The apostrophe stays attached; contractions are handled separately.
PUNCT_CHARS = ".,!?;:()\"“”‘’«»[]{}…"

#: Clitic suffixes split off as their own tokens, longest first.
CLITICS = ("n't", "'re", "'ve", "'ll", "'m", "'s", "'d")


def tokenize(text: str) -> list[str]:
    """Whitespace split with punctuation detached and clitics separated.

    Case is preserved here; the analysis step lowercases for lookup.
    """
    out: list[str] = []
    for raw in text.split():
        lead: list[str] = []
        while raw and raw[0] in PUNCT_CHARS:
            lead.append(raw[0])
            raw = raw[1:]
        trail: list[str] = []
        while raw and raw[-1] in PUNCT_CHARS:
            trail.append(raw[-1])
            raw = raw[:-1]
        out.extend(lead)
        if raw:
            lowered = raw.lower()
            for clitic in CLITICS:
                if lowered.endswith(clitic) and len(raw) > len(clitic):
                    cut = len(raw) - len(clitic)
                    out.append(raw[:cut])
                    out.append(raw[cut:])
                    break
            else:
                out.append(raw)
        out.extend(reversed(trail))
    return out


def is_punctuation(token: str) -> bool:
    return bool(token) and not any(ch.isalnum() for ch in token)


@dataclass
class AnalyzedToken:
    surface: str
    lookup: str
    analyses: tuple[Analysis, ...]
    deleted: bool = False
    origin_index: int = 0


@dataclass
class AnalyzedSentence:
    tokens: list[AnalyzedToken]

    def visible(self) -> list[int]:
        """Positions of non-deleted tokens, in order."""
        return [i for i, tok in enumerate(self.tokens) if not tok.deleted]

    def copy(self) -> "AnalyzedSentence":
        return AnalyzedSentence([replace(tok) for tok in self.tokens])

    def dump(self) -> str:
        """One-line step dump, deleted tokens bracketed out."""
        parts = []
        for tok in self.tokens:
            best = tok.analyses[0]
            text = best.lexeme if best.pos != "unk" else tok.lookup
            if best.features:
                text += f"[{best.features.format()}]"
            parts.append(f"({text})" if tok.deleted else text)
        return " ".join(parts)


def analyze_sentence(text: str, table: FormTable) -> AnalyzedSentence:
    """Steps 1 and 2: tokenize and attach every morphological analysis.

    Pure punctuation tokens are flagged deleted up front; like tokens
    deleted by transformation rules they stay in place but take no part
    in matching or output.
    """
    tokens = []
    for i, surface in enumerate(tokenize(text)):
        lookup = surface.lower()
        tokens.append(
            AnalyzedToken(
                surface=surface,
                lookup=lookup,
                analyses=analyze(lookup, table),
                deleted=is_punctuation(surface),
                origin_index=i,
            )
        )
    return AnalyzedSentence(tokens)


def parse_pre_analyzed(text: str) -> AnalyzedSentence:
    """Pre-analyzed input, one token per line:

        surface<TAB>lexeme<TAB>pos<TAB>features

    Bypasses tokenize/analyze; the features column may be empty.
    """
    tokens = []
    for i, raw in enumerate(line for line in text.splitlines() if line.strip()):
        cols = raw.rstrip("\n").split("\t")
        if len(cols) < 3:
            raise ValueError(f"pre-analyzed line needs 3 or 4 columns: {raw!r}")
        surface, lexeme, pos = cols[0], cols[1], cols[2]
        feats = FeatureMap.parse(cols[3]) if len(cols) > 3 and cols[3].strip() else EMPTY
        tokens.append(
            AnalyzedToken(
                surface=surface,
                lookup=surface.lower(),
                analyses=(Analysis(lexeme, pos, feats),),
                deleted=is_punctuation(surface),
                origin_index=i,
            )
        )
    return AnalyzedSentence(tokens)


def match_item(item: GroupItem, token: AnalyzedToken, cats: CategoryDict) -> Optional[Analysis]:
    """The first analysis of ``token`` that satisfies ``item``, or None.

    Wordform items compare against the lowercased lookup form; lexeme
    items against analysis lexemes; POS categories ($v, $n, ...) against
    analysis POS tags; other categories against the category dictionary
    keyed by lexeme or wordform. Item constraints must unify with the
    analysis features.
    """
    if item.kind == "word":
        if item.text.lower() != token.lookup:
            return None
        for analysis in token.analyses:
            if item.constraints.unify(analysis.features) is not None:
                return analysis
        return None
    if item.kind == "lexeme":
        for analysis in token.analyses:
            if analysis.lexeme == item.text and item.constraints.unify(analysis.features) is not None:
                return analysis
        return None
    symbol = item.text
    if symbol in BUILTIN_CATEGORIES:
        pos = symbol[1:]
        for analysis in token.analyses:
            if analysis.pos == pos and item.constraints.unify(analysis.features) is not None:
                return analysis
        return None
    for analysis in token.analyses:
        member = symbol in cats.symbols_for(analysis.lexeme) or symbol in cats.symbols_for(token.lookup)
        if member and item.constraints.unify(analysis.features) is not None:
            return analysis
    return None


def _match_rule_at(
    rule: TransformRule,
    sentence: AnalyzedSentence,
    visible: list[int],
    start: int,
    cats: CategoryDict,
) -> Optional[list[tuple[int, Analysis]]]:
    """Match ``rule.pattern`` against consecutive visible tokens from
    ``start`` (an index into ``visible``); returns (position, analysis)
    pairs or None."""
    if start + len(rule.pattern) > len(visible):
        return None
    matched = []
    for offset, item in enumerate(rule.pattern):
        pos = visible[start + offset]
        analysis = match_item(item, sentence.tokens[pos], cats)
        if analysis is None:
            return None
        matched.append((pos, analysis))
    return matched


def apply_transforms(
    sentence: AnalyzedSentence,
    rules: tuple[TransformRule, ...],
    cats: Optional[CategoryDict] = None,
) -> AnalyzedSentence:
    """Step 3: one left-to-right pass of the transformation rules.

    At each position the rules are tried in file order; the first whose
    pattern matches consecutive non-deleted tokens is applied. Its
    action maps are unified into the matched analyses (which become the
    tokens' sole analyses) and its deletion positions are flagged. The
    scan resumes after the matched pattern, so applications never
    overlap. A rule whose action unification fails simply does not
    apply, and later rules still get a chance at the same position.
    """
    cats = cats or CategoryDict()
    out = sentence.copy()
    visible = out.visible()
    vi = 0
    while vi < len(visible):
        advanced = False
        for rule in rules:
            matched = _match_rule_at(rule, out, visible, vi, cats)
            if matched is None:
                continue
            updates = {}
            failed = False
            for position, fmap in rule.actions:
                pos, analysis = matched[position - 1]
                base = updates.get(pos, analysis)
                unified = base.features.unify(fmap)
                if unified is None:
                    failed = True
                    break
                updates[pos] = Analysis(base.lexeme, base.pos, unified)
            if failed:
                continue
            for pos, analysis in updates.items():
                out.tokens[pos].analyses = (analysis,)
            for position in rule.deletions:
                out.tokens[matched[position - 1][0]].deleted = True
            vi += len(rule.pattern)
            advanced = True
            break
        if not advanced:
            vi += 1
    return out
