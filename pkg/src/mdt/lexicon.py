"""Bilingual group lexicon: entries, transformation rules, form tables, categories.

A lexicon directory holds one subdirectory per language. The source
language directory (the one with ``groups.mdt``) contains:

    groups.mdt      group entries with translations, alignments, agreements
    transforms.mdt  morphosyntactic transformation rules
    forms.tsv       wordform<TAB>lexeme<TAB>pos<TAB>features   (analysis)
    cats.tsv        lexeme_or_wordform<TAB>$cat

Target language directories contain:

    forms.tsv       lexeme<TAB>features<TAB>wordform           (generation)

All files are UTF-8 and line oriented; ``#`` starts a comment at the
beginning of a line or after whitespace. Feature lists use ``f=v,+g``
notation. In a group line the head item is bracketed (``[way]``) and an
item may carry a constraint block (``$sbd[+acc]``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .features import EMPTY, FeatureMap, FeatureSyntaxError
from .morpho import FormTable, lexeme_pos

WORD = "word"
LEXEME = "lexeme"
CATEGORY = "cat"

#: POS categories match a token's POS tag; any other $symbol goes through
#: the category dictionary.
BUILTIN_CATEGORIES = ("$v", "$n", "$adj", "$adv", "$pron")

_POS_SUFFIXES = ("v", "n", "adj", "adv", "pron")

_ITEM_RE = re.compile(r"(?P<text>[^\s\[\]]+)(?:\[(?P<feats>[^\[\]]*)\])?")
_HEAD_ITEM_RE = re.compile(r"\[(?P<text>[^\s\[\]]+)\](?:\[(?P<feats>[^\[\]]*)\])?")
_AGR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:\s*\(([^()]*)\)")
_ACTION_RE = re.compile(r"(\d+)\[([^\[\]]*)\]")


class LexiconError(Exception):
    """Base error for lexicon loading."""


class LexiconParseError(LexiconError):
    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = f"{path}:{line}: " if path else ""
        super().__init__(f"{where}{message}")


class LexiconValidationError(LexiconError):
    def __init__(self, diagnostics: list[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("invalid lexicon:\n" + "\n".join(self.diagnostics))


@dataclass(frozen=True)
class GroupItem:
    """One position of a group: a surface word, a lexeme, or a category.

    Constraints are match-time restrictions on the source side and
    imposed features on the target side.
    """

    kind: str
    text: str
    constraints: FeatureMap = EMPTY

    @classmethod
    def word(cls, text: str, constraints: FeatureMap = EMPTY) -> "GroupItem":
        return cls(WORD, text, constraints)

    @classmethod
    def lexeme(cls, text: str, constraints: FeatureMap = EMPTY) -> "GroupItem":
        return cls(LEXEME, text, constraints)

    @classmethod
    def category(cls, symbol: str, constraints: FeatureMap = EMPTY) -> "GroupItem":
        return cls(CATEGORY, symbol, constraints)

    @property
    def is_category(self) -> bool:
        return self.kind == CATEGORY

    @property
    def is_lexeme(self) -> bool:
        return self.kind == LEXEME

    @property
    def pos(self) -> str:
        return lexeme_pos(self.text) if self.kind == LEXEME else ""


@dataclass(frozen=True)
class AgreementConstraint:
    """Copies features from source item ``source_pos`` to target item
    ``target_pos`` during transfer. Positions are 1-based; ``mappings``
    pairs a source feature name with the target name it lands on."""

    source_pos: int
    target_pos: int
    mappings: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class Translation:
    """One target-language rendering of a group.

    ``alignment`` has one integer per source item: 0 for unaligned,
    otherwise the 1-based index of the corresponding target item.
    ``head_index`` marks a bracketed target item and is kept only so the
    entry serializes back the way it was written.
    """

    target_lang: str
    items: tuple[GroupItem, ...]
    alignment: tuple[int, ...]
    agreements: tuple[AgreementConstraint, ...] = ()
    head_index: Optional[int] = None


@dataclass(frozen=True)
class GroupEntry:
    """A headed multi-item source pattern with its translations."""

    items: tuple[GroupItem, ...]
    head_index: int
    translations: tuple[Translation, ...]

    @property
    def head_item(self) -> GroupItem:
        return self.items[self.head_index - 1]

    @property
    def head_key(self) -> str:
        return self.head_item.text


@dataclass(frozen=True)
class TransformRule:
    """Source-side rewrite: a pattern plus feature assignments and deletions.

    ``actions`` maps 1-based pattern positions to feature maps that are
    unified into the matched analysis; ``deletions`` flags positions as
    deleted without removing the tokens.
    """

    pattern: tuple[GroupItem, ...]
    actions: tuple[tuple[int, FeatureMap], ...]
    deletions: tuple[int, ...]


class CategoryDict:
    """Category symbols per lexeme or wordform (e.g. mayor_n -> {$sbd})."""

    def __init__(self, entries: Iterable[tuple[str, str]] = ()):
        self._by_key: dict[str, tuple[str, ...]] = {}
        self._pairs: list[tuple[str, str]] = []
        for key, symbol in entries:
            self.add(key, symbol)

    def add(self, key: str, symbol: str) -> None:
        have = self._by_key.get(key, ())
        if symbol not in have:
            self._by_key[key] = have + (symbol,)
            self._pairs.append((key, symbol))

    def symbols_for(self, key: str) -> tuple[str, ...]:
        return self._by_key.get(key, ())

    def all_symbols(self) -> set[str]:
        return {symbol for _, symbol in self._pairs}

    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(self._pairs)

    def __contains__(self, key: str) -> bool:
        return key in self._by_key

    def __len__(self) -> int:
        return len(self._pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CategoryDict) and self._pairs == other._pairs


@dataclass
class Lexicon:
    """Validated, immutable bundle of everything loaded from a lexicon dir.

    Safe for unrestricted concurrent reads once constructed.
    """

    source_lang: str
    target_langs: tuple[str, ...]
    entries: tuple[GroupEntry, ...]
    rules: tuple[TransformRule, ...]
    forms: dict[str, FormTable]
    cats: CategoryDict
    head_index: dict[str, tuple[tuple[int, GroupEntry], ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.head_index:
            index: dict[str, list[tuple[int, GroupEntry]]] = {}
            for i, entry in enumerate(self.entries):
                index.setdefault(entry.head_key, []).append((i, entry))
            self.head_index = {k: tuple(v) for k, v in index.items()}

    def entries_for_head(self, key: str) -> tuple[tuple[int, GroupEntry], ...]:
        return self.head_index.get(key, ())

    def source_forms(self) -> FormTable:
        return self.forms[self.source_lang]

    def target_forms(self, lang: str) -> FormTable:
        return self.forms.get(lang, FormTable(kind="generation"))


# ---------------------------------------------------------------------------
# Parsing


def _strip_comment(line: str) -> str:
    if line.lstrip().startswith("#"):
        return ""
    for i, ch in enumerate(line):
        if ch == "#" and i > 0 and line[i - 1].isspace():
            return line[:i]
    return line


def _classify(text: str) -> str:
    if text.startswith("$"):
        return CATEGORY
    stem, sep, suffix = text.rpartition("_")
    if sep and stem and suffix in _POS_SUFFIXES:
        return LEXEME
    return WORD


def _parse_item_token(token: str, path: str, lineno: int) -> tuple[GroupItem, bool]:
    is_head = token.startswith("[")
    m = (_HEAD_ITEM_RE if is_head else _ITEM_RE).fullmatch(token)
    if not m:
        raise LexiconParseError(f"cannot parse item {token!r}", path, lineno)
    text = m.group("text")
    feats = m.group("feats")
    try:
        constraints = FeatureMap.parse(feats) if feats is not None else EMPTY
    except FeatureSyntaxError as exc:
        raise LexiconParseError(str(exc), path, lineno) from exc
    kind = _classify(text)
    if kind == CATEGORY and len(text) < 2:
        raise LexiconParseError(f"bad category symbol {text!r}", path, lineno)
    return GroupItem(kind, text, constraints), is_head


def _parse_items(text: str, path: str, lineno: int) -> tuple[tuple[GroupItem, ...], Optional[int]]:
    """Parse a whitespace-separated item list; returns items and the
    1-based index of the bracketed head, if any."""
    items: list[GroupItem] = []
    head: Optional[int] = None
    for token in text.split():
        item, is_head = _parse_item_token(token, path, lineno)
        items.append(item)
        if is_head:
            if head is not None:
                raise LexiconParseError("more than one head marker", path, lineno)
            head = len(items)
    if not items:
        raise LexiconParseError("empty item list", path, lineno)
    return tuple(items), head


def _parse_alignment(text: str, path: str, lineno: int) -> tuple[int, ...]:
    try:
        return tuple(int(chunk.strip()) for chunk in text.split(","))
    except ValueError as exc:
        raise LexiconParseError(f"bad alignment {text!r}", path, lineno) from exc


def _parse_agreements(text: str, path: str, lineno: int) -> tuple[AgreementConstraint, ...]:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = _AGR_RE.fullmatch(chunk)
        if not m:
            raise LexiconParseError(f"cannot parse agreement {chunk!r}", path, lineno)
        mappings = []
        for pair in m.group(3).split(","):
            pair = pair.strip()
            if not pair:
                continue
            if ":" not in pair:
                raise LexiconParseError(f"bad feature mapping {pair!r}", path, lineno)
            src, _, tgt = pair.partition(":")
            mappings.append((src.strip(), tgt.strip()))
        out.append(AgreementConstraint(int(m.group(1)), int(m.group(2)), tuple(mappings)))
    return tuple(out)


def parse_groups(text: str, path: str = "<groups>") -> tuple[GroupEntry, ...]:
    """Parse a groups.mdt file into entries, preserving file order."""

    entries: list[GroupEntry] = []
    # Per-entry accumulators; a translation is only complete once its
    # align line has been seen.
    src_items: Optional[tuple[GroupItem, ...]] = None
    src_head: Optional[int] = None
    src_line = 0
    translations: list[Translation] = []
    pending: Optional[dict] = None

    def close_translation(lineno: int) -> None:
        nonlocal pending
        if pending is None:
            return
        if pending["alignment"] is None:
            raise LexiconParseError("translation has no align line", path, pending["line"])
        translations.append(
            Translation(
                target_lang=pending["lang"],
                items=pending["items"],
                alignment=pending["alignment"],
                agreements=pending["agreements"],
                head_index=pending["head"],
            )
        )
        pending = None

    def close_entry(lineno: int) -> None:
        nonlocal src_items, src_head
        close_translation(lineno)
        if src_items is None:
            return
        if src_head is None:
            raise LexiconParseError("group has no [head] marker", path, src_line)
        if not translations:
            raise LexiconParseError("group has no translations", path, src_line)
        entries.append(GroupEntry(src_items, src_head, tuple(translations)))
        src_items = None
        src_head = None
        translations.clear()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("group:"):
            close_entry(lineno)
            src_items, src_head = _parse_items(line[len("group:"):], path, lineno)
            src_line = lineno
        elif line.startswith("->"):
            if src_items is None:
                raise LexiconParseError("translation outside a group", path, lineno)
            close_translation(lineno)
            body = line[2:].strip()
            lang, sep, rest = body.partition(":")
            lang = lang.strip()
            if not sep or not lang:
                raise LexiconParseError("expected '-> lang: items'", path, lineno)
            items, head = _parse_items(rest, path, lineno)
            pending = {
                "lang": lang,
                "items": items,
                "head": head,
                "alignment": None,
                "agreements": (),
                "line": lineno,
            }
        elif line.startswith("align:"):
            if pending is None:
                raise LexiconParseError("align line outside a translation", path, lineno)
            pending["alignment"] = _parse_alignment(line[len("align:"):], path, lineno)
        elif line.startswith("agr:"):
            if pending is None:
                raise LexiconParseError("agr line outside a translation", path, lineno)
            pending["agreements"] = _parse_agreements(line[len("agr:"):], path, lineno)
        else:
            raise LexiconParseError(f"unrecognized line {line!r}", path, lineno)
    close_entry(len(text.splitlines()) + 1)
    return tuple(entries)


def parse_transforms(text: str, path: str = "<transforms>") -> tuple[TransformRule, ...]:
    """Parse a transforms.mdt file: ``rule: <pattern> => <actions> del <positions>``."""

    rules: list[TransformRule] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if not line.startswith("rule:"):
            raise LexiconParseError(f"unrecognized line {line!r}", path, lineno)
        body = line[len("rule:"):].strip()
        if "=>" not in body:
            raise LexiconParseError("rule has no '=>' part", path, lineno)
        lhs, _, rhs = body.partition("=>")
        pattern, head = _parse_items(lhs.strip(), path, lineno)
        if head is not None:
            raise LexiconParseError("rule patterns have no head marker", path, lineno)
        actions: list[tuple[int, FeatureMap]] = []
        deletions: tuple[int, ...] = ()
        tokens = rhs.split()
        if "del" in tokens:
            at = tokens.index("del")
            del_part = "".join(tokens[at + 1:])
            tokens = tokens[:at]
            try:
                deletions = tuple(int(c) for c in del_part.split(",") if c)
            except ValueError as exc:
                raise LexiconParseError(f"bad deletion list {del_part!r}", path, lineno) from exc
        for token in tokens:
            m = _ACTION_RE.fullmatch(token)
            if not m:
                raise LexiconParseError(f"cannot parse action {token!r}", path, lineno)
            try:
                fmap = FeatureMap.parse(m.group(2))
            except FeatureSyntaxError as exc:
                raise LexiconParseError(str(exc), path, lineno) from exc
            actions.append((int(m.group(1)), fmap))
        rules.append(TransformRule(pattern, tuple(actions), deletions))
    return tuple(rules)


def parse_forms(text: str, kind: str, path: str = "<forms>") -> FormTable:
    """Parse a forms.tsv file in the given layout ("analysis" or "generation")."""

    table = FormTable(kind=kind)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).rstrip("\n")
        if not line.strip():
            continue
        cols = line.split("\t")
        try:
            if kind == "analysis":
                if len(cols) == 3:
                    wordform, lexeme, pos = cols
                    feats = EMPTY
                elif len(cols) == 4:
                    wordform, lexeme, pos, feat_text = cols
                    feats = FeatureMap.parse(feat_text)
                else:
                    raise LexiconParseError(f"expected 3 or 4 columns, got {len(cols)}", path, lineno)
            elif kind == "generation":
                if len(cols) != 3:
                    raise LexiconParseError(f"expected 3 columns, got {len(cols)}", path, lineno)
                lexeme, feat_text, wordform = cols
                feats = FeatureMap.parse(feat_text)
                pos = lexeme_pos(lexeme)
            else:
                raise ValueError(f"unknown forms layout {kind!r}")
        except FeatureSyntaxError as exc:
            raise LexiconParseError(str(exc), path, lineno) from exc
        if not wordform.strip() or not lexeme.strip():
            raise LexiconParseError("empty wordform or lexeme", path, lineno)
        table.add_row(wordform.strip(), lexeme.strip(), pos.strip(), feats)
    return table


def parse_cats(text: str, path: str = "<cats>") -> CategoryDict:
    cats = CategoryDict()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise LexiconParseError(f"expected 2 columns, got {len(cols)}", path, lineno)
        key, symbol = cols[0].strip(), cols[1].strip()
        if not key or not symbol:
            raise LexiconParseError("empty category row", path, lineno)
        cats.add(key, symbol)
    return cats


# ---------------------------------------------------------------------------
# Validation


def validate_entry(entry: GroupEntry) -> list[str]:
    """Diagnostics for a parsed entry; empty when all invariants hold.

    Each message names the entry head and, where relevant, the
    translation index (1-based) and the violated rule.
    """
    out: list[str] = []
    head = entry.items[entry.head_index - 1].text if 0 < entry.head_index <= len(entry.items) else "?"

    def report(msg: str, tindex: Optional[int] = None) -> None:
        where = f"{head}: translation {tindex}: " if tindex is not None else f"{head}: "
        out.append(where + msg)

    n = len(entry.items)
    if n < 1:
        report("group has no items")
        return out
    if not 1 <= entry.head_index <= n:
        report(f"head index {entry.head_index} out of range 1..{n}")
        return out
    if entry.head_item.is_category:
        report("head item is a category; heads must be wordforms or lexemes")
    if not entry.translations:
        report("group has no translations")
    for tindex, tr in enumerate(entry.translations, 1):
        if len(tr.alignment) != n:
            report(f"alignment length {len(tr.alignment)} ≠ source length {n}", tindex)
            continue
        seen: set[int] = set()
        for value in tr.alignment:
            if value == 0:
                continue
            if not 1 <= value <= len(tr.items):
                report(f"alignment target {value} out of range 1..{len(tr.items)}", tindex)
            elif value in seen:
                report(f"duplicate target index {value}", tindex)
            seen.add(value)
        if tr.alignment[entry.head_index - 1] == 0:
            report("head is unaligned; the head must map to a target item", tindex)
        for i, item in enumerate(entry.items, 1):
            if not item.is_category:
                continue
            target = tr.alignment[i - 1]
            if target == 0:
                report(f"category item {i} ({item.text}) is unaligned", tindex)
            elif 1 <= target <= len(tr.items):
                mirror = tr.items[target - 1]
                if not mirror.is_category or mirror.text != item.text:
                    report(
                        f"category item {i} ({item.text}) aligns to non-matching target item {target}",
                        tindex,
                    )
        for agc in tr.agreements:
            if not 1 <= agc.source_pos <= n:
                report(f"agreement source position {agc.source_pos} out of range", tindex)
            if not 1 <= agc.target_pos <= len(tr.items):
                report(f"agreement target position {agc.target_pos} out of range", tindex)
            if not agc.mappings:
                report("agreement has no feature mappings", tindex)
    return out


def validate_rule(rule: TransformRule, index: int) -> list[str]:
    out = []
    n = len(rule.pattern)
    positions = [p for p, _ in rule.actions]
    for p in positions:
        if not 1 <= p <= n:
            out.append(f"rule {index}: action position {p} out of range 1..{n}")
    for p in rule.deletions:
        if not 1 <= p <= n:
            out.append(f"rule {index}: deletion position {p} out of range 1..{n}")
        if p in positions:
            out.append(f"rule {index}: position {p} both deleted and feature-set")
    return out


def _used_category_symbols(entries: Iterable[GroupEntry], rules: Iterable[TransformRule]) -> set[str]:
    symbols = set()
    for entry in entries:
        for item in entry.items:
            if item.is_category:
                symbols.add(item.text)
        for tr in entry.translations:
            for item in tr.items:
                if item.is_category:
                    symbols.add(item.text)
    for rule in rules:
        for item in rule.pattern:
            if item.is_category:
                symbols.add(item.text)
    return symbols


def lint_lexicon_parts(
    entries: tuple[GroupEntry, ...],
    rules: tuple[TransformRule, ...],
    forms: dict[str, FormTable],
    cats: CategoryDict,
) -> list[str]:
    """All validation diagnostics over already-parsed parts."""
    out: list[str] = []
    for entry in entries:
        out.extend(validate_entry(entry))
    for i, rule in enumerate(rules, 1):
        out.extend(validate_rule(rule, i))
    known = set(BUILTIN_CATEGORIES) | cats.all_symbols()
    for symbol in sorted(_used_category_symbols(entries, rules)):
        if symbol not in known:
            out.append(f"category symbol {symbol} is neither built in nor in cats.tsv")
    for key, symbol in cats.pairs():
        if not symbol.startswith("$"):
            out.append(f"category symbol {symbol} for {key} must start with $")
    for lang, table in forms.items():
        if table.kind != "analysis":
            continue
        for wordform, analysis in table.rows:
            implied = lexeme_pos(analysis.lexeme)
            if implied != "unk" and implied != analysis.pos:
                out.append(
                    f"{lang} forms: {wordform}: lexeme {analysis.lexeme} suffix ≠ pos {analysis.pos}"
                )
    return out


# ---------------------------------------------------------------------------
# Directory loading


def _scan_directory(directory: Union[str, Path]) -> tuple[Path, list[Path]]:
    root = Path(directory)
    if not root.is_dir():
        raise LexiconError(f"{root}: not a directory")
    lang_dirs = sorted(p for p in root.iterdir() if p.is_dir())
    source_dirs = [p for p in lang_dirs if (p / "groups.mdt").is_file()]
    if not source_dirs:
        raise LexiconError(f"{root}: missing groups file (no <lang>/groups.mdt)")
    if len(source_dirs) > 1:
        raise LexiconError(f"{root}: multiple groups files; one source language per lexicon")
    return source_dirs[0], lang_dirs


def parse_lexicon(directory: Union[str, Path]) -> Lexicon:
    """Load and validate a lexicon directory.

    Raises :class:`LexiconParseError` on the first syntax error and
    :class:`LexiconValidationError` listing every diagnostic when the
    parsed content violates an invariant.
    """
    source_dir, lang_dirs = _scan_directory(directory)
    source_lang = source_dir.name

    entries = parse_groups((source_dir / "groups.mdt").read_text("utf-8"), str(source_dir / "groups.mdt"))
    rules: tuple[TransformRule, ...] = ()
    transforms_path = source_dir / "transforms.mdt"
    if transforms_path.is_file():
        rules = parse_transforms(transforms_path.read_text("utf-8"), str(transforms_path))
    cats = CategoryDict()
    cats_path = source_dir / "cats.tsv"
    if cats_path.is_file():
        cats = parse_cats(cats_path.read_text("utf-8"), str(cats_path))

    forms: dict[str, FormTable] = {}
    for lang_dir in lang_dirs:
        forms_path = lang_dir / "forms.tsv"
        kind = "analysis" if lang_dir == source_dir else "generation"
        if forms_path.is_file():
            forms[lang_dir.name] = parse_forms(forms_path.read_text("utf-8"), kind, str(forms_path))
    forms.setdefault(source_lang, FormTable(kind="analysis"))

    diagnostics = lint_lexicon_parts(entries, rules, forms, cats)
    if diagnostics:
        raise LexiconValidationError(diagnostics)

    target_langs: list[str] = []
    for entry in entries:
        for tr in entry.translations:
            if tr.target_lang not in target_langs:
                target_langs.append(tr.target_lang)

    return Lexicon(
        source_lang=source_lang,
        target_langs=tuple(target_langs),
        entries=entries,
        rules=rules,
        forms=forms,
        cats=cats,
    )


def lint_lexicon(directory: Union[str, Path]) -> list[str]:
    """All diagnostics for a lexicon directory; parse errors become
    diagnostics instead of exceptions."""
    try:
        parse_lexicon(directory)
        return []
    except LexiconValidationError as exc:
        return exc.diagnostics
    except LexiconError as exc:
        return [str(exc)]


# ---------------------------------------------------------------------------
# Serialization (canonical form; feature lists sorted by name)


def format_item(item: GroupItem, is_head: bool = False) -> str:
    text = f"[{item.text}]" if is_head else item.text
    if item.constraints:
        text += f"[{item.constraints.format()}]"
    return text


def serialize_entry(entry: GroupEntry) -> str:
    lines = ["group: " + " ".join(format_item(it, i == entry.head_index) for i, it in enumerate(entry.items, 1))]
    for tr in entry.translations:
        items = " ".join(format_item(it, i == tr.head_index) for i, it in enumerate(tr.items, 1))
        lines.append(f"  -> {tr.target_lang}: {items}")
        lines.append("     align: " + ",".join(str(v) for v in tr.alignment))
        if tr.agreements:
            chunks = []
            for agc in tr.agreements:
                maps = ",".join(f"{f}:{g}" for f, g in agc.mappings)
                chunks.append(f"({agc.source_pos},{agc.target_pos}):({maps})")
            lines.append("     agr: " + "; ".join(chunks))
    return "\n".join(lines)


def serialize_groups(entries: Iterable[GroupEntry]) -> str:
    return "\n".join(serialize_entry(entry) for entry in entries) + "\n"


def serialize_transforms(rules: Iterable[TransformRule]) -> str:
    lines = []
    for rule in rules:
        parts = ["rule:", " ".join(format_item(it) for it in rule.pattern), "=>"]
        for pos, fmap in rule.actions:
            parts.append(f"{pos}[{fmap.format()}]")
        if rule.deletions:
            parts.append("del " + ",".join(str(p) for p in rule.deletions))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def serialize_forms(table: FormTable) -> str:
    lines = []
    for wordform, analysis in table.rows:
        if table.kind == "analysis":
            cols = [wordform, analysis.lexeme, analysis.pos]
            if analysis.features:
                cols.append(analysis.features.format())
        else:
            cols = [analysis.lexeme, analysis.features.format(), wordform]
        lines.append("\t".join(cols))
    return "\n".join(lines) + "\n"


def serialize_cats(cats: CategoryDict) -> str:
    return "\n".join(f"{key}\t{symbol}" for key, symbol in cats.pairs()) + "\n"


def save_lexicon(lexicon: Lexicon, directory: Union[str, Path]) -> None:
    """Write a lexicon back out as a directory in canonical form."""
    root = Path(directory)
    src = root / lexicon.source_lang
    src.mkdir(parents=True, exist_ok=True)
    (src / "groups.mdt").write_text(serialize_groups(lexicon.entries), "utf-8")
    if lexicon.rules:
        (src / "transforms.mdt").write_text(serialize_transforms(lexicon.rules), "utf-8")
    if len(lexicon.cats):
        (src / "cats.tsv").write_text(serialize_cats(lexicon.cats), "utf-8")
    for lang, table in lexicon.forms.items():
        lang_dir = root / lang
        lang_dir.mkdir(parents=True, exist_ok=True)
        if len(table) or lang == lexicon.source_lang:
            (lang_dir / "forms.tsv").write_text(serialize_forms(table), "utf-8")
