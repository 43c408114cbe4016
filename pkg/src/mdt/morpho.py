"""Table-driven morphological analysis and generation.

Both directions live in one :class:`FormTable`: rows loaded from an
analysis file (wordform -> lexeme, pos, features) are also indexed for
generation, and vice versa, so the analyze/generate round trip holds by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .features import EMPTY, FeatureMap

UNKNOWN_POS = "unk"


def lexeme_pos(lexeme: str) -> str:
    """POS implied by a lexeme's ``_pos`` suffix, or ``unk`` without one."""
    stem, sep, suffix = lexeme.rpartition("_")
    if sep and stem and suffix.isalpha() and suffix.islower():
        return suffix
    return UNKNOWN_POS


@dataclass(frozen=True)
class Analysis:
    """One morphological reading of a surface wordform."""

    lexeme: str
    pos: str
    features: FeatureMap = EMPTY


@dataclass
class FormTable:
    """Full-form lexicon for one language.

    ``kind`` records which file layout the table was loaded from
    ("analysis" or "generation") and is only used when serializing.
    Row order is preserved; generation results come back in table order.
    """

    kind: str = "analysis"
    rows: list[tuple[str, Analysis]] = field(default_factory=list)
    _by_form: dict[str, list[Analysis]] = field(default_factory=dict, repr=False)
    _by_lexeme: dict[str, list[tuple[FeatureMap, str]]] = field(default_factory=dict, repr=False)

    def add_row(self, wordform: str, lexeme: str, pos: str, features: FeatureMap) -> None:
        analysis = Analysis(lexeme, pos, features)
        self.rows.append((wordform, analysis))
        self._by_form.setdefault(wordform, []).append(analysis)
        self._by_lexeme.setdefault(lexeme, []).append((features, wordform))

    def analyses(self, wordform: str) -> tuple[Analysis, ...]:
        return tuple(self._by_form.get(wordform, ()))

    def generation_rows(self, lexeme: str) -> tuple[tuple[FeatureMap, str], ...]:
        return tuple(self._by_lexeme.get(lexeme, ()))

    def lexemes(self) -> tuple[str, ...]:
        return tuple(self._by_lexeme)

    def __len__(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormTable) and self.kind == other.kind and self.rows == other.rows


def analyze(wordform: str, table: FormTable) -> tuple[Analysis, ...]:
    """All analyses of a wordform, in table order.

    A form absent from the table falls back to a single unknown-word
    analysis, so the result is never empty.
    """
    found = table.analyses(wordform)
    if found:
        return found
    return (Analysis(wordform, UNKNOWN_POS, EMPTY),)


def generate(lexeme: str, features: FeatureMap, table: FormTable) -> tuple[str, ...]:
    """Surface forms of ``lexeme`` whose table features unify with ``features``.

    Matching is unification, not equality, so an under-specified query
    fans out to every compatible form. An empty result is a generation
    gap; the caller decides the fallback.
    """
    out: list[str] = []
    for row_features, wordform in table.generation_rows(lexeme):
        if row_features.unify(features) is not None and wordform not in out:
            out.append(wordform)
    return tuple(out)
