"""Shallow-transfer translation over headed multi-word groups.

The engine pairs a bilingual group lexicon with table-driven morphology:
sentences are tokenized, analyzed, and rewritten by morphosyntactic
transformation rules; groups are matched and selected by constraint
satisfaction with node merging; the chosen groups transfer to the target
language under cross-language agreement constraints and are realized as
surface text, preserving ambiguity as multiple outputs.
"""

from .demo import demo_lexicon_dir
from .features import EMPTY, FeatureMap, parse_features, unify
from .lexicon import (
    AgreementConstraint,
    CategoryDict,
    GroupEntry,
    GroupItem,
    Lexicon,
    LexiconError,
    LexiconParseError,
    LexiconValidationError,
    TransformRule,
    Translation,
    lint_lexicon,
    parse_lexicon,
    save_lexicon,
    serialize_entry,
    validate_entry,
)
from .morpho import Analysis, FormTable, analyze, generate
from .pipeline import (
    AnalyzedSentence,
    AnalyzedToken,
    analyze_sentence,
    apply_transforms,
    parse_pre_analyzed,
    tokenize,
)
from .service import AcceptanceLog, AcceptanceRecord, create_server, record_acceptance
from .solver import Assignment, GroupInstance, find_candidates, score, solve, verify_assignment
from .xfer import (
    Segment,
    TargetGroupInstance,
    TranslationResult,
    linearize,
    realize,
    transfer,
    translate,
)

__version__ = "0.1.0"

__all__ = [
    "AcceptanceLog",
    "AcceptanceRecord",
    "AgreementConstraint",
    "Analysis",
    "AnalyzedSentence",
    "AnalyzedToken",
    "Assignment",
    "CategoryDict",
    "EMPTY",
    "FeatureMap",
    "FormTable",
    "GroupEntry",
    "GroupInstance",
    "GroupItem",
    "Lexicon",
    "LexiconError",
    "LexiconParseError",
    "LexiconValidationError",
    "Segment",
    "TargetGroupInstance",
    "TransformRule",
    "Translation",
    "TranslationResult",
    "analyze",
    "analyze_sentence",
    "apply_transforms",
    "create_server",
    "demo_lexicon_dir",
    "find_candidates",
    "generate",
    "linearize",
    "lint_lexicon",
    "parse_features",
    "parse_lexicon",
    "parse_pre_analyzed",
    "realize",
    "record_acceptance",
    "save_lexicon",
    "score",
    "serialize_entry",
    "solve",
    "tokenize",
    "transfer",
    "translate",
    "unify",
    "validate_entry",
    "verify_assignment",
]
