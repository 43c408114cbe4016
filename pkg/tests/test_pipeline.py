import pytest

from mdt import analyze_sentence, apply_transforms, parse_features, parse_pre_analyzed, tokenize

# Contraction fixtures: every clitic the tokenizer knows how to detach.
CONTRACTIONS = [
    ("don't", ["do", "n't"]),
    ("doesn't", ["does", "n't"]),
    ("isn't", ["is", "n't"]),
    ("won't", ["wo", "n't"]),
    ("can't", ["ca", "n't"]),
    ("we're", ["we", "'re"]),
    ("I've", ["I", "'ve"]),
    ("they'll", ["they", "'ll"]),
    ("I'm", ["I", "'m"]),
    ("she's", ["she", "'s"]),
    ("he'd", ["he", "'d"]),
]


def test_tokenize_detaches_punctuation():
    tokens = tokenize("She made fun of the mayor.")
    assert [t.lower() for t in tokens] == ["she", "made", "fun", "of", "the", "mayor", "."]
    assert tokens[0] == "She"


def test_tokenize_empty():
    assert tokenize("") == []
    assert tokenize("   ") == []


@pytest.mark.parametrize("text,expected", CONTRACTIONS)
def test_tokenize_contractions(text, expected):
    assert tokenize(text) == expected
    assert tokenize(f"{text} stop") == expected + ["stop"]


def test_tokenize_leading_and_nested_punct():
    assert tokenize('"Stop!"') == ['"', "Stop", "!", '"']
    assert tokenize("(one way)") == ["(", "one", "way", ")"]


def test_analyze_sentence_marks_punct_deleted(demo):
    s = analyze_sentence("She made fun of the mayor.", demo.source_forms())
    assert [t.surface for t in s.tokens] == ["She", "made", "fun", "of", "the", "mayor", "."]
    assert [t.deleted for t in s.tokens] == [False] * 6 + [True]
    assert [t.origin_index for t in s.tokens] == list(range(7))
    assert s.tokens[1].analyses[0].lexeme == "make_v"


def test_apply_transforms_fig_example(demo):
    s = analyze_sentence("She made fun of the mayor.", demo.source_forms())
    t = apply_transforms(s, demo.rules, demo.cats)
    made = t.tokens[1].analyses
    assert len(made) == 1
    assert made[0].features == parse_features("tns=pst,tam=prf,sb=3psf")
    assert t.tokens[0].deleted and t.tokens[4].deleted
    mayor = t.tokens[5].analyses[0]
    assert mayor.features == parse_features("+def")
    assert [tok.deleted for tok in t.tokens] == [True, False, False, False, True, False, True]


def test_apply_transforms_negation_rule(demo):
    s = analyze_sentence("they do not know her", demo.source_forms())
    t = apply_transforms(s, demo.rules, demo.cats)
    assert [tok.deleted for tok in t.tokens] == [True, True, True, False, False]
    know = t.tokens[3].analyses
    assert len(know) == 1
    assert know[0].features == parse_features("sb=3p,tam=impf,+neg")


def test_apply_transforms_noop(demo):
    s = analyze_sentence("one way or the other", demo.source_forms())
    t = apply_transforms(s, demo.rules, demo.cats)
    assert [tok.deleted for tok in t.tokens] == [False] * 5
    assert [tok.analyses for tok in t.tokens] == [tok.analyses for tok in s.tokens]


def test_transforms_preserve_token_count(demo):
    for text in ["She made fun of the mayor.", "they do not know her", "one way or the other"]:
        s = analyze_sentence(text, demo.source_forms())
        t = apply_transforms(s, demo.rules, demo.cats)
        assert len(t.tokens) == len(s.tokens)
        assert [tok.surface for tok in t.tokens] == [tok.surface for tok in s.tokens]


def test_transforms_deletion_count_matches_rules(demo):
    s = analyze_sentence("they do not know her", demo.source_forms())
    t = apply_transforms(s, demo.rules, demo.cats)
    # One applied rule with three deletions.
    assert len(s.visible()) - len(t.visible()) == 3


def test_transforms_idempotent_on_demo_rules(demo):
    for text in [
        "She made fun of the mayor.",
        "they do not know her",
        "one way or the other",
        "the mayor made fun of her",
    ]:
        s = analyze_sentence(text, demo.source_forms())
        once = apply_transforms(s, demo.rules, demo.cats)
        twice = apply_transforms(once, demo.rules, demo.cats)
        assert [tok.deleted for tok in twice.tokens] == [tok.deleted for tok in once.tokens]
        assert [tok.analyses for tok in twice.tokens] == [tok.analyses for tok in once.tokens]


def test_transforms_pure(demo):
    s = analyze_sentence("She made fun of the mayor.", demo.source_forms())
    before = [(tok.deleted, tok.analyses) for tok in s.tokens]
    apply_transforms(s, demo.rules, demo.cats)
    assert [(tok.deleted, tok.analyses) for tok in s.tokens] == before


def test_failed_action_unification_skips_rule(demo, lexicon_builder):
    lex = lexicon_builder(
        "group: [way]\n  -> am: hona\n     align: 1\n",
        transforms="rule: the $n => 2[def=never] del 1\n",
        src_forms="mayor\tmayor_n\tn\t+def\n",
    )
    s = analyze_sentence("the mayor", lex.source_forms())
    # mayor already carries +def; def=never conflicts, so nothing happens.
    t = apply_transforms(s, lex.rules, lex.cats)
    assert not t.tokens[0].deleted
    assert t.tokens[1].analyses[0].features == parse_features("+def")


def test_rules_match_across_deleted_tokens(demo):
    # Punctuation between pattern tokens is invisible to matching.
    s = analyze_sentence('she "made" fun', demo.source_forms())
    t = apply_transforms(s, demo.rules, demo.cats)
    made = [tok for tok in t.tokens if tok.lookup == "made"][0]
    assert made.analyses[0].features == parse_features("tns=pst,tam=prf,sb=3psf")


def test_pre_analyzed_input():
    s = parse_pre_analyzed("She\tshe\tpron\nmade\tmake_v\tv\ttns=pst\n")
    assert len(s.tokens) == 2
    assert s.tokens[0].analyses[0].pos == "pron"
    assert s.tokens[1].analyses[0].features == parse_features("tns=pst")
    with pytest.raises(ValueError):
        parse_pre_analyzed("only-two\tcols\n")
