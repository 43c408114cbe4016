import pytest

from mdt import (
    GroupEntry,
    GroupItem,
    LexiconError,
    LexiconValidationError,
    Translation,
    parse_features,
    parse_lexicon,
    save_lexicon,
    serialize_entry,
    validate_entry,
)
from mdt.lexicon import (
    LexiconParseError,
    parse_groups,
    parse_transforms,
    serialize_forms,
    serialize_groups,
    serialize_transforms,
)

ENTRY1 = """\
group: one [way] or the other
  -> am: bazihm hona baziyA
     align: 0,1,2,0,3
"""


def test_demo_lexicon_loads(demo):
    entries = [entry for _, entry in demo.entries_for_head("way")]
    assert len(entries) == 1
    assert entries[0].translations[0].alignment == (0, 1, 2, 0, 3)
    assert demo.source_lang == "en"
    assert demo.target_langs == ("am",)


def test_missing_groups_file(tmp_path):
    (tmp_path / "empty").mkdir()
    with pytest.raises(LexiconError, match="missing groups file"):
        parse_lexicon(tmp_path / "empty")


def test_minimal_entry_round_trip(lexicon_builder, tmp_path):
    lex = lexicon_builder("group: [mayor_n]\n  -> am: kantibA_n\n     align: 1\n")
    assert len(lex.entries) == 1
    entry = lex.entries[0]
    assert entry.head_index == 1
    assert entry.head_key == "mayor_n"
    out_dir = tmp_path / "out"
    save_lexicon(lex, out_dir)
    again = parse_lexicon(out_dir)
    assert again.entries == lex.entries


def test_parse_entry_structure():
    entries = parse_groups(ENTRY1)
    assert len(entries) == 1
    entry = entries[0]
    assert [item.text for item in entry.items] == ["one", "way", "or", "the", "other"]
    assert entry.head_index == 2
    assert entry.translations[0].target_lang == "am"
    assert [item.kind for item in entry.translations[0].items] == ["word"] * 3


def test_parse_item_kinds():
    entries = parse_groups(
        "group: [make_v] fun of $sbd\n"
        "  -> am: $sbd[+acc] ['a^sofa_v]\n"
        "     align: 2,0,0,1\n"
        "     agr: (1,2):(tam:tam,sb:sb); (4,1):(num:num)\n"
    )
    entry = entries[0]
    assert entry.items[0].kind == "lexeme" and entry.items[0].pos == "v"
    assert entry.items[1].kind == "word"
    assert entry.items[3].kind == "cat" and entry.items[3].text == "$sbd"
    tr = entry.translations[0]
    assert tr.items[0].constraints == parse_features("+acc")
    assert tr.head_index == 2
    assert tr.agreements[0].source_pos == 1 and tr.agreements[0].target_pos == 2
    assert tr.agreements[0].mappings == (("tam", "tam"), ("sb", "sb"))
    assert tr.agreements[1].mappings == (("num", "num"),)


def test_parse_errors_carry_location():
    with pytest.raises(LexiconParseError) as exc:
        parse_groups("group: one [way] or\n  -> am bazihm\n", path="g.mdt")
    assert "g.mdt:2" in str(exc.value)


def test_head_marker_required():
    with pytest.raises(LexiconParseError, match="head"):
        parse_groups("group: one way\n  -> am: hona\n     align: 0,1\n")


def test_negative_flag_rejected_at_parse():
    with pytest.raises(LexiconParseError, match="negative"):
        parse_groups("group: [way][-def]\n  -> am: hona\n     align: 1\n")


def test_validate_entry_clean(demo):
    for entry in demo.entries:
        assert validate_entry(entry) == []


def _entry(items, head_index, translations):
    return GroupEntry(tuple(items), head_index, tuple(translations))


def test_validate_alignment_length():
    entry = _entry(
        [GroupItem.lexeme("make_v"), GroupItem.word("fun"), GroupItem.word("of"), GroupItem.category("$sbd")],
        1,
        [Translation("am", (GroupItem.word("x"),), (0, 1, 2, 0, 3))],
    )
    diags = validate_entry(entry)
    assert any("alignment length 5 ≠ source length 4" in d for d in diags)


def test_validate_duplicate_target():
    entry = _entry(
        [GroupItem.lexeme("lose_v"), GroupItem.word("hope")],
        1,
        [Translation("am", (GroupItem.word("tasfA"), GroupItem.lexeme("qora.ta_v")), (1, 1))],
    )
    diags = validate_entry(entry)
    assert any("duplicate target index 1" in d for d in diags)


def test_validate_unaligned_head():
    entry = _entry(
        [GroupItem.lexeme("lose_v"), GroupItem.word("hope")],
        1,
        [Translation("am", (GroupItem.word("tasfA"),), (0, 1))],
    )
    assert any("head" in d for d in validate_entry(entry))


def test_validate_category_head_rejected():
    entry = _entry(
        [GroupItem.category("$sbd")],
        1,
        [Translation("am", (GroupItem.category("$sbd"),), (1,))],
    )
    assert any("category" in d for d in validate_entry(entry))


def test_validate_category_alignment_mirror():
    entry = _entry(
        [GroupItem.lexeme("make_v"), GroupItem.category("$sbd")],
        1,
        [Translation("am", (GroupItem.word("x"), GroupItem.word("y")), (1, 2))],
    )
    assert any("aligns to non-matching target item" in d for d in validate_entry(entry))


def test_load_aborts_on_diagnostics(lexicon_builder):
    with pytest.raises(LexiconValidationError) as exc:
        lexicon_builder("group: [way] x\n  -> am: hona\n     align: 1\n")
    assert any("alignment length" in d for d in exc.value.diagnostics)


def test_unknown_category_symbol_flagged(lexicon_builder):
    with pytest.raises(LexiconValidationError) as exc:
        lexicon_builder(
            "group: [make_v] $thing\n  -> am: $thing x\n     align: 2,1\n",
        )
    assert any("$thing" in d for d in exc.value.diagnostics)


def test_rule_position_checks(lexicon_builder):
    with pytest.raises(LexiconValidationError) as exc:
        lexicon_builder(
            "group: [way]\n  -> am: hona\n     align: 1\n",
            transforms="rule: the $n => 3[+def] del 2\nrule: a $n => 2[+def] del 2\n",
        )
    diags = exc.value.diagnostics
    assert any("action position 3 out of range" in d for d in diags)
    assert any("both deleted and feature-set" in d for d in diags)


def test_parse_serialize_parse_fixed_point(demo, tmp_path):
    save_lexicon(demo, tmp_path / "round1")
    once = parse_lexicon(tmp_path / "round1")
    assert once.entries == demo.entries
    assert once.rules == demo.rules
    assert once.cats == demo.cats
    assert once.forms == demo.forms
    save_lexicon(once, tmp_path / "round2")
    twice = parse_lexicon(tmp_path / "round2")
    assert serialize_groups(twice.entries) == serialize_groups(once.entries)
    assert serialize_transforms(twice.rules) == serialize_transforms(once.rules)
    for lang in once.forms:
        assert serialize_forms(twice.forms[lang]) == serialize_forms(once.forms[lang])


def test_serialize_entry_shape(demo):
    entry = [e for _, e in demo.entries_for_head("make_v")][0]
    text = serialize_entry(entry)
    assert text.splitlines()[0] == "group: [make_v] fun of $sbd"
    assert "align: 2,0,0,1" in text
    assert "(1,2):(tam:tam,sb:sb)" in text and "(4,1):(num:num)" in text


def test_demo_alignment_invariants(demo):
    # No duplicate nonzero targets; heads always map to a target item.
    for entry in demo.entries:
        for tr in entry.translations:
            nonzero = [v for v in tr.alignment if v]
            assert len(nonzero) == len(set(nonzero))
            assert tr.alignment[entry.head_index - 1] != 0


def test_transform_parse_round_trip():
    text = "rule: they do not $v => 4[+neg,sb=3p,tam=impf] del 1,2,3\n"
    rules = parse_transforms(text)
    assert len(rules) == 1
    assert rules[0].deletions == (1, 2, 3)
    assert serialize_transforms(rules) == text
    assert parse_transforms(serialize_transforms(rules)) == rules


def test_comments_and_blank_lines_ignored(lexicon_builder):
    lex = lexicon_builder(
        "# a comment\n\ngroup: [way]   # trailing comment\n  -> am: hona\n     align: 1\n"
    )
    assert len(lex.entries) == 1
