from mdt import EMPTY, Analysis, analyze, generate, parse_features
from mdt.morpho import FormTable, lexeme_pos


def test_analyze_made(demo):
    table = demo.source_forms()
    assert analyze("made", table) == (Analysis("make_v", "v", parse_features("tns=pst")),)


def test_analyze_mayor(demo):
    table = demo.source_forms()
    assert analyze("mayor", table) == (Analysis("mayor_n", "n", EMPTY),)


def test_analyze_unknown_fallback(demo):
    table = demo.source_forms()
    assert analyze("zzz", table) == (Analysis("zzz", "unk", EMPTY),)


def test_analyze_never_empty(demo):
    table = demo.source_forms()
    for word in ["", "made", "qqq", "don"]:
        assert len(analyze(word, table)) >= 1


def test_generate_underspecified_fans_out(demo):
    table = demo.target_forms("am")
    forms = generate("qora.ta_v", parse_features("tam=impf,sb=3ps"), table)
    assert forms == ("yqor.tAl", "tqor.talA^c")


def test_generate_exact(demo):
    table = demo.target_forms("am")
    assert generate("'a^sofa_v", parse_features("tam=prf,sb=3psf"), table) == ("'a^sofa^c",)


def test_generate_gap_is_empty(demo):
    table = demo.target_forms("am")
    assert generate("qora.ta_v", parse_features("tam=prf,sb=3psf,num=pl"), table) == ()


def test_generate_empty_features_returns_all(demo):
    for lang in ("en", "am"):
        table = demo.forms[lang]
        for lexeme in table.lexemes():
            expected = []
            for _, wordform in table.generation_rows(lexeme):
                if wordform not in expected:
                    expected.append(wordform)
            assert list(generate(lexeme, EMPTY, table)) == expected


def test_round_trip_both_tables(demo):
    # Every analysis row regenerates its own wordform from its features.
    for lang in ("en", "am"):
        table = demo.forms[lang]
        for wordform, analysis in table.rows:
            assert wordform in generate(analysis.lexeme, analysis.features, table)


def test_lexeme_pos_suffix():
    assert lexeme_pos("lose_v") == "v"
    assert lexeme_pos("qora.ta_v") == "v"
    assert lexeme_pos("mayor_n") == "n"
    assert lexeme_pos("she") == "unk"
    assert lexeme_pos("_v") == "unk"


def test_table_kind_round_trip():
    table = FormTable(kind="generation")
    table.add_row("kantibAwn", "kantibA_n", "n", parse_features("+def,+acc"))
    assert table.analyses("kantibAwn")[0].lexeme == "kantibA_n"
    assert generate("kantibA_n", parse_features("+def"), table) == ("kantibAwn",)
