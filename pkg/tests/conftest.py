import pytest

from mdt import demo_lexicon_dir, parse_lexicon


@pytest.fixture(scope="session")
def demo():
    return parse_lexicon(demo_lexicon_dir())


@pytest.fixture
def lexicon_builder(tmp_path):
    """Write lexicon files from strings and parse the directory."""

    def build(groups, transforms=None, src_forms=None, cats=None, tgt_forms=None,
              src="en", tgt="am", parse=True):
        src_dir = tmp_path / "lex" / src
        tgt_dir = tmp_path / "lex" / tgt
        src_dir.mkdir(parents=True, exist_ok=True)
        tgt_dir.mkdir(parents=True, exist_ok=True)
        (src_dir / "groups.mdt").write_text(groups, "utf-8")
        if transforms is not None:
            (src_dir / "transforms.mdt").write_text(transforms, "utf-8")
        if src_forms is not None:
            (src_dir / "forms.tsv").write_text(src_forms, "utf-8")
        if cats is not None:
            (src_dir / "cats.tsv").write_text(cats, "utf-8")
        if tgt_forms is not None:
            (tgt_dir / "forms.tsv").write_text(tgt_forms, "utf-8")
        if not parse:
            return tmp_path / "lex"
        return parse_lexicon(tmp_path / "lex")

    return build
