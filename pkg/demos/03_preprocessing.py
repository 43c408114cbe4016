"""Tokenization and the morphosyntactic transformation pass.

The rules rewrite English toward the target language's morphology:
pronoun subjects and articles disappear into features on the verb or
noun, so the group matcher sees contiguous content words.
"""

from mdt import analyze_sentence, apply_transforms, demo_lexicon_dir, parse_lexicon, tokenize

lexicon = parse_lexicon(demo_lexicon_dir())

print("tokenizer:")
for text in ["She made fun of the mayor.", "don't stop", '"Stop!"']:
    print(f"  {text!r} -> {tokenize(text)}")
print()

print("transformation pass (deleted tokens in parentheses):")
for text in [
    "She made fun of the mayor.",
    "they do not know her",
    "one way or the other",
]:
    sentence = analyze_sentence(text, lexicon.source_forms())
    transformed = apply_transforms(sentence, lexicon.rules, lexicon.cats)
    print(f"  in : {sentence.dump()}")
    print(f"  out: {transformed.dump()}")
    print()

print("rules, as loaded:")
from mdt.lexicon import serialize_transforms

print(serialize_transforms(lexicon.rules))
