"""Table-driven analysis and generation, including the deliberate fan-out
that appears when a query is less specific than the table rows."""

from mdt import analyze, demo_lexicon_dir, generate, parse_features, parse_lexicon

lexicon = parse_lexicon(demo_lexicon_dir())
english = lexicon.source_forms()
amharic = lexicon.target_forms("am")

print("analysis (English):")
for word in ["made", "mayor", "loses", "zzz"]:
    readings = analyze(word, english)
    shown = "; ".join(f"{a.lexeme}/{a.pos}[{a.features}]" for a in readings)
    print(f"  {word:8s} -> {shown}")
print()

print("generation (Amharic):")
cases = [
    ("'a^sofa_v", "tam=prf,sb=3psf"),
    ("kantibA_n", "+def,+acc"),
    ("qora.ta_v", "tam=impf,sb=3ps"),      # under-specified: both genders emerge
    ("qora.ta_v", "tam=prf,sb=3psf,num=pl"),  # no compatible row: generation gap
]
for lexeme, feats in cases:
    forms = generate(lexeme, parse_features(feats), amharic)
    print(f"  {lexeme:12s} [{feats}] -> {forms or '(gap)'}")
print()

print("round trip over the English table:")
for wordform, analysis in english.rows[:6]:
    regenerated = generate(analysis.lexeme, analysis.features, english)
    print(f"  {wordform:8s} -> {analysis.lexeme:8s} -> {regenerated}")
