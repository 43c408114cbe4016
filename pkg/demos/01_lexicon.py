"""Walk through the bundled demo lexicon: entries, rules, tables, categories."""

from mdt import demo_lexicon_dir, parse_lexicon, serialize_entry, validate_entry
from mdt.lexicon import parse_groups

lexicon = parse_lexicon(demo_lexicon_dir())

print(f"lexicon dir: {demo_lexicon_dir()}")
print(f"source {lexicon.source_lang} -> targets {', '.join(lexicon.target_langs)}")
print(f"{len(lexicon.entries)} groups, {len(lexicon.rules)} transformation rules")
print()

print("every group entry, serialized back in the groups.mdt grammar:")
for entry in lexicon.entries:
    print(serialize_entry(entry))
print()

print("head index lookups:")
for key in ["way", "make_v", "mayor_n", "you"]:
    hits = lexicon.entries_for_head(key)
    print(f"  {key}: {len(hits)} entrie(s)")
print()

print("category dictionary:")
for key, symbol in lexicon.cats.pairs():
    print(f"  {key} -> {symbol}")
print()

broken = parse_groups(
    "group: [make_v] fun of x\n"
    "  -> am: y\n"
    "     align: 0,1,2,0,3\n"
)
print("diagnostics for a deliberately broken entry:")
for diagnostic in validate_entry(broken[0]):
    print(f"  {diagnostic}")
