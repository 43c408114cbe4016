"""End-to-end translation: agreement transfer, realization, ambiguity.

Ambiguity is preserved on purpose: under-specified features fan out
over all compatible target forms, and a group with several translations
yields one output per choice. A human reviewer picks the right one.
"""

import json

from mdt import demo_lexicon_dir, parse_lexicon, translate

lexicon = parse_lexicon(demo_lexicon_dir())

for text in [
    "She made fun of the mayor.",
    "one way or the other",
    "John loses hope",
    "you",
    "the mayor made fun of her",
    "zzz qqq",
]:
    result = translate(text, lexicon)
    print(f"{text!r}:")
    for output in result.outputs:
        print(f"  {output}")
    print()

print("capping the fan-out with max_outputs=1:")
print(" ", translate("you", lexicon, max_outputs=1).outputs)
print()

print("the structured result document (what --json and the service emit):")
doc = translate("She made fun of the mayor.", lexicon).to_doc()
print(json.dumps(doc, ensure_ascii=False, indent=2))
