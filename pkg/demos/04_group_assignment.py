"""Candidate groups and constraint-satisfaction selection with node merging.

The $sbd slot of <make_v fun of $sbd> cannot surface by itself; it has
to be merged with the head of another selected group covering the same
token, here <mayor_n>. The solver prefers covering more tokens with
fewer groups.
"""

from mdt import (
    analyze_sentence,
    apply_transforms,
    demo_lexicon_dir,
    find_candidates,
    parse_lexicon,
    score,
    solve,
    verify_assignment,
)

lexicon = parse_lexicon(demo_lexicon_dir())


def show(text):
    sentence = analyze_sentence(text, lexicon.source_forms())
    transformed = apply_transforms(sentence, lexicon.rules, lexicon.cats)
    candidates = find_candidates(transformed, lexicon)
    print(f"input: {text}")
    print(f"  after transforms: {transformed.dump()}")
    print(f"  {len(candidates)} candidate group instance(s):")
    for candidate in candidates:
        print(f"    {candidate.dump()}")
    assignments = solve(candidates, transformed)
    print(f"  {len(assignments)} optimal assignment(s), score {score(assignments[0])}:")
    for assignment in assignments:
        for line in assignment.dump():
            print(f"    {line}")
        problems = verify_assignment(assignment, transformed)
        print(f"    verifier: {'clean' if not problems else problems}")
    print()


show("She made fun of the mayor.")
show("one way or the other")
show("John loses hope")
show("the mayor made fun of her")
