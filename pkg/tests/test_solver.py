import random

from mdt import analyze_sentence, apply_transforms, find_candidates, score, solve, verify_assignment

from oracle import best_score, subset_score

VOCAB = [
    "one", "way", "or", "the", "other", "she", "made", "fun", "of", "mayor",
    "you", "her", "they", "do", "not", "know", "loses", "hope", "lose",
    "make", "makes", "john", "zzz",
]


def prepared(demo, text):
    s = analyze_sentence(text, demo.source_forms())
    return apply_transforms(s, demo.rules, demo.cats)


def test_fig_candidates(demo):
    s = prepared(demo, "She made fun of the mayor.")
    cands = find_candidates(s, demo)
    keyed = {(c.entry.head_key, c.positions) for c in cands}
    assert ("make_v", (1, 2, 3, 5)) in keyed
    assert ("mayor_n", (5,)) in keyed
    assert len(cands) == 2


def test_entry1_candidate_covers_all_five(demo):
    s = prepared(demo, "one way or the other")
    cands = find_candidates(s, demo)
    assert len(cands) == 1
    assert cands[0].positions == (0, 1, 2, 3, 4)
    assert cands[0].entry.head_key == "way"


def test_unknown_sentence_has_no_candidates(demo):
    s = prepared(demo, "zzz qqq xyzzy")
    assert find_candidates(s, demo) == []


def test_candidate_order_deterministic(demo):
    s = prepared(demo, "She made fun of the mayor.")
    once = find_candidates(s, demo)
    twice = find_candidates(s, demo)
    assert once == twice
    assert [c.positions[0] for c in once] == sorted(c.positions[0] for c in once)


def test_fig_solution_merges_mayor(demo):
    s = prepared(demo, "She made fun of the mayor.")
    best = solve(find_candidates(s, demo), s)
    assert len(best) == 1
    assignment = best[0]
    assert score(assignment) == (4, -2)
    assert len(assignment.merges) == 1
    parent, item_index, child = assignment.merges[0]
    assert parent.entry.head_key == "make_v"
    assert item_index == 4
    assert child.entry.head_key == "mayor_n"
    assert verify_assignment(assignment, s) == []


def test_longer_group_beats_shorter(demo):
    s = prepared(demo, "John loses hope")
    cands = find_candidates(s, demo)
    best = solve(cands, s)
    assert score(best[0]) == (2, -1)
    assert best[0].instances[0].entry.head_key == "lose_v"


def test_empty_candidates_empty_assignment(demo):
    s = prepared(demo, "zzz")
    best = solve([], s)
    assert len(best) == 1
    assert best[0].instances == ()
    assert score(best[0]) == (0, 0)


def test_single_group_cover_scores_five(demo):
    s = prepared(demo, "one way or the other")
    best = solve(find_candidates(s, demo), s)
    assert score(best[0]) == (5, -1)


def test_dangling_slot_is_never_selected(lexicon_builder):
    # $food can match "apple", but no group is headed by it, so the
    # candidate's slot can never merge and the instance must be pruned.
    lex = lexicon_builder(
        "group: [eat_v] $food\n  -> am: $food [balA_v]\n     align: 2,1\n",
        src_forms="eat\teat_v\tv\n",
        cats="apple\t$food\n",
    )
    s = apply_transforms(analyze_sentence("eat apple", lex.source_forms()), lex.rules, lex.cats)
    cands = find_candidates(s, lex)
    assert len(cands) == 1 and cands[0].category_slots() == ((2, 1),)
    best = solve(cands, s)
    assert len(best) == 1 and best[0].instances == ()
    assert score(best[0]) == (0, 0) == best_score(cands)


def test_solver_matches_oracle_on_goldens(demo):
    for text in [
        "She made fun of the mayor.",
        "one way or the other",
        "John loses hope",
        "they do not know her",
        "you",
        "the mayor made fun of her",
    ]:
        s = prepared(demo, text)
        cands = find_candidates(s, demo)
        got = solve(cands, s)
        assert score(got[0]) == best_score(cands), text
        for assignment in got:
            assert verify_assignment(assignment, s) == []


def test_solver_matches_oracle_randomized(demo):
    rng = random.Random(7)
    checked = 0
    while checked < 60:
        n = rng.randint(1, 8)
        text = " ".join(rng.choice(VOCAB) for _ in range(n))
        s = prepared(demo, text)
        cands = find_candidates(s, demo)
        if len(cands) > 12 or len(s.visible()) > 8:
            continue
        got = solve(cands, s)
        assert score(got[0]) == best_score(cands), text
        assert subset_score(list(got[0].instances)) == score(got[0]) or not got[0].instances
        checked += 1


def test_monotonicity_adding_candidates(demo):
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(2, 7)
        text = " ".join(rng.choice(VOCAB) for _ in range(n))
        s = prepared(demo, text)
        cands = find_candidates(s, demo)
        if not cands:
            continue
        full = score(solve(cands, s)[0])
        drop = rng.randrange(len(cands))
        reduced = cands[:drop] + cands[drop + 1:]
        assert score(solve(reduced, s)[0]) <= full


def test_solve_deterministic(demo):
    s = prepared(demo, "the mayor made fun of her")
    cands = find_candidates(s, demo)
    assert solve(cands, s) == solve(list(cands), s)


def test_dump_format(demo):
    s = prepared(demo, "She made fun of the mayor.")
    assignment = solve(find_candidates(s, demo), s)[0]
    lines = assignment.dump()
    assert any(line.startswith("span=1..5 head=make_v entry=3") for line in lines)
    assert any("merges=[4->mayor_n@5]" in line for line in lines)
