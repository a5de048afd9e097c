import itertools
import random

import pytest

from shardorder.errors import InvalidPreorderError
from shardorder.perms import Permutation, all_permutations, descending_runs, identity, inversions, reversal
from shardorder.preorders import (
    Preorder,
    axiom_violations,
    block_of,
    block_order,
    blocks,
    close_rows,
    is_permutation_preorder,
    lam,
    mu,
    placements,
    preorder_from_json,
    preorder_to_json,
)

P = Permutation.parse


def members(q):
    return [sorted(b.members) for b in blocks(q)]


def figure2_preorder():
    # x1=x4, x6=x7, x1<=x2, x3<=x1 on [7]
    return Preorder.from_pairs(
        7, [(1, 4), (4, 1), (6, 7), (7, 6), (1, 2), (3, 1)]
    )


def test_discrete_and_complete_blocks():
    assert members(Preorder.discrete(4)) == [[1], [2], [3], [4]]
    assert members(Preorder.complete(4)) == [[1, 2, 3, 4]]


def test_figure2_blocks_and_order():
    q = figure2_preorder()
    assert members(q) == [[1, 4], [2], [3], [5], [6, 7]]
    bo = block_order(q)
    idx = {b.min: i for i, b in enumerate(bo.blocks)}
    assert (idx[3], idx[1]) in bo.less
    assert (idx[1], idx[2]) in bo.less
    assert (idx[3], idx[2]) in bo.less  # transitively
    # {5} and {6,7} are isolated
    for lone in (idx[5], idx[6]):
        assert all(
            not bo.comparable(lone, j) for j in range(len(bo.blocks)) if j != lone
        )
    assert bo.covers == frozenset({(idx[3], idx[1]), (idx[1], idx[2])})


def test_mu_26314758_matches_figure3():
    q = mu(P("26314758"))
    assert members(q) == [[1, 3, 6], [2], [4], [5, 7], [8]]
    bo = block_order(q)
    idx = {b.min: i for i, b in enumerate(bo.blocks)}
    assert bo.covers == frozenset(
        {(idx[2], idx[1]), (idx[1], idx[4]), (idx[1], idx[5])}
    )
    # {4} and {5,7} stay incomparable; {8} is isolated
    assert not bo.comparable(idx[4], idx[5])
    assert all(not bo.comparable(idx[8], j) for j in range(len(bo.blocks)) if j != idx[8])


def test_mu_extremes():
    assert mu(identity(5)) == Preorder.discrete(5)
    assert mu(reversal(5)) == Preorder.complete(5)


def test_mu_blocks_are_runs():
    for n in range(1, 6):
        for p in all_permutations(n):
            runs = {frozenset(r.values) for r in descending_runs(p)}
            assert {b.members for b in blocks(mu(p))} == runs


def test_block_of():
    q = mu(P("26314758"))
    assert sorted(block_of(q, 3).members) == [1, 3, 6]
    with pytest.raises(ValueError):
        block_of(q, 9)


def test_validate_discrete_ok():
    assert axiom_violations(Preorder.discrete(5)) == []


def test_validate_p1_violation():
    q = Preorder.from_pairs(4, [(1, 3), (3, 1), (2, 4), (4, 2)])
    bad = axiom_violations(q)
    assert len(bad) == 1 and bad[0].axiom == "P1"
    assert {bad[0].first.interval, bad[0].second.interval} == {(1, 3), (2, 4)}
    assert not is_permutation_preorder(q)


def test_validate_p2_violation():
    pairs = [(1, 2), (2, 1), (5, 6), (6, 5)]
    pairs += [(a, b) for a in (1, 2) for b in (5, 6)]
    q = Preorder.from_pairs(6, pairs)
    bad = axiom_violations(q)
    assert any(v.axiom == "P2" for v in bad)
    v = next(v for v in bad if v.axiom == "P2")
    assert {v.first.interval, v.second.interval} == {(1, 2), (5, 6)}


def test_lam_figure5():
    q = Preorder.from_pairs(
        9,
        [(3, 1), (1, 3), (9, 7), (7, 9), (8, 4), (4, 8)]
        + [(2, v) for v in (1, 3)]
        + [(v, w) for v in (7, 9) for w in (4, 8)]
        + [(v, 5) for v in (4, 8)]
        + [(v, 6) for v in (4, 8)],
    )
    assert str(lam(q)) == "231978456"


def test_lam_trivial_and_roundtrip():
    assert lam(Preorder.discrete(6)) == identity(6)
    assert lam(mu(P("4312"))) == P("4312")
    for p in all_permutations(4):
        assert lam(mu(p)) == p


def test_lam_rejects_invalid():
    q = Preorder.from_pairs(4, [(1, 3), (3, 1), (2, 4), (4, 2)])
    with pytest.raises(InvalidPreorderError):
        lam(q)


def test_placements_discrete():
    pl = placements(Preorder.discrete(5))
    for block, pos in pl.items():
        assert block.min == pos


def test_placements_figure3():
    q = mu(P("26314758"))
    got = {tuple(sorted(b.members)): pos for b, pos in placements(q).items()}
    assert got == {(2,): 1, (1, 3, 6): 2, (4,): 3, (5, 7): 4, (8,): 5}


def test_placements_figure5_word_positions():
    q = mu(P("231978456"))
    got = {tuple(sorted(b.members)): pos for b, pos in placements(q).items()}
    assert got == {(2,): 1, (1, 3): 2, (7, 9): 3, (4, 8): 4, (5,): 5, (6,): 6}


def test_placements_respect_block_order():
    for n in range(1, 6):
        for p in all_permutations(n):
            q = mu(p)
            pl = placements(q)
            bo = block_order(q)
            for (i, j) in bo.less:
                assert pl[bo.blocks[i]] < pl[bo.blocks[j]]


def test_consecutive_placements_combinable():
    # blocks with adjacent placements are incomparable or form a cover
    for p in all_permutations(5):
        q = mu(p)
        bo = block_order(q)
        by_pos = sorted(bo.blocks, key=lambda b: placements(q)[b])
        for left, right in zip(by_pos, by_pos[1:]):
            i, j = bo.blocks.index(left), bo.blocks.index(right)
            assert (
                not bo.comparable(i, j)
                or (i, j) in bo.covers
                or (j, i) in bo.covers
            )


def test_inversion_overlap_chain():
    # an inversion whose runs have disjoint intervals is witnessed by a
    # chain of interval-overlapping blocks going up from the left run
    for n in range(2, 6):
        for p in all_permutations(n):
            q = mu(p)
            bs = blocks(q)
            bo = block_order(q)
            edges = {
                i: [
                    j
                    for j in range(len(bs))
                    if (i, j) in bo.less and bs[i].overlaps(bs[j])
                ]
                for i in range(len(bs))
            }
            for a, b in inversions(p):
                ba, bb = block_of(q, a), block_of(q, b)
                if ba == bb or ba.overlaps(bb):
                    continue
                start, goal = bs.index(ba), bs.index(bb)
                seen, frontier = {start}, [start]
                while frontier:
                    cur = frontier.pop()
                    for nxt in edges[cur]:
                        if nxt not in seen:
                            seen.add(nxt)
                            frontier.append(nxt)
                assert goal in seen, (p, a, b)


def all_preorders(n):
    """Every reflexive transitive relation on [n], by filtering subsets."""
    base = list(itertools.permutations(range(n), 2))
    for picks in itertools.product((0, 1), repeat=len(base)):
        rows = [1 << a for a in range(n)]
        for bit, (a, b) in zip(picks, base):
            if bit:
                rows[a] |= 1 << b
        if close_rows(list(rows)) == rows:
            yield Preorder.from_rows(n, rows)


def test_image_characterization_exhaustive():
    for n in range(1, 5):
        image = {mu(p) for p in all_permutations(n)}
        for q in all_preorders(n):
            assert is_permutation_preorder(q) == (q in image), q


def test_image_characterization_randomized_n5():
    image = {mu(p) for p in all_permutations(5)}
    rng = random.Random(20260809)
    universe = list(itertools.permutations(range(1, 6), 2))
    for _ in range(400):
        pairs = rng.sample(universe, rng.randint(0, 6))
        q = Preorder.from_pairs(5, pairs)
        assert is_permutation_preorder(q) == (q in image), q


def test_json_roundtrip():
    for p in all_permutations(4):
        q = mu(p)
        assert preorder_from_json(preorder_to_json(q)) == q
    q = figure2_preorder()
    assert preorder_from_json(preorder_to_json(q)) == q


def test_json_shape():
    data = preorder_to_json(mu(P("26314758")))
    assert data == {
        "n": 8,
        "blocks": [[2], [1, 3, 6], [4], [5, 7], [8]],
        "less": [[0, 1], [1, 2], [1, 3]],
    }


def test_json_rejects_bad_input():
    with pytest.raises(ValueError):
        preorder_from_json({"n": 3, "blocks": [[1, 2]], "less": []})
    with pytest.raises(InvalidPreorderError):
        # overlapping incomparable blocks: (P1) fails
        preorder_from_json({"n": 4, "blocks": [[1, 3], [2, 4]], "less": []})
    with pytest.raises(InvalidPreorderError):
        # disjoint cover: (P2) fails
        preorder_from_json({"n": 6, "blocks": [[1, 2], [3], [4], [5, 6]], "less": [[0, 3]]})
    with pytest.raises(ValueError):
        # order relations would collapse the two blocks into one
        preorder_from_json({"n": 2, "blocks": [[1], [2]], "less": [[0, 1], [1, 0]]})


def test_preorder_value_semantics():
    a = mu(P("2134"))
    b = Preorder.from_pairs(4, [(1, 2), (2, 1)])
    assert a == b and hash(a) == hash(b)
    assert a <= b and a >= b and not a < b
    assert Preorder.discrete(4) < a < Preorder.complete(4)


def test_preorder_rejects_unclosed_bits():
    # reflexive plus 1<=2 and 2<=3 but no 1<=3: not transitively closed
    unclosed = (0b011 << 0) | (0b110 << 3) | (0b100 << 6)
    with pytest.raises(ValueError):
        Preorder(3, unclosed)
    with pytest.raises(ValueError):
        Preorder(3, 0)  # not reflexive
