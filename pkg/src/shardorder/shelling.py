"""
Edge labels, increasing chains, and Moebius numbers.

Each cover merges exactly two blocks of the lower element; the edge label
is the larger of their placements there.  Every interval has exactly one
maximal chain with a weakly increasing label word, found greedily: among
the pairs that can be combined on the way to the top, merge the one whose
larger placement is smallest.  The number of strictly decreasing maximal
chains gives the Moebius number up to sign; the classical recursion is run
alongside as an independent check and disagreement is fatal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IncomparableError
from .lattice import covers_up, leq
from .preorders import Block, Preorder, block_order, blocks, lam, placements


def merged_pair(lower: Preorder, upper: Preorder) -> tuple[Block, Block]:
    """The two blocks of ``lower`` that were combined to form ``upper``."""
    if not (leq(lower, upper) and lower != upper):
        raise ValueError("not a cover: elements are not strictly ordered")
    lower_blocks = blocks(lower)
    upper_blocks = blocks(upper)
    if len(lower_blocks) != len(upper_blocks) + 1:
        raise ValueError("not a cover: rank difference is not one")
    upper_sets = {b.members for b in upper_blocks}
    merged = [b for b in lower_blocks if b.members not in upper_sets]
    if len(merged) != 2:
        raise ValueError("not a cover: block partitions differ by more than a merge")
    return merged[0], merged[1]


def edge_label(lower: Preorder, upper: Preorder) -> int:
    """Larger placement (in ``lower``) of the two blocks the cover merges."""
    b1, b2 = merged_pair(lower, upper)
    pl = placements(lower)
    label = max(pl[b1], pl[b2])
    assert 2 <= label <= len(blocks(lower))
    return label


def combinable_pairs(w: Preorder, top: Preorder) -> list[tuple[Block, Block]]:
    """Pairs of blocks of w, inside one block of top, combinable in w.

    Combinable means incomparable or related by a cover; these are exactly
    the merges that can start a maximal chain from w staying below top.
    """
    if not leq(w, top):
        raise IncomparableError("w is not below top")
    bo = block_order(w)
    top_block_of = {}
    for tb in blocks(top):
        for v in tb.members:
            top_block_of[v] = tb
    out = []
    m = len(bo.blocks)
    for i in range(m):
        for j in range(i + 1, m):
            bi, bj = bo.blocks[i], bo.blocks[j]
            if top_block_of[bi.min] is not top_block_of[bj.min]:
                continue
            if (
                not bo.comparable(i, j)
                or (i, j) in bo.covers
                or (j, i) in bo.covers
            ):
                out.append((bi, bj))
    return out


@dataclass(frozen=True)
class LabeledChain:
    """A maximal chain of an interval together with its edge labels."""

    elements: tuple[Preorder, ...]
    labels: tuple[int, ...]


def increasing_chain(bottom: Preorder, top: Preorder) -> LabeledChain:
    """The unique weakly increasing maximal chain from bottom to top.

    Greedy construction: repeatedly merge the combinable pair whose larger
    placement is minimal; exactly one cover below top performs each merge.
    """
    if not leq(bottom, top):
        raise IncomparableError("bottom is not below top")
    chain = [bottom]
    labels = []
    cur = bottom
    while cur != top:
        pl = placements(cur)
        pairs = combinable_pairs(cur, top)
        assert pairs, "strictly ordered interval must have a combinable pair"
        scored = sorted(pairs, key=lambda p: max(pl[p[0]], pl[p[1]]))
        best = scored[0]
        best_label = max(pl[best[0]], pl[best[1]])
        if len(scored) > 1:
            runner_up = max(pl[scored[1][0]], pl[scored[1][1]])
            assert best_label < runner_up, "minimal larger placement must be unique"
        nexts = [
            c
            for c in covers_up(cur)
            if leq(c, top) and _same_block(c, best[0], best[1])
        ]
        assert len(nexts) == 1, "exactly one cover below top merges the chosen pair"
        labels.append(best_label)
        cur = nexts[0]
        chain.append(cur)
    out = LabeledChain(tuple(chain), tuple(labels))
    assert all(x <= y for x, y in zip(out.labels, out.labels[1:])), (
        "greedy chain must carry a weakly increasing label word"
    )
    return out


def _same_block(q: Preorder, b1: Block, b2: Block) -> bool:
    return q.equiv(b1.min, b2.min)


def interval_elements(bottom: Preorder, top: Preorder) -> list[Preorder]:
    """All elements between bottom and top, found by walking covers."""
    if not leq(bottom, top):
        raise IncomparableError("bottom is not below top")
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        cur = frontier.pop()
        for c in covers_up(cur):
            if c not in seen and leq(c, top):
                seen.add(c)
                frontier.append(c)
    return sorted(seen, key=lambda q: q.bits)


def count_decreasing_chains(bottom: Preorder, top: Preorder) -> int:
    """Maximal chains of [bottom, top] with strictly decreasing labels."""
    if not leq(bottom, top):
        raise IncomparableError("bottom is not below top")

    @lru_cache(maxsize=None)
    def count(cur: Preorder, last: int) -> int:
        if cur == top:
            return 1
        total = 0
        for c in covers_up(cur):
            if not leq(c, top):
                continue
            lab = edge_label(cur, c)
            if lab < last:
                total += count(c, lab)
        return total

    result = count(bottom, bottom.n + 1)
    count.cache_clear()
    return result


def mobius(bottom: Preorder, top: Preorder) -> int:
    """Moebius number of the interval, computed two independent ways.

    (a) (-1)^(rank difference) times the strictly decreasing chain count;
    (b) the classical recursion over the interval.  They must agree.
    """
    if not leq(bottom, top):
        raise IncomparableError("bottom is not below top")
    diff = len(blocks(bottom)) - len(blocks(top))
    signed = (-1) ** diff * count_decreasing_chains(bottom, top)

    members = interval_elements(bottom, top)
    members.sort(key=lambda q: len(blocks(bottom)) - len(blocks(q)))
    value = {bottom: 1}
    for y in members:
        if y == bottom:
            continue
        value[y] = -sum(value[z] for z in members if leq(z, y) and z != y)
    if signed != value[top]:
        raise RuntimeError(
            f"Moebius disagreement on [{bottom}, {top}]: "
            f"chains give {signed}, recursion gives {value[top]}"
        )
    return signed


def max_label_multiplicities(bottom: Preorder, top: Preorder) -> list[int]:
    """Per step, how many covers reach the maximum feasible label.

    Walks one canonical chain taking a maximum-label cover at each step;
    recorded for reporting only, nothing downstream depends on it.
    """
    if not leq(bottom, top):
        raise IncomparableError("bottom is not below top")
    out = []
    cur = bottom
    while cur != top:
        scored = sorted(
            ((edge_label(cur, c), c) for c in covers_up(cur) if leq(c, top)),
            key=lambda t: (-t[0], t[1].bits),
        )
        best = scored[0][0]
        out.append(sum(1 for lab, _ in scored if lab == best))
        cur = scored[0][1]
    return out


def chain_report(bottom: Preorder, top: Preorder) -> dict:
    """JSON-ready summary of an interval's chain data."""
    inc = increasing_chain(bottom, top)
    return {
        "interval": [str(lam(bottom)), str(lam(top))],
        "increasing": list(inc.labels),
        "decreasing_count": count_decreasing_chains(bottom, top),
        "mobius": mobius(bottom, top),
        "max_label_multiplicities": max_label_multiplicities(bottom, top),
    }
