"""
The lattice of permutation pre-orders under containment of relations.

Elements are the n! pre-orders mu(S_n); a <= b iff every related pair of a
is related in b.  ``build_lattice`` enumerates everything and derives the
cover digraph definitionally (no intermediate element), which doubles as
the oracle for the constructive generator ``covers_up``.

Going up by a cover combines two blocks that are incomparable or related
by a cover.  If the merged interval newly overlaps blocks that were
unrelated to both parts, each such block may sit above or below the merged
block; ``covers_up`` branches over those orientations and keeps the
candidates that are valid elements with exactly one block fewer.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IncomparableError, ResourceLimitError
from .perms import Permutation, all_permutations
from .preorders import (
    Block,
    Preorder,
    block_order,
    blocks,
    close_rows,
    is_permutation_preorder,
    lam,
    mu,
    require_permutation_preorder,
)

LATTICE_SIZE_CAP = 7


def leq(a: Preorder, b: Preorder) -> bool:
    """Containment of relations: the order on lattice elements."""
    if a.n != b.n:
        raise ValueError("elements live on different ground sets")
    return a.bits & ~b.bits == 0


def join(a: Preorder, b: Preorder) -> Preorder:
    """Transitive closure of the union of relations.

    Geometrically this is the intersection of the two cones, so the result
    is always an element; that is asserted, not assumed.
    """
    if a.n != b.n:
        raise ValueError("elements live on different ground sets")
    rows = [ra | rb for ra, rb in zip(a.rows(), b.rows())]
    out = Preorder.from_rows(a.n, rows)
    if not is_permutation_preorder(out):
        raise RuntimeError(f"join fell outside the lattice: {out}")
    return out


def _merge_candidates(w: Preorder, bi: Block, bj: Block) -> list[Preorder]:
    """All covers of w that combine the given pair of blocks."""
    n = w.n
    target_blocks = len(blocks(w)) - 1
    merged_mask = 0
    for v in bi.members | bj.members:
        merged_mask |= 1 << (v - 1)
    base = list(w.rows())
    for v in bi.members | bj.members:
        base[v - 1] |= merged_mask
    close_rows(base)

    out = []
    seen = set()
    stack = [Preorder.from_rows(n, base)]
    while stack:
        cand = stack.pop()
        if cand in seen:
            continue
        seen.add(cand)
        bs = blocks(cand)
        if len(bs) != target_blocks:
            continue  # extra blocks collapsed: rank would jump by more than one
        bo = block_order(cand)
        pending = None
        for x in range(len(bs)):
            for y in range(x + 1, len(bs)):
                if bs[x].overlaps(bs[y]) and not bo.comparable(x, y):
                    pending = (bs[x], bs[y])
                    break
            if pending:
                break
        if pending is None:
            if is_permutation_preorder(cand):
                out.append(cand)
            continue
        cx, cy = pending
        for lower, upper in ((cx, cy), (cy, cx)):
            rows = list(cand.rows())
            target = 0
            for v in upper.members:
                target |= 1 << (v - 1)
            for v in lower.members:
                rows[v - 1] |= target
            close_rows(rows)
            stack.append(Preorder.from_rows(n, rows))
    return out


@lru_cache(maxsize=None)
def _covers_up_cached(w: Preorder) -> tuple[Preorder, ...]:
    bo = block_order(w)
    m = len(bo.blocks)
    found = {}
    for i in range(m):
        for j in range(i + 1, m):
            combinable = (
                not bo.comparable(i, j)
                or (i, j) in bo.covers
                or (j, i) in bo.covers
            )
            if not combinable:
                continue
            for cand in _merge_candidates(w, bo.blocks[i], bo.blocks[j]):
                found[cand] = None
    return tuple(sorted(found, key=lambda c: lam(c).word))


def covers_up(w: Preorder) -> list[Preorder]:
    """Elements covering w, constructed by combining blocks."""
    require_permutation_preorder(w)
    return list(_covers_up_cached(w))


@dataclass(frozen=True)
class Interval:
    """A closed interval of the lattice with its induced cover edges."""

    bottom: Preorder
    top: Preorder
    members: tuple[Preorder, ...]
    edges: tuple[tuple[int, int], ...]  # indices into members


class OmegaLattice:
    """The full lattice on S_n, built by enumeration.

    Elements are indexed by the lexicographic order of their lam words, so
    diagrams and reports are stable across runs.
    """

    def __init__(self, n: int, elements, words):
        self.n = n
        self.elements: tuple[Preorder, ...] = tuple(elements)
        self.words: tuple[Permutation, ...] = tuple(words)
        self.index: dict[Preorder, int] = {q: i for i, q in enumerate(self.elements)}
        self.rank: tuple[int, ...] = tuple(n - len(blocks(q)) for q in self.elements)
        size = len(self.elements)
        self.up_mask = [0] * size  # up_mask[i] bit j set iff elements[i] <= elements[j]
        self.down_mask = [0] * size
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                if a.bits & ~b.bits == 0:
                    self.up_mask[i] |= 1 << j
                    self.down_mask[j] |= 1 << i
        cover_lists = [[] for _ in range(size)]
        for i in range(size):
            rest = self.up_mask[i] & ~(1 << i)
            j = 0
            m = rest
            while m:
                if m & 1:
                    between = self.up_mask[i] & self.down_mask[j]
                    if between.bit_count() == 2:
                        cover_lists[i].append(j)
                m >>= 1
                j += 1
        self.covers: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in cover_lists)
        self.bottom = self.index[Preorder.discrete(n)]
        self.top = self.index[Preorder.complete(n)]

    def __len__(self):
        return len(self.elements)

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self.up_mask[i] >> j & 1)

    def index_of(self, q: Preorder) -> int:
        try:
            return self.index[q]
        except KeyError:
            raise ValueError("pre-order is not an element of this lattice") from None

    def meet(self, a: Preorder, b: Preorder) -> Preorder:
        """Unique maximal common lower bound, found by search."""
        i, j = self.index_of(a), self.index_of(b)
        common = self.down_mask[i] & self.down_mask[j]
        best = max(_iter_bits(common), key=lambda k: self.rank[k])
        if self.down_mask[best] != common:
            raise RuntimeError("common lower bounds have no maximum")
        return self.elements[best]

    def join(self, a: Preorder, b: Preorder) -> Preorder:
        out = join(a, b)
        self.index_of(out)  # assert membership
        return out

    def interval(self, bottom: Preorder, top: Preorder) -> Interval:
        i, j = self.index_of(bottom), self.index_of(top)
        if not self.leq_idx(i, j):
            raise IncomparableError(f"{lam(bottom)} is not below {lam(top)}")
        inside = self.up_mask[i] & self.down_mask[j]
        ids = list(_iter_bits(inside))
        local = {k: pos for pos, k in enumerate(ids)}
        edges = tuple(
            (local[k], local[c])
            for k in ids
            for c in self.covers[k]
            if inside >> c & 1
        )
        return Interval(bottom, top, tuple(self.elements[k] for k in ids), edges)

    def to_json(self) -> dict:
        edges = sorted((i, j) for i in range(len(self)) for j in self.covers[i])
        return {
            "n": self.n,
            "nodes": [str(w) for w in self.words],
            "edges": [list(e) for e in edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for w in self.words:
            lines.append(f'  "{w}";')
        for i in range(len(self)):
            for j in self.covers[i]:
                lines.append(f'  "{self.words[i]}" -> "{self.words[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _iter_bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def build_lattice(n: int, force: bool = False) -> OmegaLattice:
    if n < 1:
        raise ValueError("n must be positive")
    if n > LATTICE_SIZE_CAP and not force:
        raise ResourceLimitError(
            f"building the full lattice for n={n} means {n}! elements; "
            f"cap is {LATTICE_SIZE_CAP} (use force to override)"
        )
    words = list(all_permutations(n))
    elements = [mu(p) for p in words]
    return OmegaLattice(n, elements, words)
