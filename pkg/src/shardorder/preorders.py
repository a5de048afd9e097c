"""
Pre-orders on [n], their blocks, and the run/block bijection.

A pre-order is a reflexive transitive relation.  It is stored as a packed
n*n boolean matrix (one Python int, row-major: bit (a-1)*n + (b-1) set iff
a is below b), so equality of relations is plain value equality and
containment is a single mask test.  Closure is Warshall's algorithm on the
row masks; n never exceeds single digits here, so the dense form wins on
simplicity.

Blocks are the classes of mutual comparability.  The elements of the
lattice are the pre-orders satisfying two axioms:

  (P1) blocks whose min/max intervals intersect are comparable;
  (P2) covering blocks have intersecting intervals.

``mu`` sends a permutation to such a pre-order (descending runs become
blocks, overlapping runs are ordered left-below-right) and ``lam`` is its
inverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidPreorderError
from .perms import Permutation, descending_runs


def close_rows(rows: list[int]) -> list[int]:
    """In-place Warshall transitive closure of row masks."""
    n = len(rows)
    for k in range(n):
        rk = rows[k]
        kbit = 1 << k
        for a in range(n):
            if rows[a] & kbit:
                rows[a] |= rk
    return rows


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation on [n], packed into one int."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set must be nonempty")
        rows = self.rows()
        for a in range(self.n):
            if not rows[a] >> a & 1:
                raise ValueError(f"relation is not reflexive at {a + 1}")
        closed = close_rows(list(rows))
        if closed != rows:
            raise ValueError("relation is not transitively closed")

    @staticmethod
    def from_rows(n: int, rows: Sequence[int]) -> "Preorder":
        """Build from row masks; reflexivity is added and closure applied."""
        work = [rows[a] | (1 << a) for a in range(n)]
        close_rows(work)
        bits = 0
        for a in range(n):
            bits |= work[a] << (a * n)
        return Preorder(n, bits)

    @staticmethod
    def from_pairs(n: int, pairs) -> "Preorder":
        """Build from 1-based (a, b) pairs meaning a is below b."""
        rows = [0] * n
        for a, b in pairs:
            rows[a - 1] |= 1 << (b - 1)
        return Preorder.from_rows(n, rows)

    @staticmethod
    def discrete(n: int) -> "Preorder":
        """Equality only: the minimal element of the lattice."""
        return Preorder.from_rows(n, [0] * n)

    @staticmethod
    def complete(n: int) -> "Preorder":
        """Everything mutually comparable: the maximal element."""
        full = (1 << n) - 1
        return Preorder.from_rows(n, [full] * n)

    def rows(self) -> list[int]:
        mask = (1 << self.n) - 1
        return [(self.bits >> (a * self.n)) & mask for a in range(self.n)]

    def leq(self, a: int, b: int) -> bool:
        """a below b (1-based values)."""
        return bool(self.bits >> ((a - 1) * self.n + (b - 1)) & 1)

    def equiv(self, a: int, b: int) -> bool:
        return self.leq(a, b) and self.leq(b, a)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All related pairs (a, b), a != b, 1-based."""
        for a in range(1, self.n + 1):
            for b in range(1, self.n + 1):
                if a != b and self.leq(a, b):
                    yield (a, b)

    # Containment of relations is the lattice order on these objects.
    def __le__(self, other: "Preorder") -> bool:
        if self.n != other.n:
            return NotImplemented
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "Preorder") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "Preorder") -> bool:
        return other.__le__(self)

    def __gt__(self, other: "Preorder") -> bool:
        return other.__lt__(self)


@dataclass(frozen=True)
class Block:
    """An equivalence class of mutual comparability, labeled [min, max]."""

    min: int
    max: int
    members: frozenset[int]

    @classmethod
    def of(cls, members) -> "Block":
        members = frozenset(members)
        return cls(min(members), max(members), members)

    @property
    def interval(self) -> tuple[int, int]:
        return (self.min, self.max)

    def overlaps(self, other: "Block") -> bool:
        return self.min <= other.max and other.min <= self.max

    def sort_key(self):
        return (self.min, self.max, tuple(sorted(self.members)))

    def __repr__(self):
        return f"B[{self.min},{self.max}]{{{','.join(map(str, sorted(self.members)))}}}"


@lru_cache(maxsize=None)
def blocks(q: Preorder) -> tuple[Block, ...]:
    """Blocks of q, sorted by minimal member."""
    rows = q.rows()
    out = []
    seen = 0
    for a in range(q.n):
        if seen >> a & 1:
            continue
        members = [b + 1 for b in range(q.n) if rows[a] >> b & 1 and rows[b] >> a & 1]
        for m in members:
            seen |= 1 << (m - 1)
        out.append(Block.of(members))
    out.sort(key=Block.sort_key)
    return tuple(out)


def block_of(q: Preorder, value: int) -> Block:
    for b in blocks(q):
        if value in b.members:
            return b
    raise ValueError(f"{value} not in [1,{q.n}]")


@dataclass(frozen=True)
class BlockOrder:
    """The partial order induced on blocks, with its cover relation.

    ``less`` and ``covers`` hold index pairs into ``blocks`` (strict order).
    """

    blocks: tuple[Block, ...]
    less: frozenset[tuple[int, int]]
    covers: frozenset[tuple[int, int]]

    def index(self, block: Block) -> int:
        return self.blocks.index(block)

    def comparable(self, i: int, j: int) -> bool:
        return (i, j) in self.less or (j, i) in self.less


@lru_cache(maxsize=None)
def block_order(q: Preorder) -> BlockOrder:
    bs = blocks(q)
    m = len(bs)
    reps = [next(iter(b.members)) for b in bs]
    less = frozenset(
        (i, j)
        for i in range(m)
        for j in range(m)
        if i != j and q.leq(reps[i], reps[j])
    )
    covers = frozenset(
        (i, j)
        for (i, j) in less
        if not any((i, k) in less and (k, j) in less for k in range(m))
    )
    return BlockOrder(bs, less, covers)


@dataclass(frozen=True)
class Violation:
    """One failed axiom, with the offending block pair."""

    axiom: str  # "P1" or "P2"
    first: Block
    second: Block

    def __str__(self):
        reason = "overlap but are incomparable" if self.axiom == "P1" else "form a cover but do not overlap"
        return f"{self.axiom}: blocks {self.first} and {self.second} {reason}"


def axiom_violations(q: Preorder) -> list[Violation]:
    """All (P1)/(P2) failures; empty list means q is a lattice element."""
    bo = block_order(q)
    out = []
    m = len(bo.blocks)
    for i in range(m):
        for j in range(i + 1, m):
            if bo.blocks[i].overlaps(bo.blocks[j]) and not bo.comparable(i, j):
                out.append(Violation("P1", bo.blocks[i], bo.blocks[j]))
    for (i, j) in sorted(bo.covers):
        if not bo.blocks[i].overlaps(bo.blocks[j]):
            out.append(Violation("P2", bo.blocks[i], bo.blocks[j]))
    return out


def is_permutation_preorder(q: Preorder) -> bool:
    return not axiom_violations(q)


def require_permutation_preorder(q: Preorder) -> Preorder:
    bad = axiom_violations(q)
    if bad:
        raise InvalidPreorderError("; ".join(str(v) for v in bad))
    return q


@lru_cache(maxsize=None)
def mu(p: Permutation) -> Preorder:
    """Pre-order of a permutation: runs are blocks, overlaps order them.

    Of two distinct runs with intersecting value intervals, the one further
    right in the word gives the greater block; the relation is the
    transitive closure of these generators.
    """
    n = p.n
    runs = descending_runs(p)
    rows = [0] * n
    for run in runs:
        mask = 0
        for v in run.values:
            mask |= 1 << (v - 1)
        for v in run.values:
            rows[v - 1] |= mask
    for left_i in range(len(runs)):
        for right_i in range(left_i + 1, len(runs)):
            left, right = runs[left_i], runs[right_i]
            if left.min <= right.max and right.min <= left.max:
                target = 0
                for v in right.values:
                    target |= 1 << (v - 1)
                for v in left.values:
                    rows[v - 1] |= target
    return Preorder.from_rows(n, rows)


@lru_cache(maxsize=None)
def ordered_blocks(q: Preorder) -> tuple[Block, ...]:
    """Blocks in the left-to-right order their runs take in lam(q).

    Comparable blocks follow the block order; incomparable blocks (whose
    intervals are disjoint, by (P1)) follow numeric interval position.  The
    resulting tournament is a total order for every valid element; this is
    checked and a failure raises rather than returning a bogus word.
    """
    bo = block_order(q)
    m = len(bo.blocks)

    def before(i: int, j: int) -> bool:
        if (i, j) in bo.less:
            return True
        if (j, i) in bo.less:
            return False
        return bo.blocks[i].max < bo.blocks[j].min

    order = sorted(range(m), key=lambda i: sum(before(j, i) for j in range(m)))
    for x in range(m):
        for y in range(x + 1, m):
            if not before(order[x], order[y]):
                raise InvalidPreorderError(
                    f"blocks of {q} are not totally orderable: "
                    f"{bo.blocks[order[x]]} vs {bo.blocks[order[y]]}"
                )
    return tuple(bo.blocks[i] for i in order)


def lam(q: Preorder) -> Permutation:
    """Inverse of mu: each block becomes a descending run.

    Raises InvalidPreorderError if q fails (P1)/(P2).
    """
    require_permutation_preorder(q)
    word = []
    for block in ordered_blocks(q):
        word.extend(sorted(block.members, reverse=True))
    return Permutation(tuple(word))


def placements(q: Preorder) -> dict[Block, int]:
    """1-based position of each block's run in lam(q), left to right."""
    require_permutation_preorder(q)
    return {block: i for i, block in enumerate(ordered_blocks(q), start=1)}


def preorder_to_json(q: Preorder) -> dict:
    """JSON form: blocks plus the cover pairs of the block order."""
    obs = ordered_blocks(q)
    index = {b: i for i, b in enumerate(obs)}
    bo = block_order(q)
    less = sorted(
        (index[bo.blocks[i]], index[bo.blocks[j]]) for (i, j) in bo.covers
    )
    return {
        "n": q.n,
        "blocks": [sorted(b.members) for b in obs],
        "less": [list(pair) for pair in less],
    }


def preorder_from_json(data: dict) -> Preorder:
    """Rebuild a pre-order from its JSON form and validate (P1)/(P2)."""
    n = data["n"]
    raw_blocks = [list(b) for b in data["blocks"]]
    seen = set()
    for b in raw_blocks:
        if not b:
            raise ValueError("empty block")
        seen.update(b)
    if seen != set(range(1, n + 1)) or sum(len(b) for b in raw_blocks) != n:
        raise ValueError(f"blocks do not partition [1,{n}]")
    pairs = []
    for b in raw_blocks:
        pairs.extend((x, y) for x in b for y in b)
    for i, j in data.get("less", []):
        pairs.extend((x, y) for x in raw_blocks[i] for y in raw_blocks[j])
    q = Preorder.from_pairs(n, pairs)
    if [sorted(b.members) for b in blocks(q)] != sorted(
        (sorted(b) for b in raw_blocks)
    ):
        raise ValueError("order relations collapse the given blocks")
    return require_permutation_preorder(q)
