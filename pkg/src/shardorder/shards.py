"""
Shards of the braid arrangement, kept purely combinatorial.

The hyperplane H_ij (i < j) splits into 2^(j-i-1) shards, one per sign
choice eps_k for each k strictly between i and j: the shard is the cone

    x_i = x_j,   eps_k * x_i <= eps_k * x_k   for i < k < j.

Only the index/sign data is stored; no floating-point geometry is needed
for anything downstream.  Intersections are unions of these constraints
followed by transitive closure, with equalities read off from two-sided
inequalities.

Text form is "H(i,j)[+-...]" with one sign per k = i+1 .. j-1.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .perms import Permutation
from .preorders import Preorder, close_rows


@dataclass(frozen=True)
class Shard:
    n: int
    i: int
    j: int
    eps: tuple[int, ...]  # +1 / -1 for k = i+1 .. j-1

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.n:
            raise ValueError(f"need 1 <= i < j <= n, got i={self.i} j={self.j} n={self.n}")
        if len(self.eps) != self.j - self.i - 1:
            raise ValueError("one sign required per index strictly between i and j")
        if any(e not in (1, -1) for e in self.eps):
            raise ValueError("signs must be +1 or -1")

    def sign(self, k: int) -> int:
        if not self.i < k < self.j:
            raise ValueError(f"{k} is not strictly between {self.i} and {self.j}")
        return self.eps[k - self.i - 1]

    def __str__(self):
        signs = "".join("+" if e > 0 else "-" for e in self.eps)
        return f"H({self.i},{self.j})[{signs}]"


_SHARD_RE = re.compile(r"H\((\d+),(\d+)\)\[([+-]*)\]")


def parse_shard(text: str, n: int) -> Shard:
    m = _SHARD_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"cannot parse shard from {text!r}")
    i, j = int(m.group(1)), int(m.group(2))
    eps = tuple(1 if ch == "+" else -1 for ch in m.group(3))
    return Shard(n, i, j, eps)


def enumerate_shards(n: int) -> list[Shard]:
    """All shards of the arrangement on [n]; 2^(j-i-1) per hyperplane."""
    if n < 2:
        return []
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for eps in itertools.product((1, -1), repeat=j - i - 1):
                out.append(Shard(n, i, j, eps))
    return out


def lower_shards(p: Permutation) -> list[Shard]:
    """The shards below a permutation's region, one per descent.

    A descent ji (j > i adjacent in the word) selects the shard of H_ij on
    the same side as the region of every cutting hyperplane: eps_k is -1
    exactly when (k, i) is an inversion of the word, i.e. when k appears
    before i.
    """
    w = p.word
    pos = {v: idx for idx, v in enumerate(w)}
    out = []
    for idx in range(p.n - 1):
        if w[idx] > w[idx + 1]:
            j, i = w[idx], w[idx + 1]
            eps = tuple(
                -1 if pos[k] < pos[i] else 1 for k in range(i + 1, j)
            )
            out.append(Shard(p.n, i, j, eps))
    return out


@dataclass(frozen=True)
class ShardIntersection:
    """Closed constraint set of an intersection of shards.

    ``equalities`` holds unordered pairs {a, b} with x_a = x_b derivable;
    ``inequalities`` holds the strict one-way pairs (a, b) meaning
    x_a <= x_b.  Closure is applied on construction, so equal intersections
    compare equal as values.
    """

    n: int
    equalities: frozenset[frozenset[int]]
    inequalities: frozenset[tuple[int, int]]


def intersect(shards, n: int | None = None) -> ShardIntersection:
    """Union the constraints of the given shards and close them.

    The empty intersection is the whole space and needs an explicit n.
    """
    shards = list(shards)
    if shards:
        sizes = {s.n for s in shards}
        if len(sizes) != 1:
            raise ValueError(f"shards live on different ground sets: {sorted(sizes)}")
        if n is not None and n != shards[0].n:
            raise ValueError("explicit n disagrees with the shards")
        n = shards[0].n
    elif n is None:
        raise ValueError("empty intersection needs an explicit n")

    rows = [1 << a for a in range(n)]
    for s in shards:
        rows[s.i - 1] |= 1 << (s.j - 1)
        rows[s.j - 1] |= 1 << (s.i - 1)
        for k in range(s.i + 1, s.j):
            if s.sign(k) > 0:  # x_i <= x_k
                rows[s.i - 1] |= 1 << (k - 1)
            else:  # x_k <= x_i
                rows[k - 1] |= 1 << (s.i - 1)
    close_rows(rows)

    eqs = set()
    ineqs = set()
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b or not rows[a - 1] >> (b - 1) & 1:
                continue
            if rows[b - 1] >> (a - 1) & 1:
                eqs.add(frozenset((a, b)))
            else:
                ineqs.add((a, b))
    return ShardIntersection(n, frozenset(eqs), frozenset(ineqs))


def to_preorder(g: ShardIntersection) -> Preorder:
    """Read the index relation off the constraints: a below b iff x_a <= x_b."""
    pairs = list(g.inequalities)
    for eq in g.equalities:
        a, b = sorted(eq)
        pairs.append((a, b))
        pairs.append((b, a))
    return Preorder.from_pairs(g.n, pairs)
