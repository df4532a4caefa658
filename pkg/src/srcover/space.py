"""The sum-rank ambient space F_q^{(m,m),...,(m,m)}: block vectors, ranks and balls.

A block (an m x m matrix over GF(q)) is encoded as the integer
``sum_{r,c} entry[r, c] * q**(r*m + c)``, and a point of the space as
``sum_j block_j * Q**j`` with ``Q = q**(m*m)``.  Packing is base-p digitwise, so the
difference of two points is carry-free digit arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
import itertools
from typing import Iterator

import numpy as np

from .galois import FieldSpec, digit_add, digit_neg, field_make
from .linalg import GuardError, rank

__all__ = [
    "SpaceSpec",
    "BlockVector",
    "mat_rank",
    "sr_weight",
    "sr_distance",
    "rank_distribution",
    "rank_distribution_enumerated",
    "ball_volume",
    "enumerate_ball",
    "ball_offsets",
    "space_make",
]

ENUM_GUARD = 1 << 24


def mat_rank(M, field: FieldSpec | None = None) -> int:
    """Rank of a matrix over ``field`` (GF(2) by default)."""
    field = field or field_make(2)
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return rank(M, field)


@dataclass(frozen=True)
class SpaceSpec:
    field: FieldSpec
    m: int
    t: int

    def __post_init__(self):
        if self.m < 1 or self.t < 1:
            raise ValueError("matrix side m and block length t must be positive")

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def block_count(self) -> int:
        """Q = q^(m^2), the number of m x m matrices."""
        return self.q ** (self.m * self.m)

    @property
    def size(self) -> int:
        return self.block_count**self.t

    @property
    def max_weight(self) -> int:
        return self.m * self.t

    @property
    def ndigits(self) -> int:
        """Base-p digits in a packed point."""
        return self.field.k * self.m * self.m * self.t

    @property
    def block_digits(self) -> int:
        return self.field.k * self.m * self.m

    def with_t(self, t: int) -> "SpaceSpec":
        return SpaceSpec(self.field, self.m, t)

    @cached_property
    def rank_table(self) -> np.ndarray:
        return _rank_table(self.field, self.m)

    @cached_property
    def rank_one_blocks(self) -> np.ndarray:
        return np.nonzero(self.rank_table == 1)[0].astype(np.int64)

    def block_of(self, x, j: int):
        return (np.asarray(x, dtype=np.int64) // (self.block_count**j)) % self.block_count

    def weight(self, x) -> np.ndarray:
        """Sum-rank weight of packed points (vectorised)."""
        x = np.asarray(x, dtype=np.int64)
        Q = self.block_count
        w = np.zeros(x.shape, dtype=np.int64)
        rest = x.copy()
        for _ in range(self.t):
            w += self.rank_table[rest % Q]
            rest //= Q
        return w

    def add(self, a, b):
        return digit_add(a, b, self.p, self.ndigits)

    def sub(self, a, b):
        return digit_add(a, digit_neg(b, self.p, self.ndigits), self.p, self.ndigits)

    def neg(self, a):
        return digit_neg(a, self.p, self.ndigits)

    def rank_one_generators(self) -> np.ndarray:
        """Every rank-1 matrix placed in a single block, packed."""
        Q = self.block_count
        blocks = self.rank_one_blocks
        return np.concatenate([blocks * Q**j for j in range(self.t)])

    def zero(self) -> "BlockVector":
        return BlockVector(self, np.zeros((self.t, self.m, self.m), dtype=np.int64))

    def check_packable(self):
        if self.size > 1 << 62:
            raise GuardError(f"space of size q^(m^2 t) = {self.q}^{self.m * self.m * self.t} does not fit 64-bit packing")

    def __str__(self):
        return f"F_{self.q}^(({self.m},{self.m}) x {self.t})"


def space_make(q: int, m: int, t: int) -> SpaceSpec:
    """SpaceSpec over GF(q) for a prime power q given as an integer."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    k = 0
    v = q
    while v % p == 0:
        v //= p
        k += 1
    if v != 1:
        raise ValueError(f"{q} is not a prime power")
    return SpaceSpec(field_make(p, k), m, t)


@lru_cache(maxsize=None)
def _rank_table(field: FieldSpec, m: int) -> np.ndarray:
    q = field.order
    Q = q ** (m * m)
    if Q > 1 << 20:
        raise GuardError(f"rank table for {m}x{m} matrices over GF({q}) exceeds 2^20 entries")
    if q == 2:
        return _rank_table_gf2(m)
    out = np.empty(Q, dtype=np.int64)
    for b in range(Q):
        out[b] = rank(_block_matrix(b, q, m), field)
    return out


def _rank_table_gf2(m):
    # rows as m-bit integers, xor elimination
    Q = 1 << (m * m)
    out = np.empty(Q, dtype=np.int64)
    mask = (1 << m) - 1
    for b in range(Q):
        rows = [(b >> (r * m)) & mask for r in range(m)]
        rk = 0
        for col in range(m):
            piv = next((i for i in range(rk, m) if (rows[i] >> col) & 1), None)
            if piv is None:
                continue
            rows[rk], rows[piv] = rows[piv], rows[rk]
            for i in range(m):
                if i != rk and (rows[i] >> col) & 1:
                    rows[i] ^= rows[rk]
            rk += 1
        out[b] = rk
    return out


def _block_matrix(b: int, q: int, m: int) -> np.ndarray:
    M = np.empty((m, m), dtype=np.int64)
    for r in range(m):
        for c in range(m):
            M[r, c] = b % q
            b //= q
    return M


def _matrix_block(M, q: int) -> int:
    M = np.asarray(M, dtype=np.int64)
    m = M.shape[0]
    v = 0
    for r in reversed(range(m)):
        for c in reversed(range(m)):
            v = v * q + int(M[r, c])
    return v


class BlockVector:
    """A point of the sum-rank space: t matrices of size m x m over GF(q)."""

    __slots__ = ("space", "blocks")

    def __init__(self, space: SpaceSpec, blocks):
        blocks = np.asarray(blocks, dtype=np.int64)
        if blocks.shape != (space.t, space.m, space.m):
            raise ValueError(f"expected {space.t} blocks of shape {space.m}x{space.m}, got {blocks.shape}")
        if blocks.size and (blocks.min() < 0 or blocks.max() >= space.q):
            raise ValueError("matrix entries must be GF(q) element codes")
        self.space = space
        self.blocks = blocks

    @classmethod
    def from_int(cls, space: SpaceSpec, x: int) -> "BlockVector":
        Q, q, m = space.block_count, space.q, space.m
        x = int(x)
        blocks = []
        for _ in range(space.t):
            blocks.append(_block_matrix(x % Q, q, m))
            x //= Q
        return cls(space, np.stack(blocks))

    def to_int(self) -> int:
        Q, q = self.space.block_count, self.space.q
        v = 0
        for B in reversed(self.blocks):
            v = v * Q + _matrix_block(B, q)
        return v

    def _same(self, other: "BlockVector"):
        if not isinstance(other, BlockVector):
            return NotImplemented
        if other.space != self.space:
            raise ValueError(f"block vectors live in different spaces: {self.space} vs {other.space}")

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        add = self.space.field.add_table
        return BlockVector(self.space, add[self.blocks, other.blocks])

    def __neg__(self):
        return BlockVector(self.space, self.space.field.neg_table[self.blocks])

    def __sub__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, BlockVector) and other.space == self.space and np.array_equal(self.blocks, other.blocks)
        )

    def __hash__(self):
        return hash((self.space, self.blocks.tobytes()))

    def weight(self) -> int:
        return sum(mat_rank(B, self.space.field) for B in self.blocks)

    def is_zero(self) -> bool:
        return not self.blocks.any()

    def to_text(self) -> str:
        f = self.space.field
        return "|".join(";".join(",".join(f.element_str(int(v)) for v in row) for row in B) for B in self.blocks)

    @classmethod
    def from_text(cls, space: SpaceSpec, text: str) -> "BlockVector":
        f = space.field
        blocks = []
        for part in text.strip().split("|"):
            rows = [[f.parse_element(e) for e in row.split(",")] for row in part.split(";")]
            blocks.append(rows)
        return cls(space, blocks)

    def __repr__(self):
        return f"BlockVector({self.to_text()})"


def sr_weight(x: BlockVector) -> int:
    return x.weight()


def sr_distance(x: BlockVector, y: BlockVector) -> int:
    return (x - y).weight()


def rank_distribution(q: int, m: int) -> list[int]:
    """Number of m x m matrices over GF(q) of each rank r = 0..m (closed form)."""
    out = []
    for r in range(m + 1):
        num = 1
        for i in range(r):
            num *= (q**m - q**i) ** 2
        den = 1
        for i in range(r):
            den *= q**r - q**i
        out.append(num // den)
    return out


def rank_distribution_enumerated(field: FieldSpec, m: int) -> list[int]:
    """Rank counts by ranking every matrix; independent of the closed form."""
    Q = field.order ** (m * m)
    if Q > ENUM_GUARD:
        raise GuardError(f"{Q} matrices exceed enumeration guard")
    counts = [0] * (m + 1)
    for b in range(Q):
        counts[mat_rank(_block_matrix(b, field.order, m), field)] += 1
    return counts


def _volumes(q: int, m: int, t: int) -> list[int]:
    """Exact counts of points of each sum-rank weight 0..m*t."""
    single = rank_distribution(q, m)
    dist = [1]
    for _ in range(t):
        new = [0] * (len(dist) + m)
        for w, a in enumerate(dist):
            if a:
                for r, b in enumerate(single):
                    new[w + r] += a * b
        dist = new
    return dist


def ball_volume(spec, r: int) -> int:
    """Number of points within sum-rank distance r of any fixed center.

    ``spec`` is a :class:`SpaceSpec` or a ``(q, m, t)`` tuple.
    """
    q, m, t = (spec.q, spec.m, spec.t) if isinstance(spec, SpaceSpec) else spec
    if not 0 <= r <= m * t:
        raise ValueError(f"radius {r} outside 0..{m * t}")
    return sum(_volumes(q, m, t)[: r + 1])


def _rank_patterns(t: int, m: int, r: int):
    for pat in itertools.product(range(m + 1), repeat=t):
        if sum(pat) <= r:
            yield pat


def ball_offsets(space: SpaceSpec, r: int, guard: int = ENUM_GUARD) -> np.ndarray:
    """All packed points of sum-rank weight <= r, in the documented enumeration order."""
    vol = ball_volume(space, r)
    if vol > guard:
        raise GuardError(f"ball volume {vol} exceeds guard {guard}")
    space.check_packable()
    Q = space.block_count
    by_rank = [np.nonzero(space.rank_table == k)[0].astype(np.int64) for k in range(space.m + 1)]
    parts = []
    for pat in _rank_patterns(space.t, space.m, r):
        acc = np.zeros(1, dtype=np.int64)
        # block 0 varies slowest
        for j, k in enumerate(pat):
            acc = (acc[:, None] + by_rank[k][None, :] * Q**j).ravel()
        parts.append(acc)
    return np.concatenate(parts)


def enumerate_ball(center: BlockVector, r: int, guard: int = ENUM_GUARD) -> Iterator[BlockVector]:
    """Stream the sum-rank ball of radius r around ``center``.

    Order: rank patterns lexicographically, then block 0 slowest, matrices by encoding.
    """
    space = center.space
    offsets = ball_offsets(space, r, guard)
    c = center.to_int()
    for off in offsets:
        yield BlockVector.from_int(space, int(space.add(np.int64(c), off)))
