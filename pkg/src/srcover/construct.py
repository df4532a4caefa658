"""Sum-rank codes built from Hamming-metric codes over GF(q^m).

Two lifts are provided.  The row lift places the codeword of the i-th component in row i of
every block (so a block position where h components differ contributes rank at most h).
The linearized lift maps the coordinate tuple ``(c_0[j], ..., c_{m-1}[j])`` to the matrix of
``x -> sum_i c_i[j] x^(q^i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from functools import cached_property, reduce
from pathlib import Path

import numpy as np

from .galois import Tower, field_make, linearized_to_matrix, tower_for
from .hamming import HammingCode
from .linalg import GuardError, nullspace, rank, rref, unpack
from .space import BlockVector, SpaceSpec, _matrix_block

__all__ = [
    "SumRankCode",
    "embed_rows",
    "sr_covering_lift",
    "sr_linearized_lift",
    "pad",
    "whole_space_code",
    "zero_space_code",
    "read_srk",
    "write_srk",
]

MATERIALIZE_GUARD = 1 << 22


@dataclass(eq=False)
class SumRankCode:
    """A code in the sum-rank space.

    The core of the code lives on the first ``space.t - free_blocks`` blocks and is either an
    explicit list of packed points, a GF(p)-spanning set, or a product of Hamming codes
    under a lift.  The trailing ``free_blocks`` blocks are unrestricted (padding).
    """

    space: SpaceSpec
    points: np.ndarray | None = None
    generators: np.ndarray | None = None
    components: tuple[HammingCode, ...] = ()
    lift: str | None = None
    tower: Tower | None = None
    free_blocks: int = 0
    claimed_radius: int | None = None
    claim_kind: str = "asserted"
    provenance: str = ""
    claimed_min_distance: int | None = None
    _linear: bool | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        bodies = sum(x is not None for x in (self.points, self.generators)) + bool(self.components)
        if bodies != 1:
            raise ValueError("give exactly one of points, generators or components")
        self.space.check_packable()
        if self.points is not None:
            pts = np.asarray(self.points, dtype=np.int64).ravel()
            core = self.core_space.size
            if pts.size == 0 or pts.min() < 0 or pts.max() >= core:
                raise ValueError("points must be non-empty packed vectors of the core space")
            if np.unique(pts).size != pts.size:
                raise ValueError("codewords must be distinct")
            self.points = pts
        if self.generators is not None:
            self.generators = np.asarray(self.generators, dtype=np.int64).ravel()
            self._linear = True

    # structure ----------------------------------------------------------------------
    @property
    def core_space(self) -> SpaceSpec:
        return self.space.with_t(self.space.t - self.free_blocks)

    @property
    def core_size(self) -> int:
        if self.points is not None:
            return int(self.points.size)
        if self.generators is not None:
            return self.space.p ** self._gen_rank()
        return reduce(lambda a, b: a * b, (C.size for C in self.components), 1)

    @property
    def size(self) -> int:
        return self.core_size * self.space.block_count**self.free_blocks

    def _gen_rank(self) -> int:
        gens = self.generators
        if gens.size == 0:
            return 0
        sp = self.core_space
        return rank(unpack(gens, sp.p, sp.ndigits), field_make(sp.p))

    @property
    def is_linear(self) -> bool:
        """True when the code is an additive subgroup (a GF(p)-subspace)."""
        if self._linear is None:
            if self.components:
                self._linear = all(C.is_linear for C in self.components)
            else:
                sp = self.core_space
                pts = self.points
                if pts.size > 1 << 20:
                    self._linear = False
                else:
                    r = rank(unpack(pts, sp.p, sp.ndigits), field_make(sp.p)) if pts.any() else 0
                    self._linear = bool(np.any(pts == 0)) and sp.p**r == pts.size
        return self._linear

    def gf_p_generators(self) -> np.ndarray:
        """A GF(p)-spanning set of packed points (linear codes only)."""
        if not self.is_linear:
            raise ValueError("code is not linear over the prime field")
        sp = self.core_space
        if self.generators is not None:
            core = self.generators
        elif self.points is not None:
            core = self.points[self.points != 0]
        else:
            core = self._component_generators()
        Q = self.space.block_count
        free = [sp.p**d * Q**j for j in range(sp.t, self.space.t) for d in range(self.space.block_digits)]
        return np.concatenate([core, np.array(free, dtype=np.int64)]).astype(np.int64)

    def parity_check(self) -> np.ndarray:
        """Rows over GF(p) whose kernel is the code, in packed-digit coordinates."""
        gens = self.gf_p_generators()
        sp = self.space
        Fp = field_make(sp.p)
        if gens.size == 0:
            return np.eye(sp.ndigits, dtype=np.int64)
        return nullspace(unpack(gens, sp.p, sp.ndigits), Fp)

    def materialize(self, guard: int = MATERIALIZE_GUARD) -> np.ndarray:
        """All codewords, packed (deterministic order)."""
        if self.size > guard:
            raise GuardError(f"{self.size} codewords exceed materialization guard {guard}")
        if self.points is not None:
            core = self.points
        elif self.generators is not None:
            core = _span(self.generators, self.core_space)
        else:
            core = self._component_points()
        Q = self.space.block_count
        shift = Q ** self.core_space.t
        free = np.arange(Q**self.free_blocks, dtype=np.int64) * shift
        return (core[:, None] + free[None, :]).ravel()

    # product-structure helpers --------------------------------------------------------
    @cached_property
    def _slot_tables(self) -> list[np.ndarray]:
        """For slot i, table mapping an extension element to the packed block it produces."""
        tower, sp = self.tower, self.core_space
        q, m = sp.q, sp.m
        tabs = []
        for i in range(m):
            tab = np.zeros(tower.ext.order, dtype=np.int64)
            for a in range(tower.ext.order):
                if self.lift == "covering":
                    M = np.zeros((m, m), dtype=np.int64)
                    M[i] = tower.coords[a]
                else:
                    coeffs = [0] * m
                    coeffs[i] = a
                    M = linearized_to_matrix(coeffs, tower)
                tab[a] = _matrix_block(M, q)
            tabs.append(tab)
        return tabs

    def _encode_component(self, i: int, words: np.ndarray) -> np.ndarray:
        tab = self._slot_tables[i]
        Q = self.space.block_count
        weights = Q ** np.arange(words.shape[1], dtype=np.int64)
        return tab[words] @ weights

    def _component_points(self) -> np.ndarray:
        sp = self.core_space
        acc = np.zeros(1, dtype=np.int64)
        for i, C in enumerate(self.components):
            enc = self._encode_component(i, C.codewords())
            acc = sp.add(acc[:, None], enc[None, :]).ravel()
        return acc

    def _component_generators(self) -> np.ndarray:
        ext = self.tower.ext
        basis = [ext.p**d for d in range(ext.k)]  # GF(p)-basis of GF(q^m)
        mul = ext.mul_table
        out = []
        for i, C in enumerate(self.components):
            if C.dimension == 0:
                continue
            words = np.array([mul[b, g] for g in C.generator for b in basis], dtype=np.int64)
            out.append(self._encode_component(i, words))
        return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)

    def describe(self) -> str:
        if self.components:
            names = ", ".join(repr(C) for C in self.components)
            body = f"{self.lift} lift of ({names})"
        elif self.generators is not None:
            body = f"linear span of {self.generators.size} generators"
        else:
            body = f"explicit list of {self.points.size} words"
        if self.free_blocks:
            body += f" padded with {self.free_blocks} free blocks"
        return f"SumRankCode in {self.space}: {body}, size {self.size}"

    __repr__ = describe


def _span(gens, space: SpaceSpec) -> np.ndarray:
    gens = np.asarray(gens, dtype=np.int64)
    Fp = field_make(space.p)
    if gens.size:
        R, _ = rref(unpack(gens, space.p, space.ndigits), Fp)
    else:
        R = np.zeros((0, space.ndigits), dtype=np.int64)
    weights = space.p ** np.arange(space.ndigits, dtype=np.int64)
    basis = R @ weights
    if space.p ** len(basis) > MATERIALIZE_GUARD:
        raise GuardError("span too large to materialize")
    acc = np.zeros(1, dtype=np.int64)
    for b in basis:
        mults = [0]
        for a in range(1, space.p):
            mults.append(int(_scale(b, a, space)))
        acc = space.add(acc[:, None], np.array(mults, dtype=np.int64)[None, :]).ravel()
    return acc


def _scale(x: int, a: int, space: SpaceSpec) -> int:
    ds = unpack(np.array([x]), space.p, space.ndigits)[0]
    return int(((ds * a) % space.p) @ (space.p ** np.arange(space.ndigits, dtype=np.int64)))


def _check_components(codes) -> tuple[Tower, int]:
    codes = list(codes)
    if not codes:
        raise ValueError("need at least one component code")
    F = codes[0].field
    t = codes[0].length
    for C in codes:
        if C.field != F:
            raise ValueError(f"alphabet mismatch: {C.field!r} vs {F!r}")
        if C.length != t:
            raise ValueError(f"length mismatch: {C.length} vs {t}")
    m = len(codes)
    if F.k % m:
        raise ValueError(f"{len(codes)} components need an alphabet GF(q^{m}); got {F!r}")
    base = field_make(F.p, F.k // m)
    tower = tower_for(base, m) if F == field_make(F.p, F.k) else Tower(base, F)
    return tower, t


def _claims(codes):
    radii, kinds = [], []
    for C in codes:
        R, kind = C.known_radius()
        if R is None:
            raise ValueError(f"component {C!r} has no known or claimed covering radius")
        radii.append(R)
        kinds.append(kind)
    return radii, ("proof" if all(k == "exact" for k in kinds) else "claim-derived")


def embed_rows(words, tower: Tower) -> BlockVector:
    """Block j of the result has row i equal to the expansion of ``words[i][j]``."""
    words = [[w.value if hasattr(w, "value") else int(w) for w in word] for word in words]
    m = tower.m
    if len(words) != m:
        raise ValueError(f"expected {m} words, got {len(words)}")
    t = len(words[0])
    if any(len(w) != t for w in words):
        raise ValueError("words must share a length")
    blocks = np.zeros((t, m, m), dtype=np.int64)
    for i, w in enumerate(words):
        for j, a in enumerate(w):
            blocks[j, i] = tower.expand(a)
    return BlockVector(SpaceSpec(tower.base, m, t), blocks)


def sr_covering_lift(*codes: HammingCode) -> SumRankCode:
    """Row lift of m codes over GF(q^m); covering radius at most the sum of their radii."""
    tower, t = _check_components(codes)
    radii, kind = _claims(codes)
    return SumRankCode(
        SpaceSpec(tower.base, tower.m, t),
        components=tuple(codes),
        lift="covering",
        tower=tower,
        claimed_radius=sum(radii),
        claim_kind=kind,
        provenance="sr_covering_lift",
    )


def sr_linearized_lift(*codes: HammingCode) -> SumRankCode:
    """Linearized-polynomial lift; covering radius at most m times the sum of radii."""
    tower, t = _check_components(codes)
    radii, kind = _claims(codes)
    return SumRankCode(
        SpaceSpec(tower.base, tower.m, t),
        components=tuple(codes),
        lift="linearized",
        tower=tower,
        claimed_radius=tower.m * sum(radii),
        claim_kind=kind,
        provenance="sr_linearized_lift",
    )


def pad(C: SumRankCode, t_new: int) -> SumRankCode:
    """Append unrestricted blocks: same radius and codimension, size times Q^(t_new - t)."""
    if t_new < C.space.t:
        raise ValueError(f"cannot pad block length {C.space.t} down to {t_new}")
    if t_new == C.space.t:
        return C
    extra = t_new - C.space.t
    return replace(
        C,
        space=C.space.with_t(t_new),
        free_blocks=C.free_blocks + extra,
        provenance=f"pad({C.provenance},{t_new})",
    )


def whole_space_code(space: SpaceSpec) -> SumRankCode:
    one = space.with_t(1)
    gens = np.array([one.p**d for d in range(one.ndigits)], dtype=np.int64)
    C = SumRankCode(one, generators=gens, claimed_radius=0, claim_kind="proof", provenance="whole")
    return pad(C, space.t)


def zero_space_code(space: SpaceSpec) -> SumRankCode:
    return SumRankCode(
        space, points=np.zeros(1, dtype=np.int64), claimed_radius=space.max_weight, claim_kind="proof", provenance="zero"
    )


# -- file format ----------------------------------------------------------------------


def write_srk(C: SumRankCode, path, guard: int = MATERIALIZE_GUARD) -> None:
    """Header ``q m t size provenance claimed_radius`` as key=value tokens, then one
    block-vector text row per codeword."""
    pts = C.materialize(guard)
    sp = C.space
    header = (
        f"q={sp.q} m={sp.m} t={sp.t} size={C.size} provenance={C.provenance or 'unknown'} "
        f"claimed_radius={'' if C.claimed_radius is None else C.claimed_radius} claim={C.claim_kind}"
    )
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for x in pts:
            fh.write(BlockVector.from_int(sp, int(x)).to_text() + "\n")


def read_srk(path) -> SumRankCode:
    from .hamming import field_for_order

    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty code file")
    try:
        header = dict(tok.split("=", 1) for tok in lines[0].split())
        q, m, t, size = (int(header[k]) for k in ("q", "m", "t", "size"))
    except (KeyError, ValueError) as exc:
        raise ValueError(f"{path}:1: malformed header {lines[0]!r}") from exc
    space = SpaceSpec(field_for_order(q), m, t)
    pts = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            pts.append(BlockVector.from_text(space, ln).to_int())
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    if len(pts) != size:
        raise ValueError(f"{path}: header says {size} words, found {len(pts)}")
    claimed = header.get("claimed_radius") or None
    return SumRankCode(
        space,
        points=np.array(pts, dtype=np.int64),
        claimed_radius=None if claimed is None else int(claimed),
        claim_kind=header.get("claim", "asserted"),
        provenance=header.get("provenance", ""),
    )
