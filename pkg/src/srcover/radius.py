"""Covering radius and list-size computations for sum-rank codes.

Sum-rank weight is the least number of rank-1 single-block summands, so distance to a code
is a breadth-first search in the Cayley graph of the ambient space generated by rank-1
blocks, started from every codeword at once.  For additive codes the same search runs on
syndromes instead, and the deepest syndrome gives the radius.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .construct import MATERIALIZE_GUARD, SumRankCode
from .galois import digit_add, digit_neg
from .linalg import GuardError, cayley_bfs, pack, unpack
from .space import BlockVector, ball_offsets, ball_volume

__all__ = [
    "AMBIENT_GUARD",
    "RadiusReport",
    "CensusReport",
    "VerifyReport",
    "distance_to_code",
    "sr_radius_exact",
    "sr_radius_probe",
    "list_census",
    "verify_construction",
]

AMBIENT_GUARD = 1 << 24
SCAN_GUARD = 1 << 32  # ambient points times codewords for the brute-force oracle
CENSUS_GUARD = 1 << 27


@dataclass
class RadiusReport:
    exact: int | None
    lower_estimate: int
    claimed: int | None
    method: str
    probes: int = 0
    seed: int | None = None
    witness: int | None = None
    space: object = field(default=None, repr=False)

    @property
    def consistent(self) -> bool:
        """False when the computed radius exceeds the claim."""
        known = self.exact if self.exact is not None else self.lower_estimate
        return self.claimed is None or known <= self.claimed

    def to_text(self) -> str:
        rows = [
            ("method", self.method),
            ("exact", "" if self.exact is None else self.exact),
            ("lower_estimate", self.lower_estimate),
            ("claimed", "" if self.claimed is None else self.claimed),
            ("probes", self.probes),
            ("seed", "" if self.seed is None else self.seed),
        ]
        if self.witness is not None and self.space is not None:
            rows.append(("witness", BlockVector.from_int(self.space, self.witness).to_text()))
        return "\n".join(f"{k}={v}" for k, v in rows)


@dataclass
class CensusReport:
    d: int
    L_max: int
    center: int
    space: object = field(default=None, repr=False)

    def to_text(self) -> str:
        c = BlockVector.from_int(self.space, self.center).to_text() if self.space is not None else self.center
        return f"d={self.d}\nL_max={self.L_max}\ncenter={c}"


@dataclass
class VerifyReport:
    status: str
    radius: RadiusReport
    claim_kind: str
    witness_distance: int | None = None

    @property
    def ok(self) -> bool:
        return self.status == "PASS"

    def to_text(self) -> str:
        lines = [f"status={self.status}", f"claim={self.claim_kind}", self.radius.to_text()]
        if self.witness_distance is not None:
            lines.append(f"witness_distance={self.witness_distance}")
        return "\n".join(lines)


def _check_ambient(C: SumRankCode, guard: int):
    if C.space.size > guard:
        raise GuardError(f"ambient space has {C.space.size} points, guard is {guard}")


def _syndrome_setup(C: SumRankCode, guard: int):
    """Parity-check rows over GF(p) and the packed syndromes of every rank-1 generator."""
    if not C.is_linear:
        raise ValueError("coset path needs a code closed under addition")
    sp = C.space
    H = C.parity_check()
    r = H.shape[0]
    if sp.p**r > guard:
        raise GuardError(f"{sp.p}^{r} syndromes exceed guard {guard}")
    gens = sp.rank_one_generators()
    syn = pack((unpack(gens, sp.p, sp.ndigits) @ H.T) % sp.p, sp.p)
    return H, syn, gens


def syndrome(C: SumRankCode, x, H=None) -> np.ndarray:
    sp = C.space
    H = C.parity_check() if H is None else H
    return pack((unpack(np.atleast_1d(x), sp.p, sp.ndigits) @ H.T) % sp.p, sp.p)


def _coset_exact(C: SumRankCode, guard: int):
    H, syn, gens = _syndrome_setup(C, guard)
    sp = C.space
    r = H.shape[0]
    if r == 0:
        return 0, 0
    dist, via = cayley_bfs(sp.p**r, sp.p, r, [0], syn, track=True)
    deep = int(np.argmax(dist))
    R = int(dist[deep])
    # walk back to 0, summing the generators used: the sum is a coset leader
    leader, s = 0, deep
    for _ in range(R):
        g = int(via[s])
        leader = int(sp.add(np.int64(leader), gens[g]))
        s = int(_digit_sub(s, int(syn[g]), sp.p, r))
    return R, leader


def _digit_sub(a: int, b: int, p: int, n: int) -> int:
    return int(digit_add(np.int64(a), digit_neg(np.int64(b), p, n), p, n))


def _exhaustive(C: SumRankCode, guard: int):
    _check_ambient(C, guard)
    sp = C.space
    dist = cayley_bfs(sp.size, sp.p, sp.ndigits, C.materialize(), sp.rank_one_generators())
    deep = int(np.argmax(dist))
    return int(dist[deep]), deep


def _scan_chunk(sp, words, lo, hi):
    xs = np.arange(lo, hi, dtype=np.int64)
    best = np.full(xs.size, sp.max_weight, dtype=np.int64)
    for c in words:
        np.minimum(best, sp.weight(sp.sub(xs, c)), out=best)
    i = int(np.argmax(best))
    return int(best[i]), int(xs[i])


def _scan(C: SumRankCode, threads: int = 1):
    """Brute force: every ambient point against every codeword."""
    sp = C.space
    words = C.materialize()
    if sp.size * words.size > SCAN_GUARD:
        raise GuardError("brute-force scan too large")
    step = max(1, -(-sp.size // max(1, threads * 4)))
    ranges = [(lo, min(sp.size, lo + step)) for lo in range(0, sp.size, step)]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        parts = list(ex.map(lambda r: _scan_chunk(sp, words, *r), ranges))
    # first range holding the maximum, so the witness is independent of thread count
    R = max(p[0] for p in parts)
    return R, next(p[1] for p in parts if p[0] == R)


def sr_radius_exact(C: SumRankCode, method: str = "auto", guard: int = AMBIENT_GUARD, threads: int = 1) -> RadiusReport:
    """Exact covering radius.

    ``method``: ``exhaustive`` (search over the ambient space from all codewords),
    ``coset`` (deepest syndrome, additive codes only), ``scan`` (brute force) or ``auto``.
    """
    if method == "auto":
        if C.is_linear:
            try:
                _syndrome_setup(C, guard)
                method = "coset"
            except GuardError:
                method = "exhaustive"
        else:
            method = "exhaustive"
    if method == "coset":
        R, w = _coset_exact(C, guard)
    elif method == "exhaustive":
        R, w = _exhaustive(C, guard)
    elif method == "scan":
        R, w = _scan(C, threads)
    else:
        raise ValueError(f"unknown method {method!r}")
    return RadiusReport(R, R, C.claimed_radius, method, witness=w, space=C.space)


def distance_to_code(C: SumRankCode, xs, table=None) -> np.ndarray:
    """Sum-rank distance from each packed point in ``xs`` to the code."""
    sp = C.space
    xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
    if table is not None:
        H, dist = table
        return dist[syndrome(C, xs, H)].astype(np.int64)
    words = C.materialize()
    best = np.full(xs.size, sp.max_weight, dtype=np.int64)
    for c in words:
        np.minimum(best, sp.weight(sp.sub(xs, c)), out=best)
    return best


def _coset_table(C: SumRankCode, guard: int):
    H, syn, _ = _syndrome_setup(C, guard)
    r = H.shape[0]
    if r == 0:
        return H, np.zeros(1, dtype=np.int16)
    return H, cayley_bfs(C.space.p**r, C.space.p, r, [0], syn)


def sr_radius_probe(C: SumRankCode, samples: int, seed: int = 0, guard: int = AMBIENT_GUARD) -> RadiusReport:
    """Lower estimate of the radius from uniformly random points (entries drawn independently)."""
    if samples < 1:
        raise ValueError("need at least one sample")
    sp = C.space
    rng = np.random.default_rng(seed)
    digits = rng.integers(0, sp.p, size=(samples, sp.ndigits), dtype=np.int64)
    xs = pack(digits, sp.p)
    table = None
    if C.size > min(MATERIALIZE_GUARD, 1 << 16) and C.is_linear:
        table = _coset_table(C, guard)
    d = distance_to_code(C, xs, table)
    i = int(np.argmax(d))
    return RadiusReport(None, int(d[i]), C.claimed_radius, "monte-carlo", samples, seed, int(xs[i]), sp)


def list_census(C: SumRankCode, d: int, guard: int = CENSUS_GUARD) -> CensusReport:
    """Largest number of codewords in a radius-d ball, with a center attaining it."""
    sp = C.space
    _check_ambient(C, AMBIENT_GUARD)
    vol = ball_volume(sp, d)
    if vol * C.size > guard:
        raise GuardError(f"census needs {vol * C.size} ball visits, guard is {guard}")
    offs = ball_offsets(sp, d)
    counts = np.zeros(sp.size, dtype=np.int64)
    for c in C.materialize():
        counts += np.bincount(sp.add(np.int64(c), offs), minlength=sp.size)
    center = int(np.argmax(counts))
    return CensusReport(d, int(counts[center]), center, sp)


def verify_construction(C: SumRankCode, samples: int = 2000, seed: int = 0, guard: int = AMBIENT_GUARD,
                        threads: int = 1) -> VerifyReport:
    """Compare the computed radius with the code's claim; FAIL carries a far-away point."""
    try:
        rep = sr_radius_exact(C, guard=guard, threads=threads)
    except GuardError:
        rep = sr_radius_probe(C, samples, seed, guard)
    status = "PASS" if rep.consistent else "FAIL"
    wd = None
    if status == "FAIL" and rep.witness is not None:
        # recheck the witness independently of the engine that found it
        wd = int(distance_to_code(C, [rep.witness])[0]) if C.size <= MATERIALIZE_GUARD else None
    return VerifyReport(status, rep, C.claim_kind, wd)
