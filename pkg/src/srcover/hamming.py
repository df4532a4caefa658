"""Hamming-metric codes over GF(q'): covering radius, weights, Delsarte bound, BCH."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
import math

import numpy as np

from .galois import FieldSpec, Tower, field_make
from .linalg import GuardError, cayley_bfs, nullspace, pack, rref, unpack

__all__ = [
    "HammingCode",
    "CodeError",
    "covering_radius_exact",
    "coset_leader_weights",
    "weight_distribution",
    "delsarte_radius_bound",
    "scalar_extend",
    "bch_make",
    "repetition_code",
    "whole_space",
    "zero_code",
    "reed_solomon",
    "hamming_binary",
    "simplex_binary",
    "random_linear_code",
    "read_code",
    "write_code",
    "field_for_order",
]

SYNDROME_GUARD = 1 << 24
LIST_GUARD = 1 << 22
ENUM_GUARD = 1 << 24


class CodeError(ValueError):
    """Malformed code description or an operation the code does not support."""


def field_for_order(q: int) -> FieldSpec:
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = round(math.log(q, p))
    if p**k != q:
        raise CodeError(f"{q} is not a prime power")
    return field_make(p, k)


@dataclass(eq=False)
class HammingCode:
    """A length-t code over GF(q'), given by a generator matrix or an explicit word list.

    ``radius_claim`` is a literature or construction claim; ``exact_radius`` is filled in
    only by :func:`covering_radius_exact`.
    """

    field: FieldSpec
    length: int
    generator: np.ndarray | None = None
    words: np.ndarray | None = None
    radius_claim: int | None = None
    claim_source: str = ""
    name: str = ""
    meta: dict = dc_field(default_factory=dict)
    exact_radius: int | None = dc_field(default=None, init=False)

    def __post_init__(self):
        if (self.generator is None) == (self.words is None):
            raise CodeError("give exactly one of generator or words")
        q, t = self.field.order, self.length
        body = self.generator if self.generator is not None else self.words
        body = np.asarray(body, dtype=np.int64).reshape(-1, t)
        if body.size and (body.min() < 0 or body.max() >= q):
            raise CodeError(f"entries must be element codes of {self.field!r}")
        if self.generator is not None:
            if body.shape[0] and len(rref(body, self.field)[1]) != body.shape[0]:
                raise CodeError("generator rows are linearly dependent")
            self.generator = body
        else:
            if body.shape[0] == 0:
                raise CodeError("explicit code must be non-empty")
            if len(np.unique(pack(body, q))) != body.shape[0]:
                raise CodeError("explicit code words must be distinct")
            self.words = body

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def is_linear(self) -> bool:
        return self.generator is not None

    @property
    def dimension(self) -> int:
        if not self.is_linear:
            raise CodeError("dimension is defined for linear codes only")
        return self.generator.shape[0]

    @property
    def size(self) -> int:
        return self.q**self.dimension if self.is_linear else len(self.words)

    def codewords(self, guard: int = ENUM_GUARD) -> np.ndarray:
        if not self.is_linear:
            return self.words
        if self.size > guard:
            raise GuardError(f"{self.size} codewords exceed enumeration guard {guard}")
        k, t = self.dimension, self.length
        if k == 0:
            return np.zeros((1, t), dtype=np.int64)
        add, mul = self.field.add_table, self.field.mul_table
        msgs = unpack(np.arange(self.size, dtype=np.int64), self.q, k)
        out = np.zeros((self.size, t), dtype=np.int64)
        for i in range(k):
            out = add[out, mul[msgs[:, i, None], self.generator[i][None, :]]]
        return out

    def packed(self) -> np.ndarray:
        return pack(self.codewords(), self.q)

    def parity_check(self) -> np.ndarray:
        if not self.is_linear:
            raise CodeError("parity-check matrix needs a linear code")
        if self.dimension == 0:
            return np.eye(self.length, dtype=np.int64)
        return nullspace(self.generator, self.field)

    def dual(self) -> "HammingCode":
        return HammingCode(self.field, self.length, generator=self.parity_check(), name=f"dual({self.name})")

    def known_radius(self) -> tuple[int | None, str]:
        """Best available radius: exact if computed, else the claim."""
        if self.exact_radius is not None:
            return self.exact_radius, "exact"
        if self.radius_claim is not None:
            return self.radius_claim, "claim"
        return None, "unknown"

    def __repr__(self):
        kind = f"[{self.length},{self.dimension}]" if self.is_linear else f"({self.length},{self.size})"
        return f"HammingCode{kind}_{self.q}" + (f" {self.name}" if self.name else "")


def _unit_generators(q: int, length: int) -> np.ndarray:
    return np.array([a * q**j for j in range(length) for a in range(1, q)], dtype=np.int64)


def coset_leader_weights(C: HammingCode) -> np.ndarray:
    """Minimum weight in each coset, indexed by packed syndrome (linear codes)."""
    if not C.is_linear:
        raise CodeError("coset leaders need a linear code")
    H = C.parity_check()
    r, q, f = H.shape[0], C.q, C.field
    if r == 0:
        return np.zeros(1, dtype=np.int16)
    size = q**r
    if size > SYNDROME_GUARD:
        raise GuardError(f"{size} syndromes exceed guard {SYNDROME_GUARD}")
    mul = f.mul_table
    cols = [pack(mul[a, H[:, j]], q)[0] for j in range(C.length) for a in range(1, q)]
    return cayley_bfs(size, f.p, r * f.k, [0], np.array(cols, dtype=np.int64))


def covering_radius_exact(C: HammingCode, method: str = "auto") -> int:
    """Exact covering radius; max coset-leader weight for linear codes, BFS over F^t otherwise."""
    if method == "auto":
        method = "syndrome" if C.is_linear else "list"
    if method == "syndrome":
        R = int(coset_leader_weights(C).max())
    elif method == "list":
        size = C.q**C.length
        if size > LIST_GUARD:
            raise GuardError(f"ambient {size} exceeds list-path guard {LIST_GUARD}")
        dist = cayley_bfs(size, C.field.p, C.length * C.field.k, C.packed(), _unit_generators(C.q, C.length))
        R = int(dist.max())
    else:
        raise ValueError(f"unknown method {method!r}")
    C.exact_radius = R
    return R


def weight_distribution(C: HammingCode) -> list[int]:
    w = np.count_nonzero(C.codewords(), axis=1)
    return np.bincount(w, minlength=C.length + 1).tolist()


def delsarte_radius_bound(C: HammingCode) -> int:
    """Number of distinct nonzero weights in the dual code."""
    if not C.is_linear:
        raise CodeError("Delsarte bound needs a linear code")
    redundancy = C.length - C.dimension
    if C.q**redundancy > ENUM_GUARD:
        raise GuardError(f"dual has {C.q}^{redundancy} words, beyond guard")
    dist = weight_distribution(C.dual())
    return sum(1 for w, n in enumerate(dist) if w > 0 and n > 0)


def scalar_extend(C: HammingCode, h: int) -> HammingCode:
    """Read the generator matrix of ``C`` over GF(q'^h); radius claim h * R."""
    if not C.is_linear:
        raise CodeError("scalar extension needs a linear code")
    ext = field_make(C.field.p, C.field.k * h)
    tower = Tower(C.field, ext)
    R, _ = C.known_radius()
    if R is None:
        R = covering_radius_exact(C)
    G = tower.embedding[C.generator] if C.dimension else np.zeros((0, C.length), dtype=np.int64)
    return HammingCode(
        ext,
        C.length,
        generator=G,
        radius_claim=h * R,
        claim_source="scalar-extension",
        name=f"{C.name}(x)GF({ext.order})" if C.name else "",
    )


# -- constructions --------------------------------------------------------------------


def whole_space(field: FieldSpec, n: int) -> HammingCode:
    C = HammingCode(field, n, generator=np.eye(n, dtype=np.int64), name="whole")
    C.radius_claim, C.claim_source = 0, "trivial"
    return C


def zero_code(field: FieldSpec, n: int) -> HammingCode:
    C = HammingCode(field, n, generator=np.zeros((0, n), dtype=np.int64), name="zero")
    C.radius_claim, C.claim_source = n, "trivial"
    return C


def repetition_code(field: FieldSpec, n: int) -> HammingCode:
    return HammingCode(field, n, generator=np.ones((1, n), dtype=np.int64), name=f"rep[{n},1]")


def reed_solomon(field: FieldSpec, n: int, k: int, points=None) -> HammingCode:
    """Evaluation code of polynomials of degree < k at n distinct points (nonzero by default)."""
    if points is None:
        if n > field.order - 1:
            raise CodeError(f"RS length {n} exceeds q'-1 = {field.order - 1}")
        g = field.primitive_element
        points = [field.pow(g, i) for i in range(n)]
    if len(set(points)) != n or not 0 < k <= n:
        raise CodeError("need n distinct evaluation points and 0 < k <= n")
    G = np.array([[field.pow(a, i) for a in points] for i in range(k)], dtype=np.int64)
    return HammingCode(field, n, generator=G, name=f"RS[{n},{k}]")


def hamming_binary(r: int) -> HammingCode:
    """Binary Hamming [2^r - 1, 2^r - 1 - r] code."""
    F = field_make(2)
    n = 2**r - 1
    H = np.array([[(c >> i) & 1 for c in range(1, n + 1)] for i in range(r)], dtype=np.int64)
    C = HammingCode(F, n, generator=nullspace(H, F), name=f"Ham[{n},{n - r}]")
    return C


def simplex_binary(r: int) -> HammingCode:
    F = field_make(2)
    n = 2**r - 1
    G = np.array([[(c >> i) & 1 for c in range(1, n + 1)] for i in range(r)], dtype=np.int64)
    return HammingCode(F, n, generator=G, name=f"simplex[{n},{r}]")


def random_linear_code(field: FieldSpec, n: int, k: int, rng: np.random.Generator) -> HammingCode:
    while True:
        G = rng.integers(0, field.order, size=(k, n))
        if len(rref(G, field)[1]) == k:
            return HammingCode(field, n, generator=G, name=f"random[{n},{k}]")


def _cyclotomic_coset(i: int, N: int) -> list[int]:
    out, j = [], i % N
    while j not in out:
        out.append(j)
        j = (2 * j) % N
    return out


def bch_make(e: int, n: int) -> HammingCode:
    """Narrow-sense primitive binary BCH(e, n): length 2^n - 1, designed distance 2e + 1.

    The primitive element is the root ``x`` of the canonical modulus of GF(2^n).
    """
    if not 2 <= n <= 5:
        raise CodeError("desk-scale BCH needs 2 <= n <= 5")
    N = 2**n - 1
    if e < 1 or 2 * e + 1 > N:
        raise CodeError(f"designed distance {2 * e + 1} exceeds length {N}")
    F = field_make(2, n)
    alpha = 2  # the class of x
    if F.mult_order(alpha) != N:
        raise CodeError("canonical modulus root is not primitive")  # unreachable for n <= 5
    zeros = sorted({z for i in range(1, 2 * e + 1) for z in _cyclotomic_coset(i, N)})
    g = [1]
    for z in zeros:
        root = F.pow(alpha, z)
        new = [0] * (len(g) + 1)
        for i, c in enumerate(g):
            new[i + 1] = F.add(new[i + 1], c)
            new[i] = F.add(new[i], F.mul(root, c))
        g = new
    if any(c not in (0, 1) for c in g):
        raise CodeError("generator polynomial is not binary")  # unreachable
    k = N - (len(g) - 1)
    G = np.zeros((k, N), dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(g)] = g
    C = HammingCode(field_make(2), N, generator=G, name=f"BCH({e},{n})")
    C.meta.update(generator_poly=g, designed_distance=2 * e + 1, zeros=zeros)
    return C


# -- file format ----------------------------------------------------------------------


def write_code(C: HammingCode, path) -> None:
    """Header ``q'=.. t=.. kind=gen|list`` then one row of element strings per line."""
    kind = "gen" if C.is_linear else "list"
    rows = C.generator if C.is_linear else C.words
    lines = [f"q'={C.q} t={C.length} kind={kind}"]
    if C.radius_claim is not None:
        lines[0] += f" radius_claim={C.radius_claim}"
    lines += [" ".join(C.field.element_str(int(v)) for v in row) for row in rows]
    Path(path).write_text("\n".join(lines) + "\n")


def read_code(path) -> HammingCode:
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise CodeError(f"{path}: empty code file")
    try:
        header = dict(tok.split("=", 1) for tok in lines[0].split())
        q, t, kind = int(header["q'"]), int(header["t"]), header["kind"]
    except (KeyError, ValueError) as exc:
        raise CodeError(f"{path}:1: malformed header {lines[0]!r}") from exc
    F = field_for_order(q)
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            row = [F.parse_element(s) for s in ln.split()]
        except ValueError as exc:
            raise CodeError(f"{path}:{lineno}: {exc}") from exc
        if len(row) != t:
            raise CodeError(f"{path}:{lineno}: expected {t} entries")
        rows.append(row)
    rows = np.array(rows, dtype=np.int64).reshape(-1, t)
    if kind == "gen":
        C = HammingCode(F, t, generator=rows)
    elif kind == "list":
        C = HammingCode(F, t, words=rows)
    else:
        raise CodeError(f"{path}:1: unknown kind {kind!r}")
    if "radius_claim" in header:
        C.radius_claim, C.claim_source = int(header["radius_claim"]), f"file:{Path(path).name}"
    return C
