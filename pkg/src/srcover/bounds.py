"""Closed-form bounds for sum-rank codes and sum-rank covering codes.

Every value is an exact integer except the entropy function and the block-length estimate
that carries an unspecified universal constant ``c`` (reported symbolically, plus a
``c = 1`` normalization).
"""

from __future__ import annotations

from dataclasses import dataclass, field
import json
import math

from .registry import CoveringRecord, Registry
from .space import ball_volume

__all__ = [
    "BoundError",
    "CodeParams",
    "SingletonDecomposition",
    "BoundReport",
    "singleton_decomposition",
    "singleton_like",
    "msrd_check",
    "effective_k",
    "product_upper_bound",
    "sphere_covering_lower",
    "generic_strong_bound",
    "list_size_bound",
    "bch_condition",
    "bch_record",
    "strong_singleton",
    "strong_singleton_general",
    "block_length_bounds",
    "fixed_distance_strong_bound",
    "odd_q_strong_bound",
    "entropy_q",
    "entropy_threshold",
    "msrd_length_cap",
    "REFERENCE_K22",
    "TableResult",
    "table_generate",
    "rm_covering_formula",
    "Discrepancy",
    "discrepancies",
]


class BoundError(ValueError):
    """Preconditions of a bound are not met; the message says which."""


@dataclass(frozen=True)
class CodeParams:
    q: int
    sizes: tuple[tuple[int, int], ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(tuple(s) for s in self.sizes))
        if not self.sizes:
            raise BoundError("need at least one block")
        for n, m in self.sizes:
            if not 1 <= n <= m:
                raise BoundError(f"block size ({n},{m}) needs 1 <= n <= m")
        ms = [m for _, m in self.sizes]
        if any(a < b for a, b in zip(ms, ms[1:])):
            raise BoundError("column counts m_i must be non-increasing")
        if not 1 <= self.d <= self.N:
            raise BoundError(f"distance {self.d} outside 1..{self.N}")

    @property
    def N(self) -> int:
        return sum(n for n, _ in self.sizes)

    @property
    def t(self) -> int:
        return len(self.sizes)

    @classmethod
    def uniform(cls, q: int, m: int, t: int, d: int) -> "CodeParams":
        return cls(q, ((m, m),) * t, d)


@dataclass(frozen=True)
class SingletonDecomposition:
    j: int  # 1-based block index
    delta: int


def _decimal(n: int) -> str:
    """Decimal string of any size (the interpreter caps plain str() of huge ints)."""
    if n < 0:
        return "-" + _decimal(-n)
    if n < 10**1000:
        return str(n)
    k = (n.bit_length() * 3 // 10) // 2  # about half the digits
    hi, lo = divmod(n, 10**k)
    return _decimal(hi) + _decimal(lo).rjust(k, "0")


def _short(n: int) -> str:
    """Compact rendering for assumption strings."""
    if n < 10**30:
        return str(n)
    if n & (n - 1) == 0:
        return f"2^{n.bit_length() - 1}"
    return f"~2^{n.bit_length() - 1}"


@dataclass
class BoundReport:
    name: str
    value: object
    assumptions: list[str] = field(default_factory=list)
    provenance: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        def enc(v):
            if isinstance(v, bool) or v is None:
                return v
            if isinstance(v, int):
                return _decimal(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {str(k): enc(x) for k, x in v.items()}
            return v

        rec = {"name": self.name, "value": enc(self.value), "assumptions": self.assumptions,
               "provenance": self.provenance}
        if self.extra:
            rec["extra"] = enc(self.extra)
        return json.dumps(rec, sort_keys=False)


# -- Singleton-like ---------------------------------------------------------------------


def singleton_decomposition(p: CodeParams) -> SingletonDecomposition:
    """The pair (j, delta) with d = n_1 + ... + n_{j-1} + delta + 1 and 0 <= delta < n_j."""
    rest = p.d - 1
    for j, (n, _) in enumerate(p.sizes, start=1):
        if rest < n:
            return SingletonDecomposition(j, rest)
        rest -= n
    raise BoundError("distance exceeds the total number of rows")  # unreachable for valid params


def singleton_like(p: CodeParams) -> BoundReport:
    dec = singleton_decomposition(p)
    j, delta = dec.j, dec.delta
    exp = sum(n * m for n, m in p.sizes[j - 1 :]) - p.sizes[j - 1][1] * delta
    return BoundReport(
        "singleton_like",
        p.q**exp,
        [f"1 <= d = {p.d} <= N = {p.N}", "m_i non-increasing", f"(j, delta) = ({j}, {delta})"],
        "sum-rank Singleton-like bound",
        {"j": j, "delta": delta, "exponent": exp},
    )


def msrd_check(p: CodeParams, size: int) -> str:
    bound = singleton_like(p).value
    if size == bound:
        return "MSRD"
    return "strictly-below" if size < bound else "violates"


# -- covering-code sizes ----------------------------------------------------------------


def effective_k(registry: Registry, Q: int, t: int, R: int) -> tuple[int, str]:
    """Best known size of a Q-ary covering code of length t and radius <= R.

    Any recorded code of radius R' <= R qualifies; the redundancy bound supplies
    Q^(t-R) when nothing better is recorded.
    """
    if R >= t:
        return 1, f"K_{Q}({t},{R}) = 1: a single word covers when R >= t"
    best, why = Q ** (t - R), f"K_{Q}({t},{R}) <= {Q}^{t - R}: redundancy bound (no smaller registry record)"
    for rec in registry:
        if rec.q == Q and rec.t == t and rec.R <= R and rec.K < best:
            best = rec.K
            src = f"registry K_{Q}({t},{rec.R}) = {rec.K}"
            why = src if rec.R == R else f"{src} (radius {rec.R} <= {R})"
    return best, why


def _partitions(R: int, parts: int, lo: int = 0):
    """Non-decreasing tuples of ``parts`` non-negative integers summing to R, in lex order."""
    if parts == 1:
        if R >= lo:
            yield (R,)
        return
    for first in range(lo, R // parts + 1):
        for tail in _partitions(R - first, parts - 1, first):
            yield (first,) + tail


def product_upper_bound(q: int, m: int, t: int, R: int, registry: Registry,
                        max_part_radius: int | None = None) -> BoundReport:
    """Smallest product of m Hamming covering-code sizes over GF(q^m) whose radii sum to R.

    ``max_part_radius`` restricts every part radius; when no split satisfies it the
    restriction is dropped (and noted).
    """
    Q = q**m
    notes = []
    cands = list(_partitions(R, m))
    if max_part_radius is not None:
        capped = [pt for pt in cands if max(pt) <= max_part_radius]
        if capped:
            cands = capped
            notes.append(f"part radii restricted to <= {max_part_radius}")
        else:
            notes.append(f"no split with parts <= {max_part_radius}; restriction dropped")
    best = None
    for pt in cands:
        ks = [effective_k(registry, Q, t, r) for r in pt]
        val = math.prod(k for k, _ in ks)
        if best is None or val < best[0]:  # strict: ties keep the lexicographically first split
            best = (val, pt, ks)
    val, pt, ks = best
    assumptions = notes + sorted({why for _, why in ks})
    return BoundReport(
        "product_upper_bound",
        val,
        assumptions,
        "row-lift product of Hamming covering codes",
        {"partition": list(pt), "factors": [k for k, _ in ks], "q": q, "m": m, "t": t, "R": R},
    )


def sphere_covering_lower(q: int, m: int, t: int, R: int) -> BoundReport:
    vol = ball_volume((q, m, t), R)
    total = q ** (m * m * t)
    return BoundReport(
        "sphere_covering_lower",
        -(-total // vol),
        [f"0 <= R = {R} <= m*t = {m * t}", f"ball volume {vol}"],
        "volume bound: ceil(|space| / |ball|)",
    )


def generic_strong_bound(cov: CoveringRecord, m: int, L: int = 1, q: int | None = None) -> BoundReport:
    """L * K^m, from a Hamming covering code of size K over GF(q^m)."""
    if q is not None and q**m != cov.q:
        raise BoundError(f"covering record alphabet {cov.q} is not {q}^{m}")
    if q is None and round(cov.q ** (1 / m)) ** m != cov.q:
        raise BoundError(f"covering record alphabet {cov.q} is not an m-th power (m={m})")
    if L < 1:
        raise BoundError("list size L must be >= 1")
    return BoundReport(
        "generic_strong_bound",
        L * cov.K**m,
        [
            f"covering code over GF({cov.q}) of length {cov.t}, radius {cov.R}, size {_short(cov.K)} ({cov.source})",
            f"applies to ({m * cov.R}, {L})-list-decodable codes"
            + (f"; with L = 1, to codes with d >= {2 * m * cov.R + 1}" if L == 1 else ""),
        ],
        "list-size bound through a covering code of the row lift",
    )


def list_size_bound(q: int, m: int, t: int, d: int, L: int = 1) -> BoundReport:
    if not 0 <= d <= m * t:
        raise BoundError(f"d = {d} outside 0..{m * t}")
    return BoundReport(
        "list_size_bound",
        L * q ** (m * m * t - m * d),
        [f"({d}, {L})-list-decodable", "covering code from the redundancy bound"],
        "list-size bound through a redundancy-bound covering code",
    )


# -- strong Singleton-like bounds ---------------------------------------------------------


def bch_condition(e: int, n: int, offset: int = 2) -> bool:
    """(2e-1)^(4e+offset) <= 2^n.  Offsets 1 and 2 are both in use; 2 is the default."""
    return (2 * e - 1) ** (4 * e + offset) <= 2**n


def bch_record(e: int, n: int, t: int, m: int = 2) -> CoveringRecord:
    """Binary BCH(e, n) read over GF(2^m) and padded to length t: size (2^m)^(t - n e), radius <= 2me."""
    if t < 2**n - 1:
        raise BoundError(f"block length {t} < 2^{n} - 1")
    Q = 2**m
    return CoveringRecord(Q, t, min(2 * m * e, t), Q ** (t - n * e) if 2 * m * e < t else 1,
                          f"BCH({e},{n}) over GF({Q}) padded to length {t}")


def _strong_e(d: int, block: int, e: int) -> tuple[int, str]:
    """Effective e' from d = block*e + i: i in 1..block-1 gives floor(d/block), i = 0 gives floor((d-1)/block)."""
    if d == block * e:
        return (d - 1) // block, f"d = {block}e: exponent uses floor((d-1)/{block})"
    if block * e < d < block * (e + 1):
        return d // block, f"d = {block}e + i with 1 <= i <= {block - 1}"
    raise BoundError(f"d = {d} is not of the form {block}e + i (e = {e}, 0 <= i < {block})")


def strong_singleton(q: int, m: int, t: int, d: int, e: int, n: int, offset: int = 2) -> BoundReport:
    """Binary 2x2 strong bound 2^(2(2t - 2n e')), e' = floor(d/8) or floor((d-1)/8).

    Other m are answered only through :func:`strong_singleton_general`.
    """
    if q != 2:
        raise BoundError("strong bound is for binary codes")
    if m != 2:
        return strong_singleton_general(m, t, d, e, n, offset)
    reasons = []
    if t < 2**n - 1:
        reasons.append(f"t = {t} < 2^n - 1 = {2**n - 1}")
    if not bch_condition(e, n, offset):
        reasons.append(f"(2e-1)^(4e+{offset}) = {(2 * e - 1) ** (4 * e + offset)} > 2^n = {2**n}")
    if e < 1:
        reasons.append("e must be positive")
    if reasons:
        raise BoundError("; ".join(reasons))
    ep, note = _strong_e(d, 8, e)
    exp = 2 * (2 * t - 2 * n * ep)
    return BoundReport(
        "strong_singleton",
        2**exp,
        [f"t >= 2^n - 1 = {2**n - 1}", f"(2e-1)^(4e+{offset}) <= 2^n", note],
        "strong Singleton-like bound, binary 2x2 blocks",
        {"exponent": exp, "e_eff": ep},
    )


def strong_singleton_general(m: int, t: int, d: int, e: int, n: int, offset: int = 2) -> BoundReport:
    """Any m: K^m with K = (2^m)^(t - n e') from the padded BCH record, e' from d = 2m^2 e + i."""
    if t < 2**n - 1 or not bch_condition(e, n, offset) or e < 1:
        raise BoundError(f"needs t >= 2^n - 1, e >= 1 and (2e-1)^(4e+{offset}) <= 2^n")
    ep, note = _strong_e(d, 2 * m * m, e)
    rec = bch_record(ep, n, t, m) if ep else CoveringRecord(2**m, t, 0, 2 ** (m * t), "whole space")
    rep = generic_strong_bound(rec, m, 1, 2)
    rep.name = "strong_singleton_general"
    rep.assumptions.append(note)
    rep.extra = {"exponent": m * (rec.K.bit_length() - 1), "e_eff": ep}
    return rep


def fixed_distance_strong_bound(q: int, m: int, t: int, R: int, u: int) -> BoundReport:
    """q^(m^2 t - m - u R) for d = 2R + 1, valid once t reaches c * (block-length estimate)."""
    est = _bl_estimate(q, m, R, u)
    return BoundReport(
        "fixed_distance_strong_bound",
        q ** (m * m * t - m - u * R),
        [f"d = 2R + 1 = {2 * R + 1}",
         f"precondition t >= c * {est:.6g} is conditional on c; at c = 1 it "
         + ("holds" if t >= est else "fails")],
        "list-size bound through the block-length estimate",
        {"normalized_threshold": est},
    )


def odd_q_strong_bound(q: int, m: int, t: int, n: int) -> BoundReport:
    """Odd q, d = 8m + 1, t >= q^(mn).  Value uses the printed exponent (mt); the m^2 t form is in extra."""
    if q % 2 == 0:
        raise BoundError("q must be odd")
    if t < q ** (m * n):
        raise BoundError(f"t = {t} < q^(mn) = {q ** (m * n)}")
    literal = m * t - (2 * n + 1) * m
    corrected = m * m * t - (2 * n + 1) * m
    return BoundReport(
        "odd_q_strong_bound",
        q**literal,
        [f"d = 8m + 1 = {8 * m + 1}", f"t >= q^(mn)",
         f"WARNING: exponent mt - (2n+1)m = {literal} uses mt; with the ambient dimension m^2 t "
         f"it would be {corrected}"],
        "covering code of codimension m(2n+1) and radius 4m",
        {"literal_exponent": literal, "corrected_exponent": corrected},
    )


# -- block-length function ---------------------------------------------------------------


def _bl_estimate(q: int, m: int, R: int, u: int) -> float:
    return q ** (m * ((u - 1) * R + m) / R) * (m * math.log(q)) ** (m / R)


def hamming_block_length(registry: Registry, Q: int, r: int, R: int) -> tuple[int | None, str]:
    """Upper bound on the shortest Q-ary length with a radius-R covering code of codimension >= r."""
    cands = []
    if R >= r:
        cands.append((r, f"zero code of length {r} has radius {r} <= {R}"))
    for rec in registry:
        if rec.q == Q and rec.R <= R and rec.K <= Q ** (rec.t - r) and rec.t >= r:
            cands.append((rec.t, f"registry K_{Q}({rec.t},{rec.R}) = {rec.K} <= {Q}^({rec.t}-{r})"))
    if not cands:
        return None, f"no known covering code of codimension {r} and radius {R} over GF({Q})"
    return min(cands)


def block_length_bounds(r: int, R: int, q: int, m: int, u: int | None = None,
                        registry: Registry | None = None) -> list[BoundReport]:
    """Every applicable upper bound on l_{q,m}(r, R); inapplicable ones come back with value None."""
    out = []
    # row-lift delegation to the Hamming block-length function over GF(q^m)
    if r % m or R % m:
        out.append(BoundReport("delegation", None, [f"r = {r} and R = {R} must be multiples of m = {m}"],
                               "row lift of m equal codes"))
    else:
        val, why = (None, "no registry loaded") if registry is None else hamming_block_length(
            registry, q**m, r // m, R // m)
        out.append(BoundReport("delegation", val, [f"l_{q}^{m}({r // m}, {R // m}) bound: {why}"],
                               "row lift of m equal codes", {"delegate": (q**m, r // m, R // m)}))
    # covering-code existence estimate with the unspecified constant c
    if R < 1 or (r - m) % R or (r - m) // R < 1 or (u is not None and r != u * R + m):
        out.append(BoundReport("existence_estimate", None, [f"needs r = uR + m with integer u >= 1 (r={r}, R={R})"],
                               "existence estimate with constant c"))
    else:
        uu = (r - m) // R
        est = _bl_estimate(q, m, R, uu)
        out.append(BoundReport(
            "existence_estimate",
            f"c * {q}^({m * ((uu - 1) * R + m)}/{R}) * ({m} ln {q})^({m}/{R})",
            [f"u = {uu}", "c is an unspecified universal constant", f"normalized (c = 1) value {est!r}"],
            "existence estimate with constant c",
            {"normalized": est, "u": uu},
        ))
    # odd-q four-weight construction: l_{q,m}(m(2n+1), 4m) <= q^(nm)
    n2 = (r // m - 1) // 2 if r % m == 0 else None
    if q % 2 and R == 4 * m and n2 is not None and n2 >= 0 and r == m * (2 * n2 + 1) and n2 % 2 == 1:
        out.append(BoundReport("four_weight", q ** (n2 * m), [f"q odd, n = {n2} odd", "dual of a four-weight code"],
                               "Delsarte bound on the dual of a four-weight code"))
    else:
        out.append(BoundReport("four_weight", None, ["needs odd q, R = 4m and r = m(2n+1) with n odd"],
                               "Delsarte bound on the dual of a four-weight code"))
    return out


# -- entropy -------------------------------------------------------------------------------


def entropy_q(Q: int, rho: float) -> tuple[float, str | None]:
    """Q-ary entropy; boundary values are returned with a flag outside (0, 1)."""
    if rho <= 0:
        return 0.0, "boundary: rho <= 0"
    if rho >= 1:
        return math.log(Q - 1, Q), "boundary: rho >= 1"
    lq = math.log(Q)
    return (rho * math.log(Q - 1) - rho * math.log(rho) - (1 - rho) * math.log1p(-rho)) / lq, None


def entropy_threshold(q: int, m: int, rho: float) -> dict:
    H, flag = entropy_q(q**m, rho)
    return {"H": H, "threshold": 1 - H, "flag": flag}


def msrd_length_cap(q: int, m: int, d: int, variant: str = "binary-strict", offset: int = 2) -> BoundReport:
    """Largest block length an MSRD code of distance d can have.

    Variants: ``binary-strict`` (n >= 2m^2 + 1), ``binary-n5`` (n >= 5, stated for m = 2),
    ``odd`` (odd q, d = 8m + 1, cap q^(4m)).
    """
    if variant == "odd":
        if q % 2 == 0:
            raise BoundError("odd variant needs odd q")
        if d != 8 * m + 1:
            raise BoundError(f"odd variant needs d = 8m + 1 = {8 * m + 1}")
        return BoundReport("msrd_length_cap", q ** (4 * m), ["q odd", "d = 8m + 1"], "odd-q strong bound")
    if variant not in ("binary-strict", "binary-n5"):
        raise BoundError(f"unknown variant {variant!r}")
    if q != 2:
        raise BoundError("binary variants need q = 2")
    block = 2 * m * m
    e = (d - 1) // block
    if e < 1:
        raise BoundError(f"d = {d} must be at least 2m^2 + 1 = {block + 1}")
    floor_n = block + 1 if variant == "binary-strict" else 5
    n = floor_n
    while not bch_condition(e, n, offset):
        n += 1
    return BoundReport(
        "msrd_length_cap",
        2**n - 1,
        [f"d = {block}e + i with e = {e}", f"n = {n}: smallest with (2e-1)^(4e+2) <= 2^n and n >= {floor_n}"],
        "binary strong bound",
        {"n": n, "variant": variant},
    )


# -- table ------------------------------------------------------------------------------

# Published upper bounds on K_{2,2}(t, R), rows t = 6..10, columns R = 2, 4, ..., 12.
REFERENCE_K22 = {
    6: (65536, 2704, 208, 16, 4, 1),
    7: (1048576, 16384, 1024, 128, 16, 16),
    8: (11943936, 147456, 9216, 768, 64, 16),
    9: (150994944, 1048576, 65536, 4096, 256, 16),
    10: (2415919104, 16777216, 851968, 65536, 3328, 256),
}


def reference_value(t: int, R: int) -> int | None:
    row = REFERENCE_K22.get(t)
    if row is None or R % 2 or not 2 <= R <= 12:
        return None
    return row[R // 2 - 1]


@dataclass
class TableResult:
    q: int
    m: int
    ts: list[int]
    Rs: list[int]
    cells: dict
    flags: list[str]

    def value(self, t: int, R: int) -> int:
        return self.cells[t, R].value

    def to_tsv(self) -> str:
        lines = ["t\\R\t" + "\t".join(map(str, self.Rs))]
        for t in self.ts:
            lines.append(f"{t}\t" + "\t".join(str(self.value(t, R)) for R in self.Rs))
        return "\n".join(lines) + "\n"

    def to_pretty(self) -> str:
        rows = [["t\\R"] + [str(R) for R in self.Rs]]
        rows += [[str(t)] + [str(self.value(t, R)) for R in self.Rs] for t in self.ts]
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows) + "\n"


def table_generate(q: int, m: int, ts, Rs, registry: Registry, max_part_radius="registry") -> TableResult:
    """Product upper bounds for each (t, R); part radii default to the registry's range."""
    cap = registry.max_radius(q**m) if max_part_radius == "registry" else max_part_radius
    ts, Rs = list(ts), list(Rs)
    cells, flags = {}, []
    for t in ts:
        for R in Rs:
            rep = product_upper_bound(q, m, t, R, registry, cap)
            cells[t, R] = rep
            free = product_upper_bound(q, m, t, R, registry)
            if free.value != rep.value:
                flags.append(f"t={t} R={R}: unrestricted split {free.extra['partition']} gives {free.value}"
                             f" < {rep.value}")
            ref = reference_value(t, R) if (q, m) == (2, 2) else None
            if ref is not None and ref != rep.value:
                rel = "below" if rep.value < ref else "ABOVE"
                flags.append(f"t={t} R={R}: computed {rep.value} via {rep.extra['partition']} is {rel} "
                             f"the published {ref}")
    return TableResult(q, m, ts, Rs, cells, flags)


def rm_covering_formula(q: int, m: int, n: int) -> BoundReport:
    """First-order Reed-Muller code over GF(q^m) of length q^(mn), and its row lift."""
    if n < 1:
        raise BoundError("n must be >= 1")
    Q = q**m
    lead = (Q - 1) * q ** (m * (n - 1))
    # subtracted term q^(m(n-2)/2) may be irrational; the radius is an integer, so floor the bound
    twice = m * (n - 2)
    if twice < 0:
        sub, note = 1, "q^(m(n/2-1)) < 1: bound floored"
    elif twice % 2 == 0:
        sub, note = q ** (twice // 2), "exact"
    else:
        N = q**twice
        s = math.isqrt(N)
        sub, note = (s if s * s == N else s + 1), "q^(m(n/2-1)) irrational: bound floored"
    ham = lead - sub
    return BoundReport(
        "rm_covering_formula",
        ham,
        [note, f"code length {Q**n}, size q^(m(n+1)) = {q ** (m * (n + 1))}"],
        "first-order Reed-Muller covering radius and its row lift",
        {"hamming_radius": ham, "sum_rank_radius": m * ham, "size": q ** (m * (n + 1)), "length": Q**n},
    )


# -- inconsistencies among the published statements -------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    key: str
    statement: str
    stated: str
    computed: str

    def to_json(self) -> str:
        return json.dumps({"key": self.key, "statement": self.statement, "stated": self.stated,
                           "computed": self.computed})


def discrepancies(registry: Registry) -> list[Discrepancy]:
    """The four known inconsistencies, each with the value this package computes instead."""
    cell = product_upper_bound(2, 2, 10, 8, registry)
    # general m: printed exponent vs K^m with the padded BCH record, example m=3, e=1, n=5, t=31, d=19
    m, t, n = 3, 31, 5
    d = 2 * m * m + 1
    printed = 2 * (2 * t - 2 * n * (d // (2 * m * m)))
    generic = strong_singleton_general(m, t, d, 1, n).extra["exponent"]
    odd = odd_q_strong_bound(3, 2, 9, 1)
    caps = {v: msrd_length_cap(2, 2, 9, v).value for v in ("binary-n5", "binary-strict")}
    return [
        Discrepancy(
            "table-cell-t10-R8",
            "K_{2,2}(10,8) upper bound",
            str(reference_value(10, 8)),
            f"{cell.value} via split {tuple(cell.extra['partition'])} = 208^2",
        ),
        Discrepancy(
            "general-m-strong-exponent",
            "binary strong Singleton-like bound for m x m blocks, d = 2m^2 e + i",
            f"2^(2(2t - 2n floor(d/2m^2))) = 2^{printed} at m=3 t=31 n=5 d=19",
            f"K^m with K = (2^m)^(t - n e'): 2^(m^2 (t - n e')) = 2^{generic}",
        ),
        Discrepancy(
            "odd-q-strong-exponent",
            "odd-q strong bound for d = 8m + 1, t >= q^(mn)",
            f"q^(mt - (2n+1)m) = 3^{odd.extra['literal_exponent']} at q=3 m=2 n=1 t=9",
            f"q^(m^2 t - (2n+1)m) = 3^{odd.extra['corrected_exponent']}",
        ),
        Discrepancy(
            "msrd-length-threshold",
            "binary 2x2 MSRD length cap, d = 8e + i with e = 1",
            f"n >= 5: cap {caps['binary-n5']}",
            f"n >= 2m^2 + 1 = 9: cap {caps['binary-strict']}",
        ),
    ]
