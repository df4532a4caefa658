"""Finite fields GF(p^k), towers GF(q) < GF(q^m) and linearized polynomials.

Elements are stored as plain integers: the element ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}``
is the integer ``c_0 + c_1 p + ... + c_{k-1} p^(k-1)``.  :class:`FieldElement` wraps such
an integer together with its field for user-facing arithmetic; the numeric kernels work
on raw integers and numpy tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
import itertools

import numpy as np

__all__ = [
    "FieldError",
    "FieldSpec",
    "FieldElement",
    "Tower",
    "field_make",
    "field_arith",
    "is_prime",
    "is_irreducible",
    "linearized_to_matrix",
    "parse_field",
]

MAX_DEGREE = 16
_LOG_TABLE_LIMIT = 1 << 16
_FULL_TABLE_LIMIT = 1024
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class FieldError(ValueError):
    """Invalid field parameters or illegal field arithmetic."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomials over GF(p), coefficient lists low-to-high ---------------------------


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = _trim(a)
    f = _trim(f)
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) >= len(f):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(f)
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        a = _trim(a)
    return a


def _pmulmod(a, b, f, p):
    out = [0] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p)."""
    f = _trim(f)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _trim(_ppowmod(x, p**k, f, p)) != x:
        return False
    for r in _prime_factors(k):
        h = _ppowmod(x, p ** (k // r), f, p)
        h = h + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        g = _pgcd(f, h, p)
        if len(g) > 1:
            return False
    return True


def _int_to_digits(v, p, k):
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _digits_to_int(ds, p):
    v = 0
    for d in reversed(list(ds)):
        v = v * p + d
    return v


# -- fields ------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^k) with a fixed monic irreducible modulus and an ordered GF(p)-basis."""

    p: int
    k: int
    modulus: tuple[int, ...]
    basis: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if not 1 <= self.k <= MAX_DEGREE:
            raise FieldError(f"degree {self.k} outside 1..{MAX_DEGREE}")
        mod = tuple(int(c) for c in self.modulus)
        if len(mod) != self.k + 1 or mod[-1] != 1 or any(not 0 <= c < self.p for c in mod):
            raise FieldError(f"modulus {mod} is not a monic degree-{self.k} polynomial over GF({self.p})")
        if not is_irreducible(mod, self.p):
            raise FieldError(f"modulus {mod} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", mod)
        basis = tuple(self.basis) or tuple(self.p**i for i in range(self.k))
        if len(basis) != self.k or _gf_p_rank([_int_to_digits(b, self.p, self.k) for b in basis], self.p) != self.k:
            raise FieldError("basis must have k elements, linearly independent over GF(p)")
        object.__setattr__(self, "basis", basis)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.k, self.modulus, self.basis) == (
            other.p,
            other.k,
            other.modulus,
            other.basis,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus, self.basis))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    # scalar arithmetic on integer codes
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return _digits_to_int(
            [(x + y) % self.p for x, y in zip(_int_to_digits(a, self.p, self.k), _int_to_digits(b, self.p, self.k))],
            self.p,
        )

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return _digits_to_int([(-x) % self.p for x in _int_to_digits(a, self.p, self.k)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return (a * b) % self.p
        if self._tables is not None:
            exp, log = self._tables
            return int(exp[(log[a] + log[b]) % (self.order - 1)])
        return self._polymul(a, b)

    def _polymul(self, a, b):
        prod = _pmulmod(_int_to_digits(a, self.p, self.k), _int_to_digits(b, self.p, self.k), self.modulus, self.p)
        return _digits_to_int(prod, self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._tables is not None:
            exp, log = self._tables
            return int(exp[(-log[a]) % (self.order - 1)])
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        for d in sorted(_divisors(n)):
            if self.pow(a, d) == 1:
                return d
        return n

    @cached_property
    def primitive_element(self) -> int:
        for g in range(1, self.order):
            if self.mult_order(g) == self.order - 1:
                return g
        raise FieldError("no primitive element")  # unreachable for a field

    @cached_property
    def _tables(self):
        if self.k == 1 or self.order > _LOG_TABLE_LIMIT:
            return None
        g = None
        n = self.order - 1
        # find a generator without the table-based mul
        for cand in range(2, self.order):
            ok = True
            for d in sorted(_divisors(n))[:-1]:
                if self._polypow(cand, d) == 1:
                    ok = False
                    break
            if ok:
                g = cand
                break
        if g is None:  # GF(2^1)-style degenerate orders
            g = 1
        exp = np.zeros(2 * n + 1, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._polymul(x, g)
        exp[n : 2 * n] = exp[:n]
        return exp, log

    def _polypow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._polymul(r, a)
            a = self._polymul(a, a)
            e >>= 1
        return r

    # vectorised helpers
    @cached_property
    def add_table(self) -> np.ndarray:
        self._check_table_size()
        q = self.order
        a = np.arange(q)
        return digit_add(a[:, None], a[None, :], self.p, self.k)

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._check_table_size()
        q = self.order
        out = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(a, q):
                out[a, b] = out[b, a] = self.mul(a, b)
        return out

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.order)], dtype=np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([0] + [self.inv(a) for a in range(1, self.order)], dtype=np.int64)

    def _check_table_size(self):
        if self.order > _FULL_TABLE_LIMIT:
            raise FieldError(f"{self!r} too large for dense operation tables")

    def element(self, v) -> "FieldElement":
        return FieldElement(self, int(v))

    def elements(self):
        return [FieldElement(self, v) for v in range(self.order)]

    # serialisation
    def element_str(self, a: int) -> str:
        return "".join(_DIGITS[d] for d in _int_to_digits(a, self.p, self.k))

    def parse_element(self, s: str) -> int:
        s = s.strip().lower()
        if len(s) != self.k:
            raise FieldError(f"element string {s!r} must have {self.k} digits")
        ds = [_DIGITS.index(c) for c in s]
        if any(d >= self.p for d in ds):
            raise FieldError(f"digit out of range in {s!r}")
        return _digits_to_int(ds, self.p)

    def __str__(self):
        return f"{self.p}^{self.k}/" + "".join(_DIGITS[c] for c in self.modulus)


def _divisors(n):
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


def _gf_p_rank(rows, p):
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def digit_add(a, b, p: int, ndigits: int):
    """Carry-free base-p digitwise sum of integer-encoded vectors (numpy broadcasting)."""
    if p == 2:
        return np.bitwise_xor(a, b)
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    pw = 1
    for _ in range(ndigits):
        out += (((a // pw) % p + (b // pw) % p) % p) * pw
        pw *= p
    return out


def digit_neg(a, p: int, ndigits: int):
    """Digitwise negation mod p of integer-encoded vectors."""
    if p == 2:
        return a
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros_like(a)
    pw = 1
    for _ in range(ndigits):
        out += ((-(a // pw)) % p) * pw
        pw *= p
    return out


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k) with the canonical modulus.

    The canonical modulus is the monic irreducible polynomial of degree k whose
    coefficient vector, read as base-p digits (constant term lowest), is smallest.
    For k = 1 this is ``x`` itself.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not 1 <= k <= MAX_DEGREE:
        raise FieldError(f"degree {k} outside 1..{MAX_DEGREE}")
    for tail in range(p**k):
        mod = tuple(_int_to_digits(tail, p, k)) + (1,)
        if is_irreducible(mod, p):
            return FieldSpec(p, k, mod)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")  # unreachable


def parse_field(s: str) -> FieldSpec:
    """Inverse of ``str(FieldSpec)``: ``"p^k/modulus-digits"``."""
    try:
        head, mod = s.strip().split("/")
        p, k = (int(v) for v in head.split("^"))
        coeffs = tuple(_DIGITS.index(c) for c in mod.lower())
    except ValueError as exc:
        raise FieldError(f"malformed field string {s!r}") from exc
    return FieldSpec(p, k, coeffs)


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific finite field.  Mixing fields is an error."""

    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise FieldError(f"{self.value} is not an element code of {self.field!r}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.sub(self.value, o))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.div(self.value, o))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def coeffs(self) -> list[int]:
        return _int_to_digits(self.value, self.field.p, self.field.k)

    def __str__(self):
        return self.field.element_str(self.value)


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch ``add``, ``mul`` or ``inv`` (inverse of ``a``; ``b`` ignored)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown field operation {op!r}")


# -- towers -------------------------------------------------------------------------


class Tower:
    """GF(q) inside GF(q^m) with an ordered GF(q)-basis of the extension.

    ``expand`` maps an extension element to its length-m coordinate vector over the base,
    ``recompose`` is its inverse.  Both are table lookups built once (q^m <= 2^16).
    """

    def __init__(self, base: FieldSpec, ext: FieldSpec, basis=None):
        if base.p != ext.p or ext.k % base.k:
            raise FieldError(f"{base!r} is not a subfield of {ext!r}")
        if ext.order > _LOG_TABLE_LIMIT:
            raise FieldError(f"tower over {ext!r} exceeds desk-scale limit q^m <= 2^16")
        self.base = base
        self.ext = ext
        self.m = ext.k // base.k
        self.embedding = self._find_embedding()
        if basis is None:
            if base.is_prime_field:
                basis = ext.basis
            else:
                basis = tuple(ext.pow(ext.p, i) for i in range(self.m))  # 1, x, ..., x^(m-1)
        basis = tuple(int(b) for b in basis)
        if len(basis) != self.m:
            raise FieldError(f"basis must have {self.m} elements")
        self.basis = basis
        self._build_tables()

    def _find_embedding(self) -> np.ndarray:
        base, ext = self.base, self.ext
        if base.is_prime_field:
            return np.arange(base.order, dtype=np.int64)
        # image of the base generator x: a root in ext of the base modulus
        for r in range(ext.order):
            acc = 0
            for c in reversed(base.modulus):
                acc = ext.add(ext.mul(acc, r), c)
            if acc == 0:
                break
        else:
            raise FieldError("base modulus has no root in extension")  # unreachable
        emb = np.zeros(base.order, dtype=np.int64)
        for a in range(base.order):
            v, pw = 0, 1
            for c in _int_to_digits(a, base.p, base.k):
                v = ext.add(v, ext.mul(c, pw))
                pw = ext.mul(pw, r)
            emb[a] = v
        return emb

    def _build_tables(self):
        q, m, ext = self.base.order, self.m, self.ext
        coords = np.full((ext.order, m), -1, dtype=np.int64)
        seen = np.zeros(ext.order, dtype=bool)
        for combo in itertools.product(range(q), repeat=m):
            v = 0
            for c, b in zip(combo, self.basis):
                if c:
                    v = ext.add(v, ext.mul(int(self.embedding[c]), b))
            if seen[v]:
                raise FieldError("tower basis is not linearly independent over the base field")
            seen[v] = True
            coords[v] = combo
        self.coords = coords

    def embed(self, a: int) -> int:
        return int(self.embedding[a])

    def expand(self, a) -> tuple[int, ...]:
        if isinstance(a, FieldElement):
            if a.field != self.ext:
                raise FieldError(f"element of {a.field!r} is not in {self.ext!r}")
            a = a.value
        if not 0 <= a < self.ext.order:
            raise FieldError(f"{a} is not an element code of {self.ext!r}")
        return tuple(int(c) for c in self.coords[a])

    def recompose(self, coords) -> int:
        if len(coords) != self.m:
            raise FieldError(f"expected {self.m} coordinates")
        v = 0
        for c, b in zip(coords, self.basis):
            v = self.ext.add(v, self.ext.mul(int(self.embedding[c]), b))
        return v

    def __repr__(self):
        return f"Tower({self.base!r} < {self.ext!r})"


@lru_cache(maxsize=None)
def _tower_cached(base: FieldSpec, ext: FieldSpec) -> Tower:
    return Tower(base, ext)


def tower_for(base: FieldSpec, m: int) -> Tower:
    """The canonical tower GF(q) < GF(q^m) with ``field_make`` moduli and default basis."""
    return _tower_cached(base, field_make(base.p, base.k * m))


def linearized_to_matrix(coeffs, tower: Tower) -> np.ndarray:
    """Matrix over GF(q) of x -> sum_i a_i x^(q^i), columns = expanded images of basis."""
    m = tower.m
    coeffs = [c.value if isinstance(c, FieldElement) else int(c) for c in coeffs]
    if len(coeffs) != m:
        raise FieldError(f"expected {m} coefficients, got {len(coeffs)}")
    ext, q = tower.ext, tower.base.order
    out = np.zeros((m, m), dtype=np.int64)
    for col, b in enumerate(tower.basis):
        img, frob = 0, b
        for a in coeffs:
            if a:
                img = ext.add(img, ext.mul(a, frob))
            frob = ext.pow(frob, q)
        out[:, col] = tower.expand(img)
    return out
