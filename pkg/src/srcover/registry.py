"""Registry of known Hamming covering-code sizes K_{q'}(t, R), stored as TSV."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
import os
from pathlib import Path

__all__ = [
    "CoveringRecord",
    "Registry",
    "RegistryError",
    "ValidationIssue",
    "registry_load",
    "registry_validate",
    "default_registry_path",
]

ENV_VAR = "SRCOVER_REGISTRY"


class RegistryError(ValueError):
    """Unparseable registry file; the message carries the line number."""


@dataclass(frozen=True)
class CoveringRecord:
    q: int
    t: int
    R: int
    K: int
    source: str

    def __post_init__(self):
        if self.K < 1:
            raise ValueError(f"covering-code size must be >= 1, got {self.K}")
        if self.R >= self.t and self.K != 1:
            raise ValueError(f"radius {self.R} >= length {self.t} forces K = 1")


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # parse | size | duplicate | monotonicity | empty
    message: str
    line: int | None = None

    def __str__(self):
        where = f"line {self.line}: " if self.line else ""
        return f"{self.kind}: {where}{self.message}"


class Registry:
    def __init__(self, records=(), path=None, lines=None):
        self.records = list(records)
        self.path = path
        self._lines = lines or [None] * len(self.records)
        self._index: dict[tuple[int, int, int], CoveringRecord] = {}
        for rec in self.records:
            key = (rec.q, rec.t, rec.R)
            if key not in self._index or rec.K < self._index[key].K:
                self._index[key] = rec

    def lookup(self, q: int, t: int, R: int) -> CoveringRecord | None:
        """Smallest recorded K for exactly (q', t, R); trivial record when R >= t; else None."""
        if R >= t:
            return CoveringRecord(q, t, R, 1, "trivial: one codeword covers when R >= t")
        return self._index.get((q, t, R))

    def max_radius(self, q: int) -> int | None:
        radii = [rec.R for rec in self.records if rec.q == q]
        return max(radii) if radii else None

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def default_registry_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("srcover") / "data" / "k4.tsv"))


def _parse(text: str, path=None):
    records, lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = raw.rstrip("\n").split("\t")
        if cols[0].strip().lower().startswith("q"):
            continue  # header
        if len(cols) < 4:
            raise RegistryError(f"{path or '<registry>'}:{lineno}: expected q', t, R, K, source columns")
        try:
            q, t, R, K = (int(c) for c in cols[:4])
        except ValueError as exc:
            raise RegistryError(f"{path or '<registry>'}:{lineno}: non-integer field in {line!r}") from exc
        source = cols[4].strip() if len(cols) > 4 else ""
        try:
            records.append(CoveringRecord(q, t, R, K, source))
        except ValueError as exc:
            raise RegistryError(f"{path or '<registry>'}:{lineno}: {exc}") from exc
        lines.append(lineno)
    return records, lines


def registry_load(path=None) -> Registry:
    path = Path(path) if path is not None else default_registry_path()
    records, lines = _parse(path.read_text(), path)
    return Registry(records, path=path, lines=lines)


def registry_validate(reg: Registry) -> list[ValidationIssue]:
    """Report duplicates and violations of K(t, R) >= K(t, R') for R < R'. Never mutates."""
    issues = []
    if not reg.records:
        issues.append(ValidationIssue("empty", "registry has no records"))
        return issues
    seen = {}
    for rec, line in zip(reg.records, reg._lines):
        key = (rec.q, rec.t, rec.R)
        if key in seen:
            issues.append(ValidationIssue("duplicate", f"(q'={rec.q}, t={rec.t}, R={rec.R}) repeats line {seen[key]}", line))
        else:
            seen[key] = line
    groups: dict[tuple[int, int], list[CoveringRecord]] = {}
    for rec in reg._index.values():
        groups.setdefault((rec.q, rec.t), []).append(rec)
    for (q, t), recs in sorted(groups.items()):
        recs.sort(key=lambda r: r.R)
        for i, a in enumerate(recs):
            for b in recs[i + 1 :]:
                if a.K < b.K:
                    issues.append(
                        ValidationIssue(
                            "monotonicity",
                            f"q'={q} t={t}: K(R={a.R})={a.K} < K(R={b.R})={b.K}",
                            seen.get((q, t, b.R)),
                        )
                    )
    return issues
