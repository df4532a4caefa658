"""Command-line interface: ``srcover <subcommand> ...``.

Exit codes: 0 ok, 1 verification FAIL, 2 usage or input error, 3 size guard refused.
Diagnostics go to stderr as ``error[CODE]: message``.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bounds as B
from .construct import (
    MATERIALIZE_GUARD,
    pad,
    read_srk,
    sr_covering_lift,
    sr_linearized_lift,
    whole_space_code,
    write_srk,
    zero_space_code,
)
from .galois import FieldError
from .hamming import (
    CodeError,
    bch_make,
    covering_radius_exact,
    field_for_order,
    hamming_binary,
    read_code,
    reed_solomon,
    repetition_code,
    scalar_extend,
    whole_space,
    zero_code,
)
from .linalg import GuardError
from .radius import AMBIENT_GUARD, list_census, sr_radius_exact, sr_radius_probe, verify_construction
from .registry import RegistryError, registry_load, registry_validate
from .space import space_make

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
FORCED_GUARD = 1 << 28


class UsageError(Exception):
    pass


def _range(text: str) -> list[int]:
    """``a``, ``a:b`` or ``a:b:step`` (inclusive)."""
    try:
        parts = [int(x) for x in text.split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if len(parts) == 1:
        return parts
    if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] < 1):
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    step = parts[2] if len(parts) == 3 else 1
    return list(range(parts[0], parts[1] + 1, step))


def _guard(args) -> int:
    if getattr(args, "force", False):
        print(f"WARNING: size guards raised to 2^28 by --force; this may take a long time and a lot of memory",
              file=sys.stderr)
        return FORCED_GUARD
    return AMBIENT_GUARD


def _component(spec: str):
    """Component code from a file path or a short description.

    ``rep:Q:n``, ``whole:Q:n``, ``zero:Q:n``, ``rs:Q:n:k``, ``ham:r`` (binary Hamming),
    ``bch:e:n``; append ``^h`` to read the code over the degree-h extension.
    """
    base, _, h = spec.partition("^")
    name, *rest = base.split(":")
    try:
        nums = [int(x) for x in rest]
        if name == "rep":
            C = repetition_code(field_for_order(nums[0]), nums[1])
        elif name == "whole":
            C = whole_space(field_for_order(nums[0]), nums[1])
        elif name == "zero":
            C = zero_code(field_for_order(nums[0]), nums[1])
        elif name == "rs":
            C = reed_solomon(field_for_order(nums[0]), nums[1], nums[2])
        elif name == "ham":
            C = hamming_binary(nums[0])
        elif name == "bch":
            C = bch_make(nums[0], nums[1])
        else:
            C = read_code(spec if not h else base)
    except (IndexError, ValueError) as exc:
        if isinstance(exc, (CodeError, FieldError)):
            raise
        raise UsageError(f"bad component description {spec!r}") from exc
    if h:
        if C.known_radius()[0] is None:
            covering_radius_exact(C)
        C = scalar_extend(C, int(h))
    return C


def cmd_table(args) -> int:
    reg = registry_load(args.registry)
    tab = B.table_generate(args.q, args.m, args.t, args.R, reg)
    out = tab.to_pretty() if args.pretty else tab.to_tsv()
    for f in tab.flags:
        out += f"# flag: {f}\n"
    _emit(args, out)
    return EXIT_OK


def cmd_construct(args) -> int:
    guard = _guard(args)
    if args.kind in ("whole", "zero"):
        if None in (args.q, args.m, args.t):
            raise UsageError("--q, --m and --t are required for whole/zero codes")
        sp = space_make(args.q, args.m, args.t)
        C = whole_space_code(sp) if args.kind == "whole" else zero_space_code(sp)
    else:
        if not args.component:
            raise UsageError("give one --component per matrix row")
        comps = [_component(s) for s in args.component]
        for c in comps:
            if c.known_radius()[0] is None:
                covering_radius_exact(c)
        C = (sr_covering_lift if args.kind == "covering" else sr_linearized_lift)(*comps)
    if args.pad:
        C = pad(C, args.pad)
    write_srk(C, args.out, guard=max(guard, MATERIALIZE_GUARD))
    print(f"wrote {C.size} codewords to {args.out}\nclaimed_radius={C.claimed_radius}\nclaim={C.claim_kind}")
    return EXIT_OK


def cmd_radius(args) -> int:
    C = read_srk(args.code)
    if args.mode == "probe":
        rep = sr_radius_probe(C, args.samples, args.seed, guard=_guard(args))
    else:
        rep = sr_radius_exact(C, args.method, guard=_guard(args), threads=args.threads)
    _emit(args, rep.to_text() + "\n")
    return EXIT_OK


def cmd_census(args) -> int:
    C = read_srk(args.code)
    rep = list_census(C, args.d)
    _emit(args, rep.to_text() + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    C = read_srk(args.code)
    rep = verify_construction(C, args.samples, args.seed, _guard(args), args.threads)
    _emit(args, rep.to_text() + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"bound {args.name} needs " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def cmd_bound(args) -> int:
    name = args.name
    reports = []
    if name == "singleton":
        q, m, t, d = _need(args, "q", "m", "t", "d")
        reports.append(B.singleton_like(B.CodeParams.uniform(q, m, t, d)))
    elif name == "strong":
        if args.q is not None and args.q % 2:
            q, m, t, n = _need(args, "q", "m", "t", "n")
            if args.d is not None and args.d != 8 * m + 1:
                raise B.BoundError(f"odd-q strong bound needs d = 8m + 1 = {8 * m + 1}")
            reports.append(B.odd_q_strong_bound(q, m, t, n))
        else:
            q, m, t, d, e, n = _need(args, "q", "m", "t", "d", "e", "n")
            reports.append(B.strong_singleton(q, m, t, d, e, n))
    elif name == "list":
        q, m, t, d = _need(args, "q", "m", "t", "d")
        reports.append(B.list_size_bound(q, m, t, d, args.L))
    elif name == "sphere":
        q, m, t, R = _need(args, "q", "m", "t", "R")
        reports.append(B.sphere_covering_lower(q, m, t, R))
    elif name == "product":
        q, m, t, R = _need(args, "q", "m", "t", "R")
        reports.append(B.product_upper_bound(q, m, t, R, registry_load(args.registry)))
    elif name == "msrd-cap":
        q, m, d = _need(args, "q", "m", "d")
        reports.append(B.msrd_length_cap(q, m, d, args.variant))
    elif name == "block-length":
        q, m, r, R = _need(args, "q", "m", "r", "R")
        reports.extend(B.block_length_bounds(r, R, q, m, args.u, registry_load(args.registry)))
    elif name == "entropy":
        q, m, rho = _need(args, "q", "m", "rho")
        res = B.entropy_threshold(q, m, rho)
        reports.append(B.BoundReport("entropy_threshold", res["threshold"],
                                     [f"H = {res['H']!r}"] + ([res["flag"]] if res["flag"] else []),
                                     "q^m-ary entropy"))
    elif name == "rm":
        q, m, n = _need(args, "q", "m", "n")
        reports.append(B.rm_covering_formula(q, m, n))
    elif name == "discrepancies":
        lines = [d.to_json() for d in B.discrepancies(registry_load(args.registry))]
        _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    else:
        raise UsageError(f"unknown bound {name!r}")
    if args.pretty:
        text = "".join(f"{r.name} = {r.value}\n" + "".join(f"  - {a}\n" for a in r.assumptions) for r in reports)
    else:
        text = "".join(r.to_json() + "\n" for r in reports)
    _emit(args, text)
    return EXIT_OK


def cmd_registry_validate(args) -> int:
    reg = registry_load(args.path)
    issues = registry_validate(reg)
    lines = [f"registry={reg.path}", f"records={len(reg)}", f"issues={len(issues)}"]
    lines += [f"warning: {i}" for i in issues]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


BOUND_NAMES = ["singleton", "strong", "list", "sphere", "product", "msrd-cap", "block-length", "entropy", "rm",
               "discrepancies"]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="srcover", description="Sum-rank covering codes: construction, radii, bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seed=False, threads=False):
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        p.add_argument("--force", action="store_true", help="raise size guards (slow, memory hungry)")
        if seed:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--samples", type=int, default=2000)
        if threads:
            p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("table", help="upper bounds on K_{q,m}(t, R) from the registry")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--t", type=_range, default=_range("6:10"))
    p.add_argument("--R", type=_range, default=_range("2:12:2"))
    p.add_argument("--registry")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="build a sum-rank code and write it as .srk")
    p.add_argument("--kind", choices=["covering", "linearized", "whole", "zero"], default="covering")
    p.add_argument("--component", action="append", help="file or rep:Q:n, rs:Q:n:k, ham:r, bch:e:n, ...[^h]")
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--pad", type=int, help="pad to this block length")
    p.add_argument("--out", required=True)
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("radius", help="covering radius of a .srk code")
    p.add_argument("--code", required=True)
    p.add_argument("--mode", choices=["exact", "probe"], default="exact")
    p.add_argument("--method", choices=["auto", "exhaustive", "coset", "scan"], default="auto")
    common(p, seed=True, threads=True)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("census", help="largest number of codewords in a radius-d ball")
    p.add_argument("--code", required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check a code's claimed radius; exit 1 on FAIL")
    p.add_argument("--code", required=True)
    common(p, seed=True, threads=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="evaluate a closed-form bound")
    p.add_argument("name", choices=BOUND_NAMES)
    for flag in ("q", "m", "t", "d", "e", "n", "R", "r", "u"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--rho", type=float)
    p.add_argument("--variant", choices=["binary-strict", "binary-n5", "odd"], default="binary-strict")
    p.add_argument("--registry")
    common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("registry-validate", help="check a covering-code registry TSV")
    p.add_argument("path", nargs="?")
    common(p)
    p.set_defaults(func=cmd_registry_validate)
    return ap


def _fail(code: str, msg: str, status: int) -> int:
    print(f"error[{code}]: {msg}", file=sys.stderr)
    return status


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage message
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except GuardError as exc:
        return _fail("E-GUARD", f"{exc} (use --force to override)", EXIT_GUARD)
    except RegistryError as exc:
        return _fail("E-REGISTRY", str(exc), EXIT_USAGE)
    except (CodeError, FieldError) as exc:
        return _fail("E-CODE", str(exc), EXIT_USAGE)
    except B.BoundError as exc:
        return _fail("E-PRECONDITION", str(exc), EXIT_USAGE)
    except UsageError as exc:
        return _fail("E-USAGE", str(exc), EXIT_USAGE)
    except FileNotFoundError as exc:
        return _fail("E-FILE", f"{exc.filename}: no such file", EXIT_USAGE)
    except ValueError as exc:
        return _fail("E-INPUT", str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
