"""
Size bounds for sum-rank codes
==============================

Singleton-like and strong bounds, list sizes, MSRD length caps and the
entropy threshold, all on a few concrete parameter sets.
"""

from srcover.bounds import (
    CodeParams,
    block_length_bounds,
    discrepancies,
    entropy_threshold,
    list_size_bound,
    msrd_length_cap,
    rm_covering_formula,
    singleton_like,
    sphere_covering_lower,
    strong_singleton,
)
from srcover.registry import registry_load

reg = registry_load()

weak = singleton_like(CodeParams.uniform(2, 2, 31, 9))
strong = strong_singleton(2, 2, 31, 9, 1, 5)
print("Singleton-like exponent", weak.extra["exponent"], " strong exponent", strong.extra["exponent"])
for a in strong.assumptions:
    print("  assumes", a)

# mixed block sizes
p = CodeParams(3, ((3, 3), (2, 3), (1, 2)), 4)
print("mixed blocks:", singleton_like(p).extra, singleton_like(p).value)

print("sphere covering lower bound, t=6 R=4:", sphere_covering_lower(2, 2, 6, 4).value)
print("list size, t=4 d=2 L=3:", list_size_bound(2, 2, 4, 2, 3).value)

for v in ("binary-n5", "binary-strict"):
    print("MSRD length cap", v, msrd_length_cap(2, 2, 9, v).value)

for rep in block_length_bounds(4, 2, 2, 2, registry=reg):
    print(rep.name, rep.value, "|", "; ".join(rep.assumptions))

rm = rm_covering_formula(2, 2, 3)
print("Reed-Muller over GF(4), n=3:", rm.extra)

for rho in (0.1, 0.25, 0.5):
    print(f"rho={rho}: 1 - H = {entropy_threshold(2, 2, rho)['threshold']:.6f}")

for d in discrepancies(reg):
    print(d.key, "|", d.stated, "->", d.computed)
