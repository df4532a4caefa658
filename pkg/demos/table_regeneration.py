"""
Upper bounds on K_{2,2}(t, R)
=============================

Rebuild the covering-size table from the shipped quaternary registry and
compare each cell with the published value.
"""

from srcover.bounds import reference_value, table_generate
from srcover.registry import registry_load

reg = registry_load()
res = table_generate(2, 2, range(6, 11), range(2, 13, 2), reg)
print(res.to_pretty())

# each cell is a product of registry entries over a split of R into two parts
cell = res.cells[10, 8]
print("t=10 R=8 split", cell.extra["partition"], "factors", cell.extra["factors"])

for t in res.ts:
    for R in res.Rs:
        ref = reference_value(t, R)
        if res.value(t, R) != ref:
            print(f"differs at t={t} R={R}: {res.value(t, R)} vs published {ref}")

for f in res.flags:
    print("flag:", f)
