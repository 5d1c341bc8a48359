# 6-cycles over K_m x K_n and over (K_m - I) x K_n.
#
# The second family needs a triangle system of K_m - I.  Those come from the
# exact solver, so a cache directory saves the search on later runs.
import tempfile

from tensorcycles import (construct_c6_km_minus_factor_xkn, construct_c6_kmxkn,
                          decide_c6_km_minus_factor_xkn, decide_c6_kmxkn, verify)

# %% K_m x K_n
for m, n in [(3, 2), (7, 4), (4, 9), (5, 11)]:
    v = decide_c6_kmxkn(m, n)
    line = f"K_{m} x K_{n}: {v.clause}"
    if v:
        line += f", {len(construct_c6_kmxkn(m, n))} hexagons"
    print(line)

# %% (K_m - I) x K_n, with a throwaway cache
with tempfile.TemporaryDirectory() as cache:
    for m in (6, 8, 10, 12, 14):
        v = decide_c6_km_minus_factor_xkn(m, 3)
        if not v:
            print(f"(K_{m} - I) x K_3: {v.clause}")
            continue
        dec = construct_c6_km_minus_factor_xkn(m, 3, cache_dir=cache)
        print(f"(K_{m} - I) x K_3: {verify(dec).summary()}")
