# Which K_m x K_n split into 4-cycles, and what the pieces look like.
from tensorcycles import construct_c4_kmxkn, decide_c4_kmxkn, verify

# %% Verdict table for 2 <= m, n <= 10; the letter is the clause that fired
print("    " + "".join(f"{n:>4}" for n in range(2, 11)))
for m in range(2, 11):
    row = []
    for n in range(2, 11):
        v = decide_c4_kmxkn(m, n)
        row.append(v.clause[-2:] if v else " .")
    print(f"{m:>4}" + "".join(f"{c:>4}" for c in row))

# %% A few constructions, each self-verified
for m, n in [(3, 4), (4, 3), (5, 6), (9, 8), (13, 12)]:
    dec = construct_c4_kmxkn(m, n)
    cert = verify(dec)
    print(f"K_{m} x K_{n}: {cert.cycle_count} cycles over {cert.edge_count} edges, {cert.status}")

# %% A verdict comes with its reason
print(decide_c4_kmxkn(6, 6).reason)
