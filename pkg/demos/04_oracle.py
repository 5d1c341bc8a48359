# The exact solver as an independent check on the deciders.
#
# On small instances the search either finds a decomposition or exhausts
# every option.  It also shows where the 6-cycle condition is only
# sufficient: K_4 x K_5 has a hexagon decomposition that the rule rejects.
from tensorcycles import Complete, CompleteMinusFactor, SearchBudget, Tensor, decide, solve, verify

# %% Agreement on a handful of small products
for m, n, k in [(3, 3, 4), (3, 2, 4), (3, 4, 4), (3, 3, 6), (4, 3, 6), (5, 2, 4)]:
    fam = Tensor(Complete(m), Complete(n))
    outcome = solve(fam, k)
    print(f"K_{m} x K_{n}, k={k}: decider {bool(decide(fam, k))}, "
          f"solver {outcome.status} after {outcome.nodes_explored} nodes")

# %% A decomposition the 6-cycle rule does not predict
fam = Tensor(Complete(4), Complete(5))
print("rule says:", decide(fam, 6).clause)
outcome = solve(fam, 6, SearchBudget(max_millis=60_000))
print("solver says:", outcome.status)
if outcome.found:
    print(verify(outcome.decomposition).summary())

# %% Budgets turn hard searches into a clean BUDGET_EXCEEDED
print(solve(CompleteMinusFactor(18), 3, SearchBudget(max_nodes=1000)).status)
