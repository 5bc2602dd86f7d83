# Anytime behaviour: the error after every iteration
#
# Stopping the solver early still gives a usable field: every distance is an
# upper bound and the total error only goes down.

# %%
from anydijkstra import convergence_trace, random_lattice, solve

lat = random_lattice((100, 100), 7)
trace = convergence_trace(lat, (0, 0))

for e in trace[:5] + trace[-3:]:
    print(f"{e.iteration:3d}  updates={e.updates:6d}  l1={e.error.l1:12.4f}  wrong={e.error.mismatched}")
print("iterations:", len(trace))

# %% [markdown]
# A crude text plot of log10 error. Most of the error disappears in the first
# handful of iterations; the tail is spent on long paths with many turns.

# %%
import math

top = math.log10(trace[0].error.l1)
for e in trace:
    if e.error.l1 == 0:
        break
    bar = int(40 * math.log10(e.error.l1) / top) if top > 0 else 0
    print(f"{e.iteration:3d} " + "#" * max(bar, 1))

# %%
budget = solve(lat, (0, 0), max_iterations=5)
print("after 5 iterations converged =", budget.converged)
