# Sweep solver against a compiled binary-heap Dijkstra
#
# Both run on the same seeded lattices. The CSV matches what
# ``anydijkstra bench`` prints.

# %%
import os

from anydijkstra.bench import CSV_HEADER, run_bench

sizes = [128, 256, 512]
threads = sorted({1, os.cpu_count() or 1})
rows = run_bench(sizes, seeds=[1], threads=threads, repeats=3)

print(CSV_HEADER)
for r in rows:
    print(r.csv())

# %% [markdown]
# K grows roughly like half the side length, and every iteration touches all
# n nodes, so the sweep does about K*n work against the heap's n log n. On a
# single core the compiled heap wins clearly. The sweep's case rests on what
# the heap cannot do: lines in a sweep are independent (threads, SIMD lanes),
# memory is read in long contiguous runs, and any prefix of the run is a
# usable upper bound.

# %%
for size in sizes:
    sweep = min(r.wall_ms for r in rows if r.size == size and r.algo == "sweep")
    heap = next(r.wall_ms for r in rows if r.size == size and r.algo == "heap")
    print(f"{size}x{size}: heap/sweep = {heap / sweep:.2f}")
