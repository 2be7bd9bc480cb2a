# %% [markdown]
# # Worked examples
#
# Each reconstruction checks its numeric claims as it goes and raises on
# the first one that fails.

# %%
import numpy as np

from hullcover.repro import (
    PARALLELOGRAM_CROSSOVER,
    repro_halfdisk,
    repro_parallelogram,
    repro_square,
    repro_triangle,
)

for rep in (repro_triangle(restarts=8), repro_halfdisk(256), repro_square(restarts=8)):
    print(f"== {rep.name}")
    print("\n".join(rep.lines()))

# %% [markdown]
# The parallelogram family: below the crossover the convex line ABCE wins,
# above it the self-overlapping ABDC wins.

# %%
print("crossover t* =", PARALLELOGRAM_CROSSOVER)
for t in np.linspace(1.0, 3.0, 9):
    v = repro_parallelogram(float(t), optimize=False).values
    print(f"t={t:.2f}  ABCE={v['ABCE']:.5f}  ABDC={v['ABDC']:.5f}  shorter={'ABCE' if v['ABCE'] < v['ABDC'] else 'ABDC'}")
