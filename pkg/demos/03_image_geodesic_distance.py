# Geodesic distance on a grayscale image
#
# Each edge costs the absolute intensity difference between its two pixels,
# so distances grow slowly inside flat regions and jump across edges.

# %%
import numpy as np

from anydijkstra import GrayImage, image_to_costs, solve
from anydijkstra.formats import distance_image
from anydijkstra.costs import write_pgm

yy, xx = np.mgrid[:64, :64]
disc = ((yy - 32) ** 2 + (xx - 32) ** 2 < 18 ** 2) * 200
img = GrayImage(disc + (xx // 8), 255)

lat = image_to_costs(img)
res = solve(lat, (32, 32))
print("K =", res.k_iterations)

# %% [markdown]
# Inside the disc only the faint horizontal ramp costs anything. Leaving it
# costs the 200-level step once.

# %%
print("centre to disc rim :", res.bed[32, 49])
print("centre to corner   :", res.bed[0, 0])

# %%
with open("geodesic.pgm", "wb") as fh:
    fh.write(write_pgm(distance_image(res.bed)))
print("wrote geodesic.pgm")
