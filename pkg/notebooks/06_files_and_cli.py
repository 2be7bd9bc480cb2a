# %% [markdown]
# # Files, drawings and the command line
#
# Figures and curves are small JSON files. Canonical files round-trip byte
# for byte; the CLI reads them and exits with a code that says what
# happened.

# %%
import math
import tempfile
from pathlib import Path

from hullcover import io
from hullcover.cli import main
from hullcover.curves import Curve
from hullcover.geometry import convex_hull

work = Path(tempfile.mkdtemp(prefix="hullcover-"))
triangle = convex_hull([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])
io.save_figure(work / "triangle.json", triangle)
io.save_curve(work / "two_sides.json", Curve(triangle.vertices[1:] + triangle.vertices[:1]))
print((work / "triangle.json").read_text())

text = io.dump_figure(triangle)
print("round trip identical:", io.dump_figure(io.parse_figure(text)) == text)

# %%
code = main(["verify", str(work / "triangle.json"), str(work / "two_sides.json")])
print("exit code", code)

# %%
code = main(["fuzz", "--count", "200", "--seed", "42", "--csv", str(work / "fuzz.csv")])
print("exit code", code)
print((work / "fuzz.csv").read_text().splitlines()[:3])

# %%
main(["render", str(work / "triangle.json"), str(work / "two_sides.json"), "--out", str(work / "triangle.svg")])
print((work / "triangle.svg").read_text()[:400])
print("files in", work)
