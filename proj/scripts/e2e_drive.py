#!/usr/bin/env python3
"""End-to-end drive of the flsde CLI against independent closed forms.

Exercises the built binary on the bundled scenarios and checks its output
against hand-derived solutions of the two demo systems. Run from the
repository root after building:

    python3 scripts/e2e_drive.py [path-to-flsde-binary]
"""

import json
import math
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1] if len(sys.argv) > 1 else "./build/tools/flsde"
fails = []


def run(args, expect_code=0):
    r = subprocess.run([CLI] + args, capture_output=True, text=True)
    if r.returncode != expect_code:
        fails.append(f"{args}: exit {r.returncode} != {expect_code}: {r.stderr.strip()}")
    return r.stdout


def crisp1(t):
    return (5 * (t + 2) + math.exp(-t) / 3 + 14 / 3 * math.exp(2 * t),
            5 * t * t + 4 / 3 * math.exp(-t) + 14 / 3 * math.exp(2 * t))


def hom1(a, b, t):
    c1 = (-a + b) / 3
    c2 = (4 * a - b) / 3
    return (c1 * math.exp(-t) + c2 * math.exp(2 * t),
            4 * c1 * math.exp(-t) + c2 * math.exp(2 * t))


def crisp3(t):
    return (4 / 3 + 98.6 * math.exp(-t) + math.exp(-6 * t) / 15,
            1.5 + 98.6 * math.exp(-t) - 0.1 * math.exp(-6 * t))


def hom3(a, b, t):
    c1 = (3 * a + 2 * b) / 5
    c2 = (a - b) / 5
    return (c1 * math.exp(-t) + 2 * c2 * math.exp(-6 * t),
            c1 * math.exp(-t) - 3 * c2 * math.exp(-6 * t))


# 1. solve: trajectory endpoint against the closed form
out = run(["solve", "--scenario", "data/example1.json"])
t, x, y = (float(v) for v in out.strip().splitlines()[-1].split(","))
xr, yr = crisp1(t)
if t != 0.5 or abs(x - xr) > 1e-6 or abs(y - yr) > 1e-6:
    fails.append(f"solve endpoint off: t={t}, dx={x - xr}, dy={y - yr}")

# 2. cut polygon vertices = closed-form images of the initial cut corners
rec = json.loads(run(["cut", "--scenario", "data/example1.json",
                      "--time", "0.25", "--alpha", "0.5"]))
t = 0.25
expected = []
for cx in (-0.25, 0.5):
    for cy in (-1.0, 1.5):
        hx, hy = hom1(cx, cy, t)
        cxr, cyr = crisp1(t)
        expected.append((cxr + hx, cyr + hy))
for g, e in zip(sorted(map(tuple, rec["polygon"])), sorted(expected)):
    if max(abs(g[0] - e[0]), abs(g[1] - e[1])) > 1e-7:
        fails.append(f"cut polygon vertex {g} vs {e}")

# 3. membership of an analytically propagated member (grade 0.5)
t = 0.2
hx, hy = hom3(15.0, -15.0, t)  # offset of initial point (115, 85)
xcr, ycr = crisp3(t)
grade = float(run(["membership", "--scenario", "data/example3.json",
                   "--time", "0.2", "--point", f"{xcr + hx!r},{ycr + hy!r}"]))
if abs(grade - 0.5) > 1e-6:
    fails.append(f"membership grade {grade} != 0.5")

# 4. support vertices at t = 0
v = json.loads(run(["vertices", "--scenario", "data/example1.json",
                    "--time", "0", "--alpha", "0"]))
if sorted(map(tuple, v)) != [(14.5, 4.0), (14.5, 9.0), (16.0, 4.0), (16.0, 9.0)]:
    fails.append(f"support vertices wrong: {v}")

# 5. plotdata files: trajectory + closed polygon
with tempfile.TemporaryDirectory() as d:
    run(["plotdata", "--scenario", "data/example2.json",
         "--time", "0.25", "--alpha", "0.5", "--out", d])
    names = sorted(os.listdir(d))
    if names != ["cut_t0.25_alpha0.5.csv", "trajectory.csv"]:
        fails.append(f"plotdata files: {names}")
    else:
        rows = open(os.path.join(d, names[0])).read().strip().splitlines()
        if rows[1] != rows[-1]:
            fails.append("polygon not closed")

# 6. verify passes on all bundled scenarios
for name in ("example1", "example2", "example3"):
    rep = json.loads(run(["verify", "--scenario", f"data/{name}.json", "--seed", "123"]))
    if not rep["passed"]:
        fails.append(f"verify failed on {name}")

# 7. exit codes for input errors
run(["cut", "--scenario", "data/nope.json", "--time", "0", "--alpha", "0"], expect_code=2)
run(["membership", "--scenario", "data/example1.json",
     "--time", "0", "--point", "x"], expect_code=2)

print("END-TO-END:", "ALL OK" if not fails else f"{len(fails)} FAILURES")
for f in fails:
    print(" -", f)
sys.exit(0 if not fails else 1)
