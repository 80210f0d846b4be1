#!/usr/bin/env python3
"""Smoke test for the python extension module.

Usage: test_smoke.py <configs-dir>
Requires the built module on PYTHONPATH.
"""

import math
import os
import sys

import apsheat

FAILURES = []


def check(ok, what):
    tag = "ok" if ok else "FAIL"
    print(f"  [{tag}] {what}")
    if not ok:
        FAILURES.append(what)


def main():
    configs = sys.argv[1]
    flat = os.path.join(configs, "flat-m1.toml")

    check(apsheat.version() == "0.1.0", "version string")
    check(apsheat.__version__ == apsheat.version(), "dunder version matches")

    rows = apsheat.coefficients(flat)
    check(len(rows) == 3, f"three coefficients (got {len(rows)})")
    check([r["n"] for r in rows] == [0, 1, 2], "weights 0, 1, 2 in order")
    vals = [r["value"] for r in rows]
    check(abs(vals[0] - 1.0) < 1e-12, f"beta0 == 1 (got {vals[0]!r})")
    check(
        abs(vals[1] + 2.2567583341910251478) < 1e-12,
        f"beta1 == -4/sqrt(pi) (got {vals[1]!r})",
    )
    check(abs(vals[2] + 0.25) < 1e-12, f"beta2 == -1/4 (got {vals[2]!r})")
    for r in rows:
        total = r["interior"] + r["boundary"][0] + r["boundary"][1]
        check(
            abs(total - r["value"]) < 1e-12,
            f"beta{r['n']} interior/boundary split sums to the value",
        )

    curve = apsheat.simulate(flat)
    check(curve["grid_n"] == 512, "configured grid size")
    check(curve["bc_kind"] == "spectral", "boundary condition kind")
    check(len(curve["t"]) == len(curve["beta"]), "aligned time and value arrays")
    check(len(curve["t"]) == 41, f"41 samples including t=0 (got {len(curve['t'])})")
    check(curve["t"][0] == 0.0, "curve starts at t = 0")
    check(abs(curve["beta"][0] - 1.0) < 1e-12, "initial content equals beta0")
    check(curve["steps"] > 0, "positive step count")

    curve2 = apsheat.simulate(flat, grid_multiplier=2)
    check(curve2["grid_n"] == 1024, "grid multiplier doubles the grid")

    report = apsheat.compare(flat, grid_multiplier=4)
    check(report["pass"] is True, "comparison verdict")
    check(len(report["coefficients"]) == 3, "three comparison rows")
    names = [r["name"] for r in report["coefficients"]]
    check(names == ["beta0", "beta1", "beta2"], "row names")
    check(all(r["pass"] for r in report["coefficients"]), "all rows within tolerance")
    check(report["grid_n"] == 2048, "refined grid recorded")
    worst = max(r["rel_err"] for r in report["coefficients"])
    check(worst < 2e-2, f"worst relative error {worst:.2e} below 2e-2")

    checks = apsheat.verify("constants")
    check(len(checks) > 0, "constants suite is nonempty")
    check(all(c["pass"] for c in checks), "constants suite passes")
    check(all(c["defect"] <= c["tol"] for c in checks), "defects within tolerances")

    try:
        apsheat.coefficients(os.path.join(configs, "does-not-exist.toml"))
        check(False, "missing config raises")
    except apsheat.ConfigError:
        check(True, "missing config raises ConfigError")
    check(issubclass(apsheat.ConfigError, ValueError), "ConfigError is a ValueError")

    if FAILURES:
        print(f"{len(FAILURES)} smoke check(s) failed")
        return 1
    print("all python smoke checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
