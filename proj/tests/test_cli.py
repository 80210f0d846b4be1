#!/usr/bin/env python3
"""Contract test for the command line interface.

Usage: test_cli.py <apsheat-binary> <configs-dir>
Exercises exit codes, output formats, and error reporting end to end.
"""

import json
import math
import os
import re
import subprocess
import sys
import tempfile

FAILURES = []


def check(ok, what):
    tag = "ok" if ok else "FAIL"
    print(f"  [{tag}] {what}")
    if not ok:
        FAILURES.append(what)


def run(binary, *args):
    proc = subprocess.run(
        [binary, *args], capture_output=True, text=True, timeout=300
    )
    return proc.returncode, proc.stdout, proc.stderr


def strip_timestamp(text):
    return re.sub(r'"generated_at": "[^"]*"', '"generated_at": ""', text)


def main():
    binary, configs = sys.argv[1], sys.argv[2]
    flat = os.path.join(configs, "flat-m1.toml")
    twisted = os.path.join(configs, "twisted-m2.toml")
    warped = os.path.join(configs, "warped-m2.toml")

    print("coeffs: closed-form values on the shipped configs")
    rc, out, err = run(binary, "coeffs", flat)
    check(rc == 0, f"flat coeffs exit code 0 (got {rc}, stderr: {err.strip()})")
    doc = json.loads(out)
    check(doc["schema_version"] == 1, "schema version 1")
    vals = [row["value"]["re"] for row in doc["coefficients"]]
    ims = [row["value"]["im"] for row in doc["coefficients"]]
    check(abs(vals[0] - 1.0) < 1e-12, f"beta0 == 1 (got {vals[0]!r})")
    check(
        abs(vals[1] + 2.2567583341910251478) < 1e-12,
        f"beta1 == -4/sqrt(pi) (got {vals[1]!r})",
    )
    check(abs(vals[2] + 0.25) < 1e-12, f"beta2 == -1/4 (got {vals[2]!r})")
    check(max(abs(v) for v in ims) < 1e-14, "imaginary parts vanish")

    rc, out2, _ = run(binary, "coeffs", flat)
    check(
        strip_timestamp(out) == strip_timestamp(out2),
        "coeffs output is deterministic up to the timestamp",
    )

    rc, out, _ = run(binary, "coeffs", twisted)
    vals = [row["value"]["re"] for row in json.loads(out)["coefficients"]]
    check(abs(vals[0] - 2.0 * math.pi) < 1e-12, "twisted beta0 == 2 pi")
    check(abs(vals[2] + math.pi / 2.0) < 1e-12, "twisted beta2 == -pi/2")

    rc, out, _ = run(binary, "coeffs", warped)
    vals = [row["value"]["re"] for row in json.loads(out)["coefficients"]]
    check(
        abs(vals[0] - 2.0 * math.pi * 1.0694112481952379416) < 1e-12,
        "warped beta0 == 2 pi * weighted interval volume",
    )
    check(abs(vals[2] + 1.6 * math.pi) < 1e-12, "warped beta2 == -1.6 pi")

    print("simulate: CSV shape and grid refinement")
    with tempfile.TemporaryDirectory() as tmp:
        csv_path = os.path.join(tmp, "curve.csv")
        rc, out, err = run(binary, "simulate", flat, "--csv", csv_path)
        check(rc == 0, f"simulate exit code 0 (got {rc}, stderr: {err.strip()})")
        check("grid_n=512" in out, f"reports configured grid (stdout: {out.strip()})")
        with open(csv_path) as fh:
            lines = fh.read().splitlines()
        check(lines[0] == "t,beta_real,beta_imag", "CSV header is exact")
        check(len(lines) == 42, f"one header plus 41 rows (got {len(lines)})")
        times = [float(line.split(",")[0]) for line in lines[1:]]
        check(times[0] == 0.0, "curve starts at t = 0")
        check(
            all(a < b for a, b in zip(times, times[1:])),
            "sample times strictly increase",
        )
        beta0 = float(lines[1].split(",")[1])
        check(abs(beta0 - 1.0) < 1e-12, f"initial content equals beta0 (got {beta0!r})")

        rc, out, _ = run(binary, "simulate", flat, "--csv", csv_path, "--grid", "2x")
        check(rc == 0, "refined simulate exit code 0")
        check("grid_n=1024" in out, f"--grid 2x doubles the grid (stdout: {out.strip()})")

    print("verify: identity suites")
    rc, out, err = run(binary, "verify", "--suite", "algebra")
    check(rc == 0, f"algebra suite exit code 0 (got {rc})")
    check("all checks passed" in out, "algebra suite summary line")
    check("FAIL" not in out, "no failing checks listed")

    print("compare: closed form against the oracle")
    rc, out, err = run(binary, "compare", flat, "--json", "--grid", "4x")
    check(rc == 0, f"compare exit code 0 (got {rc}, stderr: {err.strip()})")
    doc = json.loads(out)
    check(doc["pass"] is True, "comparison verdict is pass")
    check(doc["solver"]["grid_n"] == 2048, "4x refinement recorded in the report")
    check(len(doc["coefficients"]) == 3, "three coefficient rows")
    check(all(row["pass"] for row in doc["coefficients"]), "all rows within tolerance")

    print("error paths: exit codes and diagnostics")
    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "bad.toml")
        with open(bad, "w") as fh:
            fh.write("[model]\nregime = \"flat\"\nm = 1\nlattice = 3\n")
        rc, out, err = run(binary, "coeffs", bad)
        check(rc == 2, f"unknown key exits 2 (got {rc})")
        check("config error:" in err, "config error prefix on stderr")
        check("bad.toml:4" in err, f"diagnostic carries path:line (stderr: {err.strip()})")

        missing = os.path.join(tmp, "nope.toml")
        rc, out, err = run(binary, "coeffs", missing)
        check(rc == 2, f"missing file exits 2 (got {rc})")

        critical = os.path.join(tmp, "critical.toml")
        with open(critical, "w") as fh:
            fh.write(
                "[model]\n"
                "regime = \"twisted\"\n"
                "m = 2\n"
                "delta1 = 0.5\n"
                "delta2 = 1.0\n"
                "varrho = [0.3]\n\n"
                "[[phi]]\n"
                "mode = [1]\n"
                "component = 0\n"
                "poly = [1.0]\n\n"
                "[[rho]]\n"
                "mode = [-1]\n"
                "component = 0\n"
                "poly = [1.0]\n\n"
                "[oracle]\n"
                "grid_n = 128\n"
                "bc = \"spectral\"\n"
            )
        rc, out, err = run(binary, "simulate", critical, "--csv", "-")
        check(rc == 3, f"boundary-critical mode exits 3 (got {rc})")
        check("math domain error" in err, "domain error prefix on stderr")
        check("component" in err and "mode (" in err, f"names the offending mode ({err.strip()})")

        rc, out, err = run(binary, "verify", "--suite", "nonsense")
        check(rc == 2, f"unknown suite exits 2 (got {rc})")

        rc, out, err = run(binary, "simulate", flat, "--grid", "3x")
        check(rc == 2, f"unknown grid multiplier exits 2 (got {rc})")

    rc, out, err = run(binary)
    check(rc != 0, "missing subcommand is rejected")

    if FAILURES:
        print(f"{len(FAILURES)} CLI contract check(s) failed")
        return 1
    print("all CLI contract checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
