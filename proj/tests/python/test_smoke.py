"""Smoke tests for the python bindings and the command-line tool."""

import json
import math
import os
import subprocess
import sys

import rxch


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def test_bindings():
    m = rxch.builtin("chr2")
    assert m.size == 3
    assert m.has_lump()

    d = rxch.InputDistribution.binary(0.0, 1.0, 0.99)
    pi = rxch.stationary(m, d)
    assert approx(pi[0], 850.0 / 4200.0, 1e-12)

    info = rxch.mi_rate_discrete(m, d, 1e-5)
    assert info.rate_per_use > 0.0
    assert approx(info.rate_per_second, info.rate_per_use / 1e-5, 1e-12)

    lim = rxch.limit_rate(m, d)
    assert approx(lim.rate, lim.flux.total * lim.divergence, 1e-12)
    assert approx(lim.divergence, math.log(100.0), 1e-12)

    cap = rxch.capacity_binary(m, 0.0, 1.0, rxch.RateMode.limit)
    bits = cap.value / math.log(2.0)
    assert 64.5 < bits < 67.5
    assert 0.98 < cap.argmax_p_low < 1.0

    n2 = rxch.mi_bruteforce(m, d, 1e-5, 2)
    n1 = rxch.mi_bruteforce(m, d, 1e-5, 1)
    assert abs(2 * n2 - n1 - info.rate_per_use) < 1e-10

    est = rxch.estimate_mi_y(m, d, 1e-5, 500000, 16, 7)
    assert abs(est.mean - info.rate_per_second) <= 4 * est.std_error

    text = rxch.serialize_model(m)
    again = rxch.parse_model(text)
    assert rxch.serialize_model(again) == text


def test_cli():
    cli = os.environ["RXCH_CLI"]

    out = subprocess.run(
        [cli, "mi", "--model", "chr2", "--dist", "1:1.0", "--dt", "1e-5"],
        capture_output=True, text=True, check=True)
    doc = json.loads(out.stdout)
    assert doc["rate_per_second"] == 0.0
    assert doc["config"]["subcommand"] == "mi"

    # Identical invocations are byte-identical.
    rerun = subprocess.run(
        [cli, "mi", "--model", "chr2", "--dist", "1:1.0", "--dt", "1e-5"],
        capture_output=True, text=True, check=True)
    assert rerun.stdout == out.stdout

    cap = subprocess.run(
        [cli, "capacity", "--model", "chr2", "--alphabet", "0,1", "--mode", "limit"],
        capture_output=True, text=True, check=True)
    doc = json.loads(cap.stdout)
    assert abs(doc["value"] - 66.0) <= 1.5
    assert 0.98 <= doc["p_L"] <= 1.0

    ok = subprocess.run([cli, "validate", "chr2"], capture_output=True, text=True)
    assert ok.returncode == 0

    bad = subprocess.run([cli, "frobnicate"], capture_output=True, text=True)
    assert bad.returncode == 1

    src = os.environ["RXCH_SOURCE_DIR"]
    shipped = subprocess.run(
        [cli, "validate", os.path.join(src, "models", "cam.rxm.json")],
        capture_output=True, text=True)
    assert shipped.returncode == 0

    sweep = subprocess.run(
        [cli, "sweep", "--model", "chr2", "--alphabet", "0,1", "--dt", "1e-5",
         "--grid", "11"],
        capture_output=True, text=True, check=True)
    lines = [l for l in sweep.stdout.splitlines() if l and not l.startswith("#")]
    assert lines[0] == "p_L,dt,rate_bits_per_s,mode"
    assert len(lines) == 1 + 11 * 2  # header + (discrete + limit) per grid point


def main():
    test_bindings()
    test_cli()
    print("python smoke: PASS")


if __name__ == "__main__":
    sys.exit(main())
