"""End-to-end checks of the helly command-line tool.

Usage: test_cli.py <path-to-helly-binary>
"""

import csv
import io
import subprocess
import sys
import tempfile
import os

BINARY = None
FAILURES = 0


def run(*args, expect_code=0):
    global FAILURES
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        FAILURES += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, expected {expect_code}")
        print(f"  stdout: {proc.stdout!r}\n  stderr: {proc.stderr!r}")
    return proc


def check(cond, label):
    global FAILURES
    if cond:
        print(f"ok   {label}")
    else:
        FAILURES += 1
        print(f"FAIL {label}")


def write(path, text):
    with open(path, "w") as f:
        f.write(text)


def main():
    global BINARY
    BINARY = sys.argv[1]
    tmp = tempfile.mkdtemp(prefix="helly_cli_")
    p4 = os.path.join(tmp, "p4.txt")
    c4 = os.path.join(tmp, "c4.txt")
    costs = os.path.join(tmp, "costs.txt")
    write(p4, "p 4 3\n0 1\n1 2\n2 3\n")
    write(c4, "p 4 4\n0 1\n1 2\n2 3\n3 0\n")
    write(costs, "0 5\n")

    out = run("center", "--graph", p4).stdout
    check(out in ("vertex 1 ecc 2\n", "vertex 2 ecc 2\n"), "center on P4")

    out = run("center", "--graph", p4, "--costs", costs).stdout
    check(out == "vertex 0 ecc 3\n", "center with a heavy endpoint")

    out = run("center", "--graph", p4, "--verify").stdout
    check(out.endswith("verify ok\n"), "center --verify agrees with the oracle")

    out = run("median", "--graph", p4).stdout
    check(out == "medians 1 2 td 4\n", "median on P4")

    out = run("radius", "--graph", p4, "--k", "2").stdout
    check(out == "R 2 guarantee [2, 2]\n", "radius on P4")

    out = run("radius", "--graph", p4, "--k", "2", "--alpha", "1", "--eps-scale", "2.0").stdout
    check(out.startswith("R ") and "guarantee" in out, "radius with alpha and eps-scale")

    out = run("check", "--graph", c4, "--k", "2").stdout
    lines = out.splitlines()
    check(lines[0] == "holds=false k=2 alpha=0", "check rejects C4")
    check(len(lines) > 1 and lines[1].startswith("witness ") and len(lines[1].split()) == 4,
          "check witness has three vertices")

    out = run("check", "--graph", p4, "--k", "2").stdout
    check(out == "holds=true k=2 alpha=0\n", "check accepts P4")

    # determinism: identical command lines give byte-identical output
    a = run("center", "--graph", p4, "--seed", "7").stdout
    b = run("center", "--graph", p4, "--seed", "7").stdout
    check(a == b, "center is deterministic for a fixed seed")
    a = run("radius", "--graph", p4, "--k", "2", "--seed", "9").stdout
    b = run("radius", "--graph", p4, "--k", "2", "--seed", "9").stdout
    check(a == b, "radius is deterministic for a fixed seed")

    # gen round-trips through the parser and feeds the other commands
    grid = os.path.join(tmp, "grid.txt")
    run("gen", "--family", "king-grid", "--rows", "4", "--cols", "5", "--out", grid)
    first = open(grid).readline().split()
    # 4x5 king grid: 16 horizontal + 15 vertical + 24 diagonal edges
    check(first == ["p", "20", "55"], "gen king-grid header")
    out = run("center", "--graph", grid, "--verify").stdout
    check(out.endswith("verify ok\n"), "center verifies on a generated grid")

    tree = run("gen", "--family", "tree", "--n", "30", "--seed", "3").stdout
    tree2 = run("gen", "--family", "tree", "--n", "30", "--seed", "3").stdout
    check(tree == tree2 and tree.startswith("p 30 29\n"), "gen tree is deterministic")

    chordal = run("gen", "--family", "chordal", "--n", "25", "--density", "0.7").stdout
    check(chordal.startswith("p 25 "), "gen chordal emits a graph")

    # bench CSV output
    out = run("bench", "--family", "interval", "--algo", "center", "--sizes", "10,20", "--seeds", "1,2").stdout
    rows = list(csv.DictReader(io.StringIO(out)))
    check(len(rows) == 4, "bench grid has one row per size/seed pair")
    check(set(r["command"] for r in rows) == {"center"}, "bench rows carry the command")
    check([r["n"] for r in rows] == ["10", "10", "20", "20"], "bench rows ordered by size")
    check(all(float(r["wallclock_ms"]) >= 0 for r in rows), "bench wallclock parses")

    csv_file = os.path.join(tmp, "bench.csv")
    run("bench", "--family", "tree", "--algo", "apsp", "--sizes", "15", "--out", csv_file)
    with open(csv_file) as f:
        rows = list(csv.DictReader(f))
    check(len(rows) == 1 and rows[0]["command"] == "apsp", "bench --out writes the CSV file")

    # exit codes: 1 for parse/validation, 2 for algorithmic failure
    bad = os.path.join(tmp, "bad.txt")
    write(bad, "p 3 1\n0 1\n")
    proc = run("center", "--graph", bad, expect_code=1)
    check("not connected" in proc.stderr, "disconnected input names the failure")
    write(bad, "p 2 1\n0 9\n")
    run("center", "--graph", bad, expect_code=1)
    run("center", "--graph", os.path.join(tmp, "missing.txt"), expect_code=1)
    run("center", expect_code=1)
    run("radius", "--graph", p4, "--k", "1", expect_code=1)
    run("center", "--graph", p4, "--seed", "banana", expect_code=1)

    proc = run("center", "--graph", c4, expect_code=2)
    check(proc.stderr.startswith("error: gate not found"), "non-Helly input reports the missing gate")

    if FAILURES:
        print(f"{FAILURES} failures")
        sys.exit(1)
    print("all cli checks passed")


if __name__ == "__main__":
    main()
