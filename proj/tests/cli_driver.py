"""End-to-end checks of the ene binary: exit codes, golden bytes, JSON shapes.

Usage: cli_driver.py <path-to-ene> <golden-dir>
"""

import json
import subprocess
import sys

ENE = sys.argv[1]
GOLDEN = sys.argv[2]

failures = []


def run(*args):
    return subprocess.run([ENE, *args], capture_output=True, timeout=120)


def check(label, cond, extra=""):
    if cond:
        print(f"ok   {label}")
    else:
        print(f"FAIL {label} {extra}")
        failures.append(label)


def golden_bytes(name):
    with open(f"{GOLDEN}/{name}", "rb") as f:
        return f.read()


# frozen table output, both formats, with global flags after the subcommand
r = run("euler-table", "7")
check("euler-table text bytes", r.returncode == 0 and r.stdout == golden_bytes("euler_table_7.txt"))

r = run("euler-table", "7", "--format", "json")
check("euler-table json bytes", r.returncode == 0 and r.stdout == golden_bytes("euler_table_7.json"))

r = run("--format", "json", "euler-table", "7")
check("global flag before subcommand", r.returncode == 0 and r.stdout == golden_bytes("euler_table_7.json"))

# evaluation: rational closed forms, series, symbols, transalgebraic values
r = run("eval", "(1 - z/2)*(1 + z/2)", "--format", "json")
v = json.loads(r.stdout)
check("eval rational", r.returncode == 0 and v["kind"] == "rational" and "display" in v)

r = run("eval", "Li(3)", "--order", "6", "--format", "json")
v = json.loads(r.stdout)
check(
    "eval series",
    r.returncode == 0
    and v["kind"] == "series"
    and v["low"] == 0
    and v["high"] == 6
    and v["coeffs"][1] == "1"
    and v["coeffs"][2] == "1/8",
)

r = run("eval", "zinf(2, 3)", "--format", "json")
v = json.loads(r.stdout)
check(
    "eval symbol",
    r.returncode == 0
    and v["kind"] == "symbol"
    and v["order"] == 2
    and v["parameter"] == "9"
    and v["symbol_kind"] == "infinite-zero",
)

r = run("eval", "exp(z/(1 - z))", "--format", "json")
v = json.loads(r.stdout)
check(
    "eval transalgebraic",
    r.returncode == 0 and v["kind"] == "transalgebraic" and "divisor" in v and "exponent_part" in v,
)

r = run("eval", "1 + 2*z")
check("eval text form", r.returncode == 0 and r.stdout.decode().strip() != "")

# series subcommand expands any value at the origin
r = run("series", "exp(z)", "--order", "5", "--format", "json")
v = json.loads(r.stdout)
check(
    "series of exp",
    r.returncode == 0 and v["coeffs"][3] == "1/6" and v["high"] == 5,
)

r = run("series", "exp(1/(1 - z))")
check("series refuses transcendental constants", r.returncode == 2 and b"error:" in r.stderr)

# ene products: divisor arithmetic visible through the series coefficients
r = run("ene", "1 - z/2", "1 - z/3", "--order", "8", "--format", "json")
v = json.loads(r.stdout)
check(
    "ene of linear factors",
    r.returncode == 0
    and v["kind"] == "series"
    and v["coeffs"][1] == "-1/6"
    and all(c == "0" for c in v["coeffs"][2:]),
)

r = run("ene", "exp(R(1, 1))", "exp(-Li(2))", "--order", "12", "--format", "json")
v = json.loads(r.stdout)
check(
    "polylog inversion",
    r.returncode == 0 and v["coeffs"][1] == "-1" and all(c == "0" for c in v["coeffs"][2:]),
)

r = run("ene", "zinf(2, 2)", "zinf(3, 1)", "--format", "json")
v = json.loads(r.stdout)
check("ene of symbols", r.returncode == 0 and v["kind"] == "symbol" and v["order"] == 5)

# verify: exit 0 on pass, 1 on failure, 2 on bad usage
r = run("verify", "polylog", "--trials", "20")
check("verify polylog", r.returncode == 0 and b"suite polylog: pass" in r.stdout)

r = run("verify", "ring", "--trials", "10", "--format", "json")
v = json.loads(r.stdout)
check(
    "verify ring json",
    r.returncode == 0 and v["pass"] is True and v["suite"] == "ring" and len(v["checks"]) > 0,
)

r = run("verify", "bridge", "--trials", "10", "--negative-control")
check("negative control fails", r.returncode == 1 and b"FAIL" in r.stdout)

r = run("verify", "nope")
check("unknown suite", r.returncode == 2 and b"unknown verify suite" in r.stderr)

r = run("verify", "ring", "--order", "4")
check("verify order floor", r.returncode == 2 and b"--order >= 8" in r.stderr)

# limit: convergence study over a sample grid
r = run("limit", "--expr", "exp(z)", "--kmin", "8", "--kmax", "32", "--format", "json")
v = json.loads(r.stdout)
check(
    "limit study",
    r.returncode == 0
    and v["k"] == [8, 16, 32]
    and len(v["sup_error"]) == 3
    and v["sup_error"][2] < v["sup_error"][0]
    and "decay_exponent" in v,
)

r = run("limit", "--expr", "exp(z)", "--grid", "blob:1,2")
check("bad grid shape", r.returncode == 2 and b"unknown grid shape" in r.stderr)

r = run("limit", "--expr", "1 - z", "--grid", "circle:1,0,0.01,4")
check("exclusion zone enforced", r.returncode == 2 and b"exclusion" in r.stderr)

# parse and usage errors exit 2 with a located message
r = run("eval", "1 -")
check(
    "parse error position",
    r.returncode == 2 and b"parse error: expected operand at line 1, column 4" in r.stderr,
)

r = run("eval", "w + 1")
check("unknown identifier", r.returncode == 2 and b"unknown identifier 'w'" in r.stderr)

r = run("frobnicate")
check("unknown subcommand", r.returncode == 2)

r = run()
check("missing subcommand", r.returncode == 2)

r = run("--help")
check("help exits 0", r.returncode == 0 and b"ene" in r.stdout)

if failures:
    print(f"{len(failures)} failing check(s): {failures}")
    sys.exit(1)
print("all cli checks passed")
