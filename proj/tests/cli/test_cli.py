#!/usr/bin/env python3
"""End-to-end checks of the covertop command line tool.

Usage: test_cli.py PATH_TO_COVERTOP DATA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile

TOOL, DATA = sys.argv[1], sys.argv[2]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ, **(env or {}))
    proc = subprocess.run([TOOL, *args], capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout, proc.stderr


def data(name):
    return os.path.join(DATA, name + ".json")


def check(name, condition, detail=""):
    if not condition:
        failures.append(f"{name}: {detail}")


def expect_output(name, args, expected, code=0):
    rc, out, err = run(*args)
    check(name, rc == code and out.strip() == expected, f"rc={rc} out={out!r} err={err!r}")


def report(reports, law):
    return next(r for r in reports if r["law"] == law)


expect_output("saturate", ["saturate", "--input", data("abc"), "--subset", "b,c"], "a b c")
expect_output("saturate empty", ["saturate", "--input", data("free3"), "--subset", ""], "")
rc, out, err = run("saturate", "--input", data("abc"), "--subset", "b,q")
check("unknown symbol", rc == 2 and "q" in err, f"rc={rc} err={err!r}")
rc, _, _ = run("saturate", "--input", os.path.join(DATA, "missing.json"), "--subset", "a")
check("missing file", rc == 2, f"rc={rc}")
rc, _, _ = run("lattice")
check("missing flag", rc == 2, f"rc={rc}")
rc, _, err = run("lattice", "--input", data("abc"), env={"COVERTOP_MAX_BASE": "2"})
check("size cap", rc == 3 and "cap" in err, f"rc={rc} err={err!r}")

expect_output("lattice chain", ["lattice", "--input", data("chain")], "3 points")
expect_output("lattice preorder", ["lattice", "--input", data("preorder")], "5 points")
expect_output("lattice free", ["lattice", "--input", data("free3")], "8 points")

with tempfile.TemporaryDirectory() as tmp:
    dot = os.path.join(tmp, "chain.dot")
    run("lattice", "--input", data("chain"), "--dot", dot)
    with open(dot) as f:
        text = f.read()
    check("dot nodes", text.count("label=") == 3, text)
    check("dot edges", text.count("->") == 2, text)
    dot2 = os.path.join(tmp, "chain2.dot")
    run("lattice", "--input", data("chain"), "--dot", dot2)
    with open(dot2) as f:
        check("dot deterministic", f.read() == text)

rc, out, _ = run("laws", "--input", data("monoid"))
laws = json.loads(out)
weak = report(laws, "weakening")
check("monoid weakening", rc == 0 and not weak["passed"]
      and weak["witness"]["elements"] == {"b": "g", "c": "g"}, json.dumps(weak))
rc2, out2, _ = run("laws", "--input", data("monoid"), "--threads", "1")
check("laws deterministic", out == out2)

for level in ["basic", "convergent", "unital", "formal"]:
    rc, out, _ = run("checkmap", "--source", data("chain"), "--target", data("chain"),
                     "--relation", data("identity_chain"), "--level", level)
    result = json.loads(out) if rc == 0 else {}
    check(f"checkmap {level}", result.get("passed") is True and result.get("level") == level, out)

with tempfile.TemporaryDirectory() as tmp:
    q = os.path.join(tmp, "q.json")
    l = os.path.join(tmp, "l.json")
    rc, out, _ = run("free", "--apply", "Q", "--input", data("monoid"), "--out", q)
    check("free Q", rc == 0 and json.loads(out)["stage"] == "Q", out)
    rc, out, _ = run("free", "--apply", "L", "--input", q, "--out", l)
    check("free L", rc == 0 and all(r["passed"] for r in json.loads(out)["validation"]), out)
    rc, out, _ = run("laws", "--input", l)
    check("L frame equality", report(json.loads(out), "frame_equality")["passed"], out)
    expect_output("L saturation", ["saturate", "--input", l, "--subset", "h"], "g h")
    with open(l) as f:
        emitted = json.load(f)
    rc, out, _ = run("free", "--apply", "L", "--input", q)
    check("free stdout matches file", json.loads(out)["presentation"] == emitted)

    o = os.path.join(tmp, "o.json")
    rc, out, _ = run("free", "--apply", "O", "--input", data("abc"), "--max-len", "2", "--out", o)
    check("free O", rc == 0 and json.loads(out)["stage"] == "O", out)
    expect_output("O saturation", ["saturate", "--input", o, "--subset", "b,c"], "[a] [b] [c]")

    t = os.path.join(tmp, "t.json")
    rc, out, _ = run("tensor", "--left", data("chain"), "--right", data("chain"), "--out", t)
    result = json.loads(out) if rc == 0 else {}
    check("tensor", result.get("size") == 4 and all(c["passed"] for c in result.get("checks", [])), out)
    expect_output("tensor lattice", ["lattice", "--input", t], "6 points")
    expect_output("tensor saturate", ["saturate", "--input", t, "--subset", "(o,o)"],
                  "(z,z) (z,o) (o,z) (o,o)")

    for style in ["lhd", "leq", "bullet"]:
        target = os.path.join(tmp, style + ".json")
        rc, out, _ = run("convert", "--input", data("monoid"), "--to", style, "--out", target)
        result = json.loads(out) if rc == 0 else {}
        check(f"convert {style}", result.get("style") == style, out)
        rc, _, _ = run("lattice", "--input", target)
        check(f"convert {style} reparses", rc == 0)
    rc, out, _ = run("convert", "--input", os.path.join(tmp, "bullet.json"), "--to", "leq")
    check("leq identity iso", report(json.loads(out)["checks"], "identity_iso")["passed"], out)
    # The convergent input is not formal, so the leq presentation differs from it.
    rc, out, _ = run("convert", "--input", data("monoid"), "--to", "leq")
    check("leq differs from convergent input",
          rc == 0 and not report(json.loads(out)["checks"], "identity_iso")["passed"])
    rc, out, _ = run("convert", "--input", data("chain"), "--to", "dot")
    check("convert dot", rc == 0 and all(r["passed"] for r in json.loads(out)["checks"]), out)
    rc, _, _ = run("convert", "--input", data("chain"), "--to", "bullet")
    check("bullet needs a monoid", rc == 2, f"rc={rc}")

rc, out, _ = run("derive", "--input", data("abc"), "--goal", "a :: b,c", "--via", "O", "--max-len", "2")
result = json.loads(out) if rc == 0 else {}
check("derive O", result.get("found") is True and result["tree"]["rule"] == "infinity", out)
rc, out, _ = run("derive", "--input", data("abc"), "--goal", "a.b :: b.b,c.b", "--via", "O", "--max-len", "2")
check("derive before Q", rc == 0 and json.loads(out)["found"] is False, out)
rc, out, _ = run("derive", "--input", data("abc"), "--goal", "a.b :: b.b,c.b", "--via", "Q", "--max-len", "2")
check("derive after Q", rc == 0 and json.loads(out)["found"] is True, out)
rc, out, _ = run("derive", "--input", data("abc"), "--goal", "[] :: []", "--via", "O", "--max-len", "2")
check("derive empty list", rc == 0 and json.loads(out)["tree"]["rule"] == "reflexivity", out)
rc, _, _ = run("derive", "--input", data("abc"), "--goal", "a b,c")
check("derive bad goal", rc == 2, f"rc={rc}")

rc, out, _ = run("implication", "--input", data("chain"), "--left", "o", "--right", "z")
check("implication", rc == 0 and json.loads(out)["implication"] == ["z"], out)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("all CLI checks passed")
