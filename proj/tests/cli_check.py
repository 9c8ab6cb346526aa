"""CLI contract: schema-valid JSON, CSV headers, exit codes, config precedence
and byte-identical output for a fixed seed."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMAS = sys.argv[1], sys.argv[2]
failures = []


def run(args, env=None):
    e = dict(os.environ)
    e.pop("K3NECK_CONFIG", None)
    e.update(env or {})
    p = subprocess.run([BIN] + args, capture_output=True, text=True, env=e)
    return p.returncode, p.stdout


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validated(name, args, code=0, env=None):
    rc, out = run([name] + args, env)
    expect(rc == code, f"{name} {' '.join(args)} exits {code} (got {rc})")
    try:
        doc = json.loads(out)
        with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
            jsonschema.validate(doc, json.load(f))
        expect(True, f"{name} output matches schema")
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as err:
        expect(False, f"{name} output matches schema: {str(err).splitlines()[0]}")
        return {}


d = validated("dioph-check", ["--p", "1/2", "--q", "1/3"])
expect(d.get("status") == "refuted" and d.get("witness_n") == 6, "rational pair refuted at n = 6")
d = validated("dioph-check", ["--p", "sqrt(2)", "--q", "1+2*sqrt(3)", "--n-max", "2000"])
expect(d.get("status") == "estimated" and "certified" in d, "quadratic pair estimated with certified bound")
validated("embed", ["--tau", "1+2i", "--z", "0.3+0.4i", "--z", "0"])
d = validated("picard-table", ["--dmax", "12"])
expect({"d": 7, "k": 2, "verdict": "certified", "b0": 3} .items() <= next(
    (r for r in d.get("rows", []) if r["d"] == 7 and r["k"] == 2), {}).items(), "picard-table has (7,2,certified,3)")
d = validated("toroidal-classify", ["--p", "1/2", "--q", "1/3"])
expect(d.get("toroidal") is False, "rational pair not toroidal")
d = validated("toroidal-classify", ["--tau", "1+3i"])
expect(d.get("type") == 1 and d.get("kind") == 0, "type and kind (1, 0)")
validated("theta-cocycle", ["--samples", "50"])
validated("glue-check", ["--xi", "0.2+0.1i", "--s", "0.004-0.003i"])
d = validated("metric-report", ["--tau", "i", "--b0", "3", "--b", "0.5", "--w", "0.1"])
expect(abs(d.get("det", 0) - 1200 / 3.141592653589793) < 1e-9, "metric-report det = 1200/pi")
validated("family-sample", ["--count", "5"])
d = validated("family-distinct", ["--tau1", "i", "--tau2", "2i"])
expect(d.get("verdict") == "distinct_curves", "tau = i and 2i give distinct fibers")
d = validated("verify-all", [])
expect(d.get("failed") == 0 and len(d.get("criteria", [])) == 8, "verify-all: all criteria pass")
expect(run(["verify-all"]) == run(["verify-all"]), "verify-all output byte-stable")

rc, out = run(["--format", "csv", "picard-table", "--dmax", "12"])
lines = out.splitlines()
expect(rc == 0 and lines[0] == "d,k,verdict,b0,reason" and "7,2,certified,3," in lines, "picard-table CSV")
rc, out = run(["--format", "csv", "dioph-check", "--p", "sqrt(2)", "--q", "sqrt(3)", "--n-max", "100"])
expect(rc == 0 and out.splitlines()[0] == "n,min_distance" and len(out.splitlines()) == 101, "distance scan CSV")
for prof, head in (("psi", "abs_w,psi"), ("cutoff", "x,f_tilde")):
    rc, out = run(["--format", "csv", "metric-report", "--profile", prof])
    expect(rc == 0 and out.splitlines()[0] == head, f"{prof} profile CSV")

for args in (["frobnicate"], [], ["dioph-check", "--p", "1/2"], ["dioph-check", "--p", "x", "--q", "1/3"],
             ["embed", "--tau", "-i", "--z", "0.1"], ["picard-table", "--dmax", "0"]):
    rc, _ = run(args)
    expect(rc == 2, f"usage error exits 2: {args}")

for args in (["family-sample", "--count", "20"], ["theta-cocycle"], ["glue-check"]):
    a, b = run(["--seed", "7"] + args), run(["--seed", "7"] + args)
    expect(a == b and a[0] == 0, f"byte-identical for fixed seed: {args[0]}")
    expect(run(["--seed", "8"] + args)[1] != a[1], f"seed changes output: {args[0]}")

with tempfile.TemporaryDirectory() as tmp:
    cfg = os.path.join(tmp, "cfg.json")
    with open(cfg, "w") as f:
        json.dump({"tolerances": {"cocycle": 1e-30}, "seed": 5}, f)
    rc, out = run(["theta-cocycle"], {"K3NECK_CONFIG": cfg})
    doc = json.loads(out) if out else {}
    expect(rc == 1 and doc.get("tolerances", {}).get("cocycle") == 1e-30 and doc.get("seed") == 5,
           "config from K3NECK_CONFIG applied; impossible tolerance exits 1")
    rc, out = run(["--seed", "9", "--config", cfg, "theta-cocycle"], {"K3NECK_CONFIG": "/nonexistent"})
    expect(rc == 1 and json.loads(out).get("seed") == 9, "--config wins over env var, --seed over config")
    with open(cfg, "w") as f:
        f.write('{"tolerances": {"cocycle": -1}}')
    expect(run(["theta-cocycle", "--samples", "3"], {"K3NECK_CONFIG": cfg})[0] == 2, "non-positive tolerance rejected")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
