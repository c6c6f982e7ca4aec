#!/usr/bin/env python3
"""Runs the CLI, checks exit codes and validates every JSON output against its schema.

usage: cli_schema_test.py <dgsem binary> <source dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
ROOT = pathlib.Path(sys.argv[2])
DATA = ROOT / "data"
SCHEMAS = ROOT / "schemas"

failures = []


def schema(name):
    s = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(s)
    return s


def run(*args, code=0):
    p = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, timeout=300)
    if p.returncode != code:
        failures.append(f"{args}: exit {p.returncode}, wanted {code}\n{p.stderr}")
    return p.stdout


def validate(name, text):
    try:
        doc = json.loads(text)
        jsonschema.validate(doc, schema(name))
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{name}: {e}")
        return None


def expect(cond, what):
    if not cond:
        failures.append(what)


for path in sorted(DATA.glob("*.json")):
    kind = "environment" if path.name.endswith("_env.json") else "graph"
    validate(kind, path.read_text())

chain = DATA / "equiv_chain.json"
mutual = DATA / "equiv_mutual.json"
toulmin = DATA / "toulmin.json"

doc = validate("check", run("check", "--model", toulmin, "--env", DATA / "toulmin_env.json",
                            "--formula", DATA / "toulmin_query.txt", "--format", "json"))
expect(doc and doc["result"] and [w["value"] for w in doc["witness"]] == [f"txt{i}" for i in range(1, 7)],
       "toulmin witness")
validate("check", run("check", "--model", toulmin, "--expr", "true", "--format", "json"))

doc = validate("extensions", run("extensions", "--model", mutual, "--spec", "simple:equivalence:complete",
                                 "--format", "json"))
expect(doc and doc["extensions"] == [[], ["u5"], ["u1", "u4"], ["u1", "u3", "u4", "u6"]], "extensions listing")

doc = validate("match", run("match", "--model", DATA / "mutual_model.json", "--skeleton",
                            DATA / "mutual_skeleton.json", "--format", "json"))
expect(doc and doc["tuples"] == [["u4", "u5"], ["u8", "u7"]], "match tuples")

validate("generate", run("generate", "--family", "W-D-CMP", "--k", 2, "--N", 3, "--format", "json"))
validate("environment", run("env", "--N", 3, "--bind", "c1=u1,c2=u4"))

with tempfile.TemporaryDirectory() as tmp:
    env = pathlib.Path(tmp) / "env.json"
    env.write_text(run("env", "--N", 2, "--bind", "c1=u1,c2=u4"))
    sidecar = pathlib.Path(tmp) / "map.json"
    validate("ground", run("ground", "--model", chain, "--env", env, "--expr", "forall x. (p_A(c1, x) -> p_A(x, c2))",
                           "--sidecar", sidecar, "--format", "json"))
    validate("dimacs-map", sidecar.read_text())
    cnf = run("ground", "--model", chain, "--env", env, "--expr", "exists x. p_A(x, c1)", "--format", "dimacs")
    expect(any(line.startswith("p cnf ") for line in cnf.splitlines()), "dimacs header")

args = ("validate", "--random", 3, "--nodes", 3, "--seed", 7, "--families", "core,items", "--format", "json")
first = run(*args)
doc = validate("validate", first)
expect(doc and doc["passed"] and doc["seed"] == 7, "random validation")
expect(run(*args) == first, "validate output is deterministic")

doc = validate("validate", run("validate", "--model", chain, "--families", "CF", "--mutate", "--format", "json", code=1))
expect(doc and not doc["passed"] and doc["models"][0]["reports"][0]["mismatches"], "mutation is caught")

run("check", "--model", toulmin, "--expr", "exists x. (p(x)", code=2)
run("check", "--model", toulmin, "--expr", "exists x. p(x)", code=3)
run("check", "--model", DATA / "missing.json", "--expr", "true", code=2)
run("extensions", "--model", toulmin, "--spec", "simple:defence:complete", code=4)
run("validate", "--model", mutual, "--families", "CF", "--bound", 5, code=5)
run("generate", "--family", "item1", "--k", 9, "--N", 9, code=5)
run("generate", "--family", "CF", "--k", 2, "--consts", "c1", code=3)

for f in failures:
    print("FAIL:", f)
print("ok" if not failures else f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
