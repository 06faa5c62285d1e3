# Copyright 2026 The wreathgrowth Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the wgrowth binary.

usage: cli_checks.py {schemas,determinism,examples} WGROWTH SCHEMA_DIR
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

# (schema, arguments) pairs that run in well under a second each.
COMMANDS = [
    ("mul", ["mul", "a", "b", "a", "c"]),
    ("mul", ["mul", "--group", "grigorchuk:family,omega=periodic:0112", "ad", "ad"]),
    ("wp", ["wp", "--group", "grigorchuk:fsa", "--word", "adadadad"]),
    ("wp", ["wp", "--group", "grigorchuk:family", "--word", "abab"]),
    ("order", ["order", "--word", "ac"]),
    ("portrait", ["portrait", "--word", "abacab"]),
    ("ball", ["ball", "--group", "free:k=2", "--radius", "4"]),
    ("ball", ["ball", "--group", "lamplighter:q=2", "--radius", "5", "--edges"]),
    ("ball", ["ball", "--group", "lamplighter:q=2,gens=dl", "--radius", "3"]),
    ("ball", ["ball", "--group", "wreath:H=C2,X=3,G=(1 2 3);(1 2)", "--radius", "4"]),
    ("ball", ["ball", "--group", "grigorchuk:family", "--radius", "5"]),
    ("ball", ["ball", "--group", "permwreath:H=C2,omega=periodic:012,points=xi", "--radius", "3"]),
    ("ball", ["ball", "--group", "finite:S3", "--radius", "3"]),
    ("ball", ["ball", "--group", "grigorchuk:fsa", "--radius", "2.5", "--weights", "@WEIGHTS@"]),
    ("diameter", ["diameter", "--level", "3"]),
    ("series", ["series", "parry", "--order", "10"]),
    ("series", ["series", "free-product", "--lamp", "C2", "--lamp2", "C3", "--order", "6"]),
    ("series", ["series", "finite-x-wreath", "--lamp", "C2", "--acting", "C3", "--d", "3", "--order", "6"]),
    ("schreier", ["schreier", "--basepoint", "xi", "--limit", "16"]),
    ("schreier", ["schreier", "--group", "grigorchuk:family", "--basepoint", "00", "--limit", "8"]),
    ("invorbit", ["invorbit", "--word", "acadab"]),
    ("invorbit", ["invorbit", "--delta", "8"]),
    ("invorbit", ["invorbit", "--group", "grigorchuk:family", "--delta", "2.0", "--weights", "1,0.4,0.3,0.3"]),
    ("invorbit", ["invorbit", "--witness", "3", "--include-word"]),
    ("omega-build", ["omega-build", "--profile", "exp_pow:alpha=0.9", "--k", "300"]),
    ("omega-build", ["omega-build", "--profile", "exp_over_log", "--k", "300"]),
    ("supercontract", ["supercontract", "--letters", "5"]),
    ("nueg-compare", ["nueg-compare", "--i", "3", "--j", "5", "--radius", "2"]),
    ("dl-check", ["dl-check", "--q", "2", "--radius", "3"]),
    ("khills", ["khills", "--q", "2", "--k", "1,2"]),
]


def run(binary, args, env=None):
    return subprocess.run([binary, "--quiet"] + args, capture_output=True,
                          text=True, env=env, check=False)


def substitute(args, weights):
    return [weights if a == "@WEIGHTS@" else a for a in args]


def check_schemas(binary, schema_dir, weights):
    failures = 0
    for name, args in COMMANDS:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        proc = run(binary, substitute(args, weights))
        if proc.returncode != 0:
            print(f"FAIL exit {proc.returncode}: {args}\n{proc.stderr}")
            failures += 1
            continue
        errors = list(jsonschema.Draft202012Validator(schema).iter_errors(
            json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {args}: {e.message} at {list(e.path)}")
        failures += bool(errors)
    covered = {name for name, _ in COMMANDS}
    shipped = {p.name.removesuffix(".schema.json") for p in schema_dir.glob("*.schema.json")}
    if covered != shipped:
        print(f"FAIL schemas without commands or commands without schemas: "
              f"{sorted(covered ^ shipped)}")
        failures += 1
    return failures


def check_determinism(binary, weights):
    failures = 0
    for _, args in COMMANDS:
        for fmt in ("json", "csv", "text"):
            full = ["--format", fmt] + substitute(args, weights)
            a, b = run(binary, full), run(binary, full)
            if (a.returncode, a.stdout) != (b.returncode, b.stdout):
                print(f"FAIL nondeterministic: {full}")
                failures += 1
    # Cached and uncached runs print the same data.
    with tempfile.TemporaryDirectory() as cache:
        env = dict(os.environ, WGROWTH_CACHE_DIR=cache)
        for args in (["ball", "--group", "free:k=2", "--radius", "6"],
                     ["series", "parry", "--m2", "2", "--order", "8"]):
            fresh = run(binary, args)
            first, second = run(binary, args, env), run(binary, args, env)
            if not (fresh.stdout == first.stdout == second.stdout):
                print(f"FAIL cache changes output: {args}")
                failures += 1
    return failures


def expect(cond, message):
    if not cond:
        print("FAIL " + message)
    return 0 if cond else 1


def check_examples(binary, weights):
    failures = 0
    p = run(binary, ["--format", "text", "wp", "--group", "grigorchuk:fsa",
                     "--word", "adadadad"])
    failures += expect(p.returncode == 0 and p.stdout == "trivial\n",
                       f"wp (ad)^4: {p.returncode} {p.stdout!r}")
    p = run(binary, ["--format", "text", "diameter", "--level", "3"])
    failures += expect(p.returncode == 0 and p.stdout == "D=8 order=128\n",
                       f"diameter 3: {p.stdout!r}")
    p = run(binary, ["ball", "--group", "free:k=2", "--radius", "2"])
    failures += expect(p.returncode == 0 and json.loads(p.stdout)["spheres"] == [1, 4, 12],
                       f"ball F2: {p.stdout!r}")
    p = run(binary, ["--format", "csv", "ball", "--group", "free:k=2", "--radius", "2"])
    failures += expect(p.stdout == "radius,sphere,cumulative\n0,1,1\n1,4,5\n2,12,17\n",
                       f"ball csv: {p.stdout!r}")
    p = run(binary, ["nueg-compare", "--i", "4", "--j", "8", "--radius", "3"])
    failures += expect(p.returncode == 0 and json.loads(p.stdout)["equal"] is True,
                       f"nueg-compare 4 8: {p.stdout!r}")
    p = run(binary, ["--format", "text", "invorbit", "--word", "acadab"])
    failures += expect(p.stdout == "{1̄, 1̄00, 1̄010}\n", f"invorbit: {p.stdout!r}")
    # Usage errors.
    for args in (["no-such-command"], ["ball", "--group", "free:k=2"],
                 ["ball", "--group", "free:k=2", "--radius", "2", "--bogus"],
                 ["ball", "--group", "mystery:k=2", "--radius", "2"],
                 ["wp", "--word", "axe"], ["diameter", "--level", "0"],
                 ["--format", "yaml", "wp", "--word", "a"],
                 ["--budget", "0", "wp", "--word", "a"]):
        p = run(binary, args)
        failures += expect(p.returncode == 2, f"usage error for {args}: {p.returncode}")
        failures += expect(p.stdout == "", f"usage error wrote to stdout: {args}")
    # Resource errors.
    for args in (["--budget", "100", "ball", "--group", "free:k=2", "--radius", "8"],
                 ["--max-radius", "4", "ball", "--group", "free:k=2", "--radius", "5"],
                 ["diameter", "--level", "6"],
                 ["invorbit", "--delta", "15"]):
        p = run(binary, args)
        failures += expect(p.returncode == 3, f"resource error for {args}: {p.returncode}")
    # Help goes to stdout with exit 0.
    p = run(binary, ["--help"])
    failures += expect(p.returncode == 0 and "khills" in p.stdout, "help")
    # Config file: values apply, flags override them, unknown keys fail.
    with tempfile.TemporaryDirectory() as d:
        cfg = pathlib.Path(d) / "wgrowth.toml"
        cfg.write_text('format = "csv"\nmax-radius = 3\n')
        p = run(binary, ["--config", str(cfg), "ball", "--group", "free:k=1", "--radius", "3"])
        failures += expect(p.returncode == 0 and p.stdout.startswith("radius,sphere"),
                           f"config format: {p.stdout!r}")
        p = run(binary, ["--config", str(cfg), "ball", "--group", "free:k=1", "--radius", "4"])
        failures += expect(p.returncode == 3, "config max-radius")
        p = run(binary, ["--config", str(cfg), "--format", "text", "--max-radius", "9",
                         "ball", "--group", "free:k=1", "--radius", "4"])
        failures += expect(p.returncode == 0 and p.stdout.startswith("spheres"),
                           f"flags override config: {p.stdout!r}")
        cfg.write_text("unknown-key = 1\n")
        p = run(binary, ["--config", str(cfg), "wp", "--word", "a"])
        failures += expect(p.returncode == 2, "unknown config key")
    # Corrupt cache entries are replaced with a warning.
    with tempfile.TemporaryDirectory() as cache:
        env = dict(os.environ, WGROWTH_CACHE_DIR=cache)
        args = ["ball", "--group", "free:k=2", "--radius", "5"]
        good = run(binary, args, env).stdout
        (entry,) = pathlib.Path(cache).glob("*.ball")
        entry.write_bytes(entry.read_bytes()[:-7] + b"garbage")
        p = run(binary, args, env)
        failures += expect(p.returncode == 0 and p.stdout == good and "warning" in p.stderr,
                           "corrupt cache entry")
        p = subprocess.run([binary] + args, capture_output=True, text=True, env=env)
        failures += expect("cache hit" in p.stderr, "rewritten cache entry is used")
    return failures


def main():
    mode, binary, schema_dir = sys.argv[1], sys.argv[2], pathlib.Path(sys.argv[3])
    with tempfile.TemporaryDirectory() as d:
        weights = str(pathlib.Path(d) / "weights.json")
        pathlib.Path(weights).write_text('{"a": 1, "b": 0.5, "c": 0.75, "d": 0.5}')
        if mode == "schemas":
            failures = check_schemas(binary, schema_dir, weights)
        elif mode == "determinism":
            failures = check_determinism(binary, weights)
        elif mode == "examples":
            failures = check_examples(binary, weights)
        else:
            sys.exit(f"unknown mode {mode}")
    print(f"{mode}: {failures} failure(s)")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
