#!/usr/bin/env python3
#
# Copyright 2026 The dmcag Authors
#
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
#

"""Runs the dmcag binary, checks exit codes and validates every JSON output
against the schema the binary prints with --schema."""

import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed, skipping")
    sys.exit(77)

BIN = sys.argv[1]


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def validate(cmd, args):
    code, schema_text, _ = run(cmd, "--schema")
    assert code == 0, f"{cmd} --schema exited {code}"
    schema = json.loads(schema_text)
    jsonschema.Draft7Validator.check_schema(schema)
    code, out, err = run(cmd, *args, "--format", "json")
    assert code in (0, 1), f"{cmd} {args}: exit {code}: {err}"
    jsonschema.validate(json.loads(out), schema)
    # round trip: re-serialising the parsed document loses nothing
    assert json.loads(json.dumps(json.loads(out))) == json.loads(out)
    return code


failures = 0


def check(name, fn):
    global failures
    try:
        fn()
        print(f"ok   {name}")
    except AssertionError as e:
        failures += 1
        print(f"FAIL {name}: {e}")
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL {name}: {e.message}")


check("dmax json", lambda: validate("dmax", ["1..40"]))
check("tables json", lambda: validate("tables", ["--conjectural"]))
check("tables json timestamp", lambda: validate("tables", ["--timestamp"]))
check("explain json", lambda: validate("explain", ["17"]))
check("catalog json", lambda: validate("catalog", ["--rep-max", "64"]))
def expect(cmd, args, code):
    got = validate(cmd, args)
    assert got == code, f"exit {got}, expected {code}"


for vid in ["lemma-dmax", "lemma-N", "claim-F", "remark-domination", "prop-estimate",
            "cor-C", "cor-decoupled", "thm-B", "lemma-nondecoupled"]:
    check(f"verify {vid} json", lambda vid=vid: expect("verify", [vid], 0))
check("verify failing report json", lambda: expect("verify", ["cor-C", "--g-max", "30"], 1))

def exit_codes():
    assert run("tables", "--check")[0] == 0
    assert run("verify", "unknown-id")[0] == 2
    assert run("explain", "0")[0] == 2
    assert run("dmax", "x..y")[0] == 2
    assert run("--help")[0] == 0
    assert run()[0] == 2
    assert run("verify", "cor-C", "--g-max", "24")[0] == 1


check("exit codes", exit_codes)
sys.exit(1 if failures else 0)
