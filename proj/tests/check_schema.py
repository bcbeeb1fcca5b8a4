"""Run every subcommand in JSON mode and validate the output against the schema."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path, data = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

legendre = os.path.join(data, "legendre5.ec")
curve11 = os.path.join(data, "curve11.ec")
with tempfile.NamedTemporaryFile("w", suffix=".ec", delete=False) as f:
    f.write("p = 5\na = [0, t +, 0, 0, 1]\n")
    broken = f.name

runs = [
    ["invariants", legendre],
    ["places", curve11],
    ["local", curve11, "--place", "t", "--l", "5"],
    ["local", legendre, "--place", "t^2+2", "--l", "3"],
    ["torsion", curve11, "--l", "5"],
    ["classify", legendre, "--l", "3"],
    ["classify", curve11, "--l", "5", "--kernel", "x^2 - t*x"],
    ["report", legendre, "--l", "2"],
    ["report", curve11, "--l", "5"],
    ["report", curve11, "--l", "11"],
    ["report", broken, "--l", "2"],
    ["local", legendre, "--place", "t^2-1", "--l", "2"],
]

failed = 0
for args in runs:
    out = subprocess.run([cli, *args, "--json"], capture_output=True, text=True)
    try:
        doc = json.loads(out.stdout)
        validator.validate(doc)
        print("ok  ", " ".join(args[:1] + args[2:]))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failed += 1
        print("FAIL", " ".join(args), str(e)[:400])
os.unlink(broken)
sys.exit(1 if failed else 0)
