"""Validates the CLI's JSON output against the schemas in schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

runs = {
    "ring": [["ring", "--zn", "12", "--ideals"], ["ring", "--spec-json", '{"product": [{"zn": 4}, {"zn": 6}]}']],
    "classification": [
        ["classify", "--zn", "12", "--ideal", "4", "--mult", "3"],
        ["classify", "--zn", "12", "--ideal", "4", "--mult", "2"],
    ],
    "zn-table": [["table", "--min-n", "2", "--max-n", "60", "--verify"]],
    "verify": [["verify", "T-UN", "EXAMPLES", "SUBSET-CONVERSE", "--max-n", "12", "--timing"]],
}

failed = False
for name, arg_lists in runs.items():
    schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
    for args in arg_lists:
        out = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True).stdout
        try:
            jsonschema.validate(json.loads(out), schema)
            print(f"ok {name}: {' '.join(args)}")
        except (jsonschema.ValidationError, json.JSONDecodeError) as e:
            failed = True
            print(f"FAIL {name}: {' '.join(args)}: {e}")
sys.exit(1 if failed else 0)
