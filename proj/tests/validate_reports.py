"""Checks scenarios and their reports against the schema printed by the CLI."""

import json
import subprocess
import sys

import jsonschema


def main():
    cli = sys.argv[1]
    scenarios = sys.argv[2:]
    schema = json.loads(subprocess.run([cli, "schema"], check=True, capture_output=True, text=True).stdout)
    report_schema = dict(schema)
    report_schema.pop("oneOf")
    report_schema.pop("required")
    report_schema["$ref"] = "#/$defs/report"
    for path in scenarios:
        with open(path) as f:
            scenario = json.load(f)
        jsonschema.validate(scenario, schema)
        report = json.loads(subprocess.run([cli, "run", path], check=True, capture_output=True, text=True).stdout)
        jsonschema.validate(report, report_schema)
        jsonschema.validate(report["scenario"], schema)
    print(f"{len(scenarios)} scenarios and reports valid")


if __name__ == "__main__":
    main()
