# Copyright 2026 The moddata Authors
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

"""Validates moddata CLI output against the JSON schemas in schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {name: json.loads((schema_dir / f"{name}.schema.json").read_text())
               for name in ("datum", "bundle")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values())

    def check(schema, args):
        out = subprocess.run([cli, *args], check=False, capture_output=True, text=True).stdout
        jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(json.loads(out))
        print("valid:", " ".join(args))

    check("datum", ["gen", "semion"])
    check("datum", ["gen", "radford", "--n", "7", "--zeta", "3"])
    check("bundle", ["--json", "analyze", "gen:semion", "--extensions"])
    check("bundle", ["--json", "analyze", "gen:radford:9"])


if __name__ == "__main__":
    main()
