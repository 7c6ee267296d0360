"""Validate siegel_atlas JSON output against schemas/report.schema.json."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    atlas, schema_path = sys.argv[1], Path(sys.argv[2])
    schema = json.loads(schema_path.read_text())
    with tempfile.TemporaryDirectory() as tmp:
        summary = Path(tmp) / "summary.json"
        subprocess.run([atlas, "check", "--backend", "crosscheck", "--out", str(summary)], check=True,
                       stdout=subprocess.DEVNULL)
        documents = [json.loads(summary.read_text())]
        single = subprocess.run([atlas, "run", "--family", "(27)", "--emit", "json"], check=True,
                                capture_output=True, text=True)
        documents.append(json.loads(single.stdout))
    for doc in documents:
        jsonschema.validate(doc, schema)
    print(f"{len(documents[0]['reports']) + 1} reports valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
