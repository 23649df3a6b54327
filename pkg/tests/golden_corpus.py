"""Golden corpus for the CLI: 20 expressions evaluated in all six spaces, plus two SVG plots.

Regenerate the committed files with ``python tests/golden_corpus.py``.
"""

import io
import json
import sys
from pathlib import Path

from klein.cli import run

GOLDEN_DIR = Path(__file__).parent / "golden"

EXPRESSIONS = [
    "e1 ^ e2",
    "(e0 + 3 e1 + e2) . e12",
    "e12 & (e12 + 3 e20 + 4 e01)",
    "norm(4 e1 - 3 e2)",
    "e12 * e12",
    "e12 x e20",
    "inv(e12)",
    "inv(e0 + e1)",
    "exp(0.5 e12)",
    "exp(-1.25 e20)",
    "exp(0.3 e1 + 0.4 e2)",
    "normalise(4 e1 - 3 e2)",
    "rev(1 + e1 + e12 + e012)",
    "dual(e0 + 2 e1 - e2)",
    "undual(dual(e12 + 0.5 e20))",
    "grade((e1 + e12) * (e2 + e01), 2)",
    "(e12 + e20) * e1 * (e12 - e20)",
    "(e0 + e1) ^ (e12 + 2 e01)",
    "e1 * e2 * e1",
    "inv(e12 + 0.5 e20 + 0.25 e01)",
]

SVG_SPECS = {
    "minkowski_null_lines.svg": {
        "space": "minkowski",
        "items": [{"blade": "e12 + 0.9 e20 + 0.2 e01", "label": "P"}],
        "viewport": [-2, 2, -2, 2],
        "show_null_structure": True,
    },
    "hyperbolic_unit_circle.svg": {
        "space": "hyperbolic",
        "items": [],
        "viewport": [-1.5, 1.5, -1.5, 1.5],
        "show_null_structure": True,
        "shade_proper": True,
    },
}

SPACE_KEYS = ["euclidean", "elliptic", "hyperbolic", "minkowski", "desitter", "antidesitter"]


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def corpus():
    results = {}
    for space in SPACE_KEYS:
        rows = []
        for expr in EXPRESSIONS:
            code, out, err = run_cli("eval", "--space", space, "--json", "--precision", "12", expr)
            row = {"expression": expr, "exit": code}
            if code == 0:
                row["value"] = json.loads(out)
            else:
                row["error"] = err.strip()
            rows.append(row)
        results[space] = rows
    return {"precision": 12, "results": results}


def corpus_json():
    return json.dumps(corpus(), indent=2, sort_keys=True) + "\n"


def svg_snapshots():
    out = {}
    for name, spec in SVG_SPECS.items():
        code, text, err = run_cli("plot", json.dumps(spec))
        if code != 0:
            raise RuntimeError(f"plot {name} failed: {err}")
        out[name] = text
    return out


def main():
    GOLDEN_DIR.mkdir(exist_ok=True)
    (GOLDEN_DIR / "corpus.json").write_text(corpus_json(), encoding="utf-8")
    for name, text in svg_snapshots().items():
        (GOLDEN_DIR / name).write_text(text, encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
