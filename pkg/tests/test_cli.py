import json
import os
import subprocess
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))
from schema_utils import validate  # noqa: E402

HERE = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SCHEMAS = os.path.join(HERE, "schemas")
CACHE = os.environ.get("STB_CACHE_DIR") or os.path.expanduser("~/.cache/stb")


def run(*args):
    return subprocess.run([sys.executable, "-m", "stb", *args],
                          capture_output=True, text=True)


def schema(name):
    with open(os.path.join(SCHEMAS, name)) as fh:
        return json.load(fh)


def test_tori_json_schema():
    r = run("tori", "--dim", "5", "--q", "3", "--format", "json",
            "--cache-dir", CACHE)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    validate(doc, schema("tori.schema.json"))
    assert len(doc["rows"]) == 5
    assert sorted(row["order"] for row in doc["rows"]) == [4, 8, 8, 10, 16]
    for row in doc["rows"]:
        assert 8 % row["weyl_order"] == 0  # divides |W(B2)|


def test_weyl_classes_json_schema():
    r = run("weyl", "--type", "B", "--n", "3", "--format", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    validate(doc, schema("weyl_classes.schema.json"))
    assert sum(row["size"] for row in doc["rows"]) == 48


def test_weyl_doublecosets():
    r = run("weyl", "--type", "D", "--n", "4", "--doublecosets",
            "--format", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    validate(doc, schema("weyl_doublecosets.schema.json"))
    counts = {row["pair"]: row["count"] for row in doc["rows"]}
    assert counts["cross"] == 2
    assert counts["self"] == 3


def test_omega_json_matches_table():
    r = run("omega", "--dim", "3", "--q", "3", "--format", "json",
            "--cache-dir", CACHE)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    validate(doc, schema("omega.schema.json"))
    table = {(row["element_order"], row["size"]):
             (row["steinberg"], row["steinberg_plus"], row["omega"])
             for row in doc["rows"]}
    assert table[(1, 1)] == (3, 9, 3)
    assert table[(3, 8)] == (0, 0, 3)
    assert table[(2, 6)] == (1, 1, 1)


def test_census_json_so3():
    r = run("census", "--dim", "3", "--q", "3", "--format", "json",
            "--cache-dir", CACHE)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    validate(doc, schema("census.schema.json"))
    assert doc["totals"] == {"predicted_norm_sum": 4, "bruteforce_norm": 4,
                             "match": True}
    assert doc["inner_products"]["with_steinberg"] == 1
    assert doc["inner_products"]["with_trivial"] == 1


def test_verify_suite_passes():
    r = run("verify", "census", "--dim", "3", "--q", "3",
            "--cache-dir", CACHE)
    assert r.returncode == 0, r.stderr
    assert "PASS" in r.stdout
    assert "failed 0" in r.stdout


def test_verify_json_schema():
    r = run("verify", "weyl", "--format", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    validate(doc, schema("verify.schema.json"))
    assert doc["totals"]["failed"] == 0
    assert all(c["status"] == "PASS" for c in doc["checks"])


def test_verify_unknown_suite_refused():
    r = run("verify", "nonsense")
    assert r.returncode == 2
    assert "nonsense" in r.stderr


def test_cap_refusal():
    r = run("tori", "--dim", "7", "--q", "3")
    assert r.returncode == 2
    assert "--max-order" in r.stderr


def test_non_prime_power_refused():
    r = run("tori", "--dim", "3", "--q", "6")
    assert r.returncode == 2


def test_reruns_are_byte_identical():
    for fmt in ("csv", "json"):
        a = run("omega", "--dim", "3", "--q", "3", "--format", fmt,
                "--cache-dir", CACHE)
        b = run("omega", "--dim", "3", "--q", "3", "--format", fmt,
                "--cache-dir", CACHE)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout


def test_csv_has_config_comment():
    r = run("weyl", "--type", "D", "--n", "3", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0].startswith("# command=weyl")
    assert lines[1].split(",")[0] == "label_d"


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_all_formats_run(fmt):
    r = run("tori", "--dim", "4", "--type", "-", "--q", "3",
            "--format", fmt, "--cache-dir", CACHE)
    assert r.returncode == 0, r.stderr
    assert r.stdout
