#!/usr/bin/env python3
"""End-to-end checks of the aont_lab command line.

usage: cli_test.py <aont_lab> <data dir> <report schema>
"""

import csv
import io
import json
import os
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI, DATA, SCHEMA = sys.argv[1:4]


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env, timeout=60)


def data(name):
    return os.path.join(DATA, name)


class Verify(unittest.TestCase):
    def test_exit_codes(self):
        cases = [
            (["--builtin", "table1", "--ti", "1", "--to", "1"], 0, "aont"),
            (["--builtin", "table2", "--ti", "1", "--to", "2"], 0, "aont"),
            (["--builtin", "table3", "--ti", "1", "--to", "2"], 1, "weak-aont-only"),
            (["--array", data("identity.csv"), "--ti", "1", "--to", "1"], 2, "neither"),
            (["--matrix", "1 0;0 1", "--modulus", "3", "--ti", "1", "--to", "1"], 2, "neither"),
            (["--array", data("table1.csv"), "--ti", "1", "--to", "1"], 0, "aont"),
        ]
        for args, code, verdict in cases:
            r = run("verify", *args)
            self.assertEqual(r.returncode, code, args)
            self.assertEqual(r.stdout.splitlines()[0], verdict)

    def test_weak_failure_is_reported(self):
        r = run("verify", "--builtin", "table3", "--ti", "1", "--to", "2", "--format", "json")
        j = json.loads(r.stdout)
        self.assertEqual(j["failed_columns"], [1, 4])
        self.assertEqual(j["violating_tuple"], ["a", "a"])
        self.assertEqual(j["observed_count"], 1)

    def test_errors(self):
        r = run("verify", "--array", data("truncated.csv"), "--ti", "1", "--to", "1")
        self.assertGreater(r.returncode, 2)
        self.assertIn("dimension-mismatch", r.stderr)
        r = run("verify", "--builtin", "table9", "--ti", "1", "--to", "1")
        self.assertEqual(r.returncode, 3)
        self.assertIn("unknown-name", r.stderr)
        r = run("verify", "--builtin", "table1", "--ti", "2", "--to", "1")
        self.assertIn("invalid-parameters", r.stderr)
        self.assertEqual(run("verify", "--ti", "1").returncode, 3)


class Analyze(unittest.TestCase):
    def analyze(self, table, model, ti, to, fmt, *extra):
        r = run("analyze", "--builtin", table, "--model", data(model), "--ti", str(ti),
                "--to", str(to), "--format", fmt, *extra)
        self.assertEqual(r.returncode, 0, r.stderr)
        return r.stdout

    def test_json_validates_against_schema(self):
        with open(SCHEMA) as f:
            schema = json.load(f)
        for table, model, ti, to in [("table1", "example1.json", 1, 1),
                                     ("table1", "example2.json", 1, 1),
                                     ("table2", "example3.json", 1, 2),
                                     ("table3", "example4.json", 1, 2)]:
            j = json.loads(self.analyze(table, model, ti, to, "json"))
            jsonschema.validate(j, schema)
            self.assertTrue(j["summary"]["all_within"])
        r = run("analyze", "--array", data("identity.csv"), "--model", data("example1.json"),
                "--ti", "1", "--to", "1", "--format", "json")
        jsonschema.validate(json.loads(r.stdout), schema)

    def test_example_values(self):
        j = json.loads(self.analyze("table1", "example1.json", 1, 1, "json"))
        got = {(tuple(r["x"]), tuple(r["y"])): r["conditional_entropy"] for r in j["rows"]}
        want = {((1,), (3,)): 1.196889, ((2,), (3,)): 1.196889,
                ((1,), (4,)): 1.198335, ((2,), (4,)): 1.198335}
        for k, v in want.items():
            self.assertAlmostEqual(got[k], v, delta=1e-6)
        j = json.loads(self.analyze("table2", "example3.json", 1, 2, "json"))
        self.assertAlmostEqual(j["rows"][0]["conditional_entropy"], 1.067794, delta=1e-6)
        j = json.loads(self.analyze("table3", "example4.json", 1, 2, "json"))
        self.assertAlmostEqual(j["rows"][2]["conditional_entropy"], 0.657504, delta=1e-6)

    def test_csv_round_trip(self):
        text = self.analyze("table2", "example3.json", 1, 2, "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        j = json.loads(self.analyze("table2", "example3.json", 1, 2, "json"))
        flat = [(r, b) for r in j["rows"] for b in r["bounds"]]
        self.assertEqual(len(rows), len(flat))
        for c, (r, b) in zip(rows, flat):
            self.assertEqual([int(x) for x in c["x"].split()], r["x"])
            self.assertEqual(float(c["conditional_entropy"]), r["conditional_entropy"])
            self.assertEqual(float(c["statistical_distance"]), r["statistical_distance"])
            self.assertEqual(float(c["lower"]), b["lower"])
            self.assertEqual(float(c["upper"]), b["upper"])
            self.assertEqual(c["theorem"], b["theorem"])

    def test_table_and_filters(self):
        text = self.analyze("table1", "example1.json", 1, 1, "table", "--pair", "2:4")
        self.assertIn("1.198335", text)
        self.assertNotIn("1.196889", text)
        j = json.loads(self.analyze("table1", "example2.json", 1, 1, "json", "--theorem", "thm-2.4"))
        self.assertEqual(j["theorems"], ["thm-2.4"])
        r = run("analyze", "--builtin", "table3", "--model", data("example4.json"), "--ti", "1",
                "--to", "2", "--theorem", "thm-3.1")
        self.assertEqual(r.returncode, 3)
        self.assertIn("classification-mismatch", r.stderr)
        r = run("analyze", "--builtin", "table1", "--model", data("bad_masses.json"), "--ti", "1",
                "--to", "1")
        self.assertIn("mass-sum-violation", r.stderr)


class Demo(unittest.TestCase):
    def test_all_pass(self):
        for n in "1234":
            r = run("demo", n)
            self.assertEqual(r.returncode, 0, r.stdout)
            self.assertTrue(r.stdout.rstrip().endswith("PASS"))
        j = json.loads(run("demo", "4", "--format", "json").stdout)
        self.assertTrue(j["passed"])
        pattern = re.compile(r"H\(X\d\|Y\d\)")
        self.assertEqual(sum(bool(pattern.fullmatch(c["label"])) for c in j["checks"]), 9)

    def test_too_tight(self):
        self.assertEqual(run("demo", "1", "--tolerance", "1e-12").returncode, 4)


class Search(unittest.TestCase):
    def test_counts_and_threads(self):
        r = run("search", "--s", "2", "--v", "3", "--ti", "1", "--to", "1")
        self.assertEqual(r.stdout.splitlines()[0], "48 examined, 8 found")
        self.assertIn("searching", r.stderr)
        env = dict(os.environ, AONT_LAB_THREADS="3")
        j = json.loads(run("search", "--s", "3", "--v", "3", "--ti", "2", "--to", "2",
                           "--format", "json", env=env).stdout)
        j1 = json.loads(run("search", "--s", "3", "--v", "3", "--ti", "2", "--to", "2",
                            "--format", "json").stdout)
        self.assertEqual(j["matrices"], j1["matrices"])
        self.assertEqual(j["threads"], 3)
        r = run("search", "--s", "2", "--v", "2", "--ti", "1", "--to", "1")
        self.assertEqual(r.stdout.splitlines()[0], "6 examined, 0 found")

    def test_limits(self):
        r = run("search", "--s", "4", "--v", "7", "--ti", "1", "--to", "1")
        self.assertEqual(r.returncode, 3)
        self.assertIn("search-space-too-large", r.stderr)
        r = run("search", "--s", "2", "--v", "4", "--ti", "1", "--to", "1")
        self.assertIn("nonprime-v", r.stderr)
        r = run("search", "--s", "2", "--v", "3", "--ti", "1", "--to", "1", "--cap", "10")
        self.assertEqual(r.returncode, 3)


class Export(unittest.TestCase):
    def test_round_trip(self):
        r = run("export", "--builtin", "table1")
        with open(data("table1.csv")) as f:
            self.assertEqual(r.stdout, f.read())
        with tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False) as f:
            f.write(run("export", "--builtin", "table2").stdout)
        try:
            self.assertEqual(run("verify", "--array", f.name, "--ti", "1", "--to", "2").returncode, 0)
        finally:
            os.unlink(f.name)


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
