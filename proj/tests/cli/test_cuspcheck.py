"""End-to-end checks of the cuspcheck binary: exit codes and output formats.

Usage: test_cuspcheck.py PATH/TO/cuspcheck
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

EXE = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("CUSPIDAL_WORKERS", None)
    full_env.update(env or {})
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, timeout=600)
    return p.returncode, p.stdout, p.stderr


class Knot(unittest.TestCase):
    def test_t37(self):
        code, out, _ = run("knot", "3;7")
        self.assertEqual(code, 0)
        self.assertIn("gaps: 1,2,4,5,8,11\n", out)
        self.assertIn("staircase_steps: 1,2,1,2,2,1,2,1\n", out)
        self.assertIn("a_vertices: (0,6) (1,4) (2,2) (4,1) (6,0)\n", out)

    def test_trefoil_json(self):
        code, out, _ = run("knot", "2;3", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual((doc["milnor"], doc["genus"], doc["gaps"]), (2, 1, [1]))

    def test_errors(self):
        code, _, err = run("knot", "4;6,8")
        self.assertEqual(code, 3)
        self.assertIn("DivisibilityViolation", err)
        code, _, err = run("knot", "4;x")
        self.assertEqual(code, 2)
        self.assertIn("ParseError", err)


class Check(unittest.TestCase):
    def test_degree6(self):
        code, out, _ = run("check", "--degree", "6", "--cusp", "4;5", "--cusp", "2;9")
        self.assertEqual(code, 0)
        self.assertIn("result: pass", out)

    def test_table1_row(self):
        code, out, _ = run("check", "--degree", "12", "--cusp", "6;14,59", "--format", "json")
        self.assertEqual(code, 1)
        doc = json.loads(out)
        semigroup = next(c for c in doc["criteria"] if c["criterion"] == "semigroup")
        self.assertEqual(semigroup["verdict"], "fail")
        self.assertEqual(semigroup["first_fail"], 2)
        self.assertEqual(doc["exit_code"], 1)

    def test_five_cusps(self):
        args = ["check", "-d", "10"]
        for c in ["2;3", "2;3", "2;5", "5;7", "5;11"]:
            args += ["-c", c]
        code, out, _ = run(*args)
        self.assertEqual(code, 0, out)

    def test_genus_mismatch(self):
        code, out, _ = run("check", "-d", "11", "-c", "3;4")
        self.assertEqual(code, 4)
        self.assertIn("semigroup: inapplicable", out)

    def test_selected_criteria_csv(self):
        code, out, _ = run("check", "-d", "12", "-c", "3;56", "--criteria", "matsuoka-sakai", "--format", "csv")
        self.assertEqual(code, 1)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ["criterion", "verdict", "first_fail", "j", "actual", "expected", "ok"])
        self.assertEqual(rows[1][:2], ["matsuoka-sakai", "fail"])

    def test_unknown_criterion(self):
        code, _, err = run("check", "-d", "4", "-c", "3;4", "--criteria", "bogus")
        self.assertEqual(code, 2)
        self.assertIn("unknown criterion", err)


class Enumerate(unittest.TestCase):
    def test_degree3(self):
        code, out, _ = run("enumerate", "--degree", "3", "--format", "csv")
        self.assertEqual(code, 0)
        self.assertEqual(out, "sequence,verdict,first_fail\n(2;3),pass,\n")

    def test_degree12_csv(self):
        code, out, _ = run("enumerate", "--degree", "12", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        self.assertEqual(len(rows), 29)
        byseq = {r["sequence"]: r for r in rows}
        self.assertEqual(byseq["(6;14,59)"]["first_fail"], "2")
        self.assertEqual(sum(r["verdict"] == "pass" for r in rows), 8)

    def test_json_round_trip(self):
        # Re-checking every row through `check` reproduces the verdicts.
        code, out, _ = run("enumerate", "--degree", "9", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["count"], len(doc["rows"]))
        for row in doc["rows"]:
            code, out, _ = run("check", "-d", "9", "-c", row["sequence"], "--criteria", "semigroup", "--format", "json")
            report = json.loads(out)["criteria"][0]
            self.assertEqual(report["verdict"], row["verdict"], row["sequence"])
            self.assertEqual(report["first_fail"], row["first_fail"], row["sequence"])
            self.assertEqual(code, 0 if row["verdict"] == "pass" else 1)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "t.json")
            code, out, _ = run("enumerate", "-d", "5", "--format", "json", "--out", path)
            self.assertEqual((code, out), (0, ""))
            with open(path) as f:
                self.assertEqual(json.load(f)["degree"], 5)


class Dinv(unittest.TestCase):
    def test_extendable_zero(self):
        code, out, _ = run("dinv", "--cusp", "3;4", "--surgery", "16", "--spinc", "extendable:4", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual([v["m"] for v in doc["values"]], [-6, -2, 2, 6])
        self.assertTrue(all(v["d"] == "0" for v in doc["values"]))
        self.assertTrue(doc["all_zero"])

    def test_trefoil(self):
        code, out, _ = run("dinv", "--cusp", "2;3", "--surgery", "7", "--spinc", "0", "--format", "csv")
        self.assertEqual((code, out), (0, "m,d\n0,-1/2\n"))

    def test_all_labels(self):
        code, out, _ = run("dinv", "-c", "2;3", "-q", "8", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        self.assertEqual([int(r["m"]) for r in rows], list(range(-4, 5)))
        self.assertEqual(rows[0]["d"], rows[-1]["d"])

    def test_errors(self):
        self.assertEqual(run("dinv", "-c", "2;3", "-q", "1")[0], 5)
        self.assertEqual(run("dinv", "-c", "2;3", "-q", "7", "--spinc", "9")[0], 3)
        self.assertEqual(run("dinv", "-c", "2;3", "-q", "7", "--spinc", "x")[0], 2)


class Survey(unittest.TestCase):
    def test_degree12(self):
        code, out, _ = run("survey", "--range", "12..12", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual((doc["total_candidates"], doc["pass_semigroup"]), (29, 8))

    def test_coprime_pairs(self):
        code, out, _ = run("survey", "--range", "5..200", "--mode", "coprime-pairs", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["pass_semigroup"], 302)
        self.assertEqual(doc["torus_type_outside_known_families"], [{"degree": 5, "sequence": "(2;13)"}])

    def test_refused_long_run(self):
        code, _, err = run("survey", "--range", "8..64")
        self.assertEqual(code, 3)
        self.assertIn("RefusedLongRun", err)

    def test_csv_totals(self):
        code, out, _ = run("survey", "-r", "8..12", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        self.assertEqual(rows[-1]["degree"], "total")
        self.assertEqual(sum(int(r["candidates"]) for r in rows[:-1]), int(rows[-1]["candidates"]))

    def test_workers(self):
        ref = run("survey", "-r", "8..16", "--format", "json", "-j", "1")[1]
        self.assertEqual(run("survey", "-r", "8..16", "--format", "json", env={"CUSPIDAL_WORKERS": "3"})[1], ref)
        code, _, err = run("survey", "-r", "8..9", env={"CUSPIDAL_WORKERS": "abc"})
        self.assertEqual(code, 2)
        # The flag wins over the environment.
        self.assertEqual(run("survey", "-r", "8..9", "-j", "2", env={"CUSPIDAL_WORKERS": "abc"})[0], 0)

    def test_bad_range(self):
        self.assertEqual(run("survey", "-r", "5-8")[0], 2)
        self.assertEqual(run("survey", "-r", "2..5")[0], 3)


class Usage(unittest.TestCase):
    def test_no_subcommand(self):
        self.assertEqual(run()[0], 2)

    def test_bad_format(self):
        self.assertEqual(run("knot", "2;3", "--format", "xml")[0], 2)


if __name__ == "__main__":
    EXE = os.path.abspath(sys.argv.pop(1))
    unittest.main(verbosity=2)
