"""End-to-end checks of the syz command-line tool.

Usage: test_cli.py SYZ_BINARY SCHEMA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

SYZ = None
SCHEMAS = None


def run(*args, stdin=None):
    proc = subprocess.run([SYZ, *args], input=stdin, capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def parse_text_table(text):
    """Parse the dotted text rendering of a Betti table into {(p, q): dim}."""
    lines = text.strip().splitlines()
    header = lines[0].split()[1:]
    cells = {}
    for line in lines[1:]:
        q, rest = line.split(":", 1)
        for p, value in zip(header, rest.split()):
            cells[(int(p), int(q))] = 0 if value == "·" else int(value)
    return cells


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, content):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as f:
            f.write(content if isinstance(content, str) else json.dumps(content))
        return path

    def fixture(self, *args):
        code, out, err = run("fixtures", *args)
        self.assertEqual(code, 0, err)
        jsonschema.validate(json.loads(out), schema("module"))
        return self.write("_".join(args).replace("/", "_") + ".json", out)

    def surface(self, kind, gram, l, ample=True, gg=True):
        doc = {"kind": kind, "gram": gram, "L": l,
               "flags": {"ample": ample, "globally_generated": gg}}
        jsonschema.validate(doc, schema("surface"))
        return self.write("surface.json", doc)

    # --- modules ---------------------------------------------------------

    def test_twisted_cubic_betti(self):
        path = self.fixture("rnc", "3")
        code, out, err = run("betti", path, "--format", "json")
        self.assertEqual(code, 0, err)
        table = json.loads(out)
        jsonschema.validate(table, schema("betti"))
        cells = {(e["p"], e["q"]): e["dim"] for e in table["entries"]}
        nonzero = {k: v for k, v in cells.items() if v}
        self.assertEqual(nonzero, {(0, 0): 1, (1, 1): 3, (2, 1): 2})

        code, text, _ = run("betti", path)
        self.assertEqual(code, 0)
        self.assertEqual(parse_text_table(text), cells)

        code, csv, _ = run("betti", path, "--format", "csv")
        self.assertEqual(code, 0)
        rows = [r.split(",") for r in csv.strip().splitlines()]
        from_csv = {(int(h[1:]), int(r[0])): int(v)
                    for r in rows[1:] for h, v in zip(rows[0][1:], r[1:])}
        self.assertEqual(from_csv, cells)

    def test_betti_reads_stdin(self):
        path = self.fixture("rnc", "2")
        with open(path) as f:
            code, out, err = run("betti", "-", "--format", "json", stdin=f.read())
        self.assertEqual(code, 0, err)
        self.assertIn({"p": 1, "q": 1, "dim": 1}, json.loads(out)["entries"])

    def test_np_holds_on_rnc(self):
        path = self.fixture("rnc", "4")
        code, out, err = run("np", path, "--p", "2", "--qbound", "3")
        self.assertEqual(code, 0, err)
        self.assertEqual(out.strip(), "holds")
        code, out, _ = run("np", path, "--p", "2", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        jsonschema.validate(doc, schema("np"))
        self.assertTrue(doc["holds"])
        self.assertEqual(doc["q_bound"], 3)
        self.assertTrue(doc["notes"])  # the defaulted bound is reported

    def test_np_fails_on_degree_two_generator(self):
        # M_0 = k, M_1 = 0, M_2 = k: a generator in degree 2 gives K_{0,2} != 0.
        path = self.write("deg.json", {"n": 1, "q_min": 0, "q_max": 3, "dims": [1, 0, 1, 0],
                                       "mult": [[[]], [[]], [[]]]})
        code, out, _ = run("np", path, "--p", "0", "--qbound", "2")
        self.assertEqual(code, 1)
        self.assertEqual(out.strip(), "fails at K_{0,2} (dim 1)")
        code, out, _ = run("np", path, "--p", "0", "--qbound", "2", "--format", "json")
        self.assertEqual(code, 1)
        doc = json.loads(out)
        jsonschema.validate(doc, schema("np"))
        self.assertEqual(doc["witness"], {"p": 0, "q": 2, "dim": 1})

    def test_np_rejects_small_qbound(self):
        path = self.fixture("rnc", "3")
        code, _, err = run("np", path, "--p", "1", "--qbound", "1")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error:"))

    def test_veronese_dims(self):
        code, out, _ = run("fixtures", "veronese", "2", "2", "--qmax", "4")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["dims"], [1, 6, 15, 28, 45])

    def test_points_fixture_and_duplicates(self):
        path = self.write("pts.txt", "0 0\n1 0\n0 1\n")
        code, out, _ = run("fixtures", "points", path, "--qmax", "3")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["dims"], [1, 3, 6, 10])
        dup = self.write("dup.txt", "0 0\n1 0\n0 0\n")
        code, _, err = run("fixtures", "points", dup)
        self.assertEqual(code, 2)
        self.assertIn("duplicate", err)

    def test_malformed_module_reports_field_path(self):
        path = self.write("bad.json", '{"n":1,"q_min":0,"q_max":1,"dims":[1,"x"],"mult":[[[]]]}')
        code, _, err = run("betti", path)
        self.assertEqual(code, 2)
        self.assertIn("dims[1]", err)

    def test_csv_only_for_betti(self):
        path = self.fixture("rnc", "3")
        code, _, _ = run("np", path, "--p", "1", "--format", "csv")
        self.assertEqual(code, 2)

    # --- surfaces --------------------------------------------------------

    def test_double_cover_verdict(self):
        path = self.surface("k3", "<2>", [3])
        code, out, _ = run("surface", path, "verdict", "--p", "2", "--theorem", "k3",
                           "--format", "json")
        self.assertEqual(code, 1)
        doc = json.loads(out)
        jsonschema.validate(doc, schema("verdict"))
        self.assertEqual(doc["outcome"], "FailsNp")
        self.assertEqual(doc["witnesses"][0]["role"], "genus_two")
        code, text, _ = run("surface", path, "verdict", "--p", "2", "--theorem", "k3")
        self.assertEqual(code, 1)
        self.assertIn("fails N_2", text.splitlines()[0])
        code, _, _ = run("surface", path, "verdict", "--p", "1", "--theorem", "k3")
        self.assertEqual(code, 0)

    def test_theorem_a_holds(self):
        path = self.surface("k3", "U", [5, 15])
        code, out, _ = run("surface", path, "verdict", "--p", "1", "--theorem", "a",
                           "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        jsonschema.validate(doc, schema("verdict"))
        self.assertEqual(doc["outcome"], "HoldsNp")
        self.assertEqual(doc["searched_degree_bound"], 3)

    def test_mukai(self):
        path = self.surface("k3", "<2>", [1])
        code, out, _ = run("surface", path, "mukai", "--m", "3", "--p", "2", "--format", "json")
        self.assertEqual(code, 1)
        doc = json.loads(out)
        jsonschema.validate(doc, schema("verdict"))
        self.assertEqual(doc["polarization"], [3])
        code, _, _ = run("surface", path, "mukai", "--m", "7", "--p", "2")
        self.assertEqual(code, 2)

    def test_isotropic(self):
        path = self.surface("k3", "U", [2, 3])
        code, out, _ = run("surface", path, "isotropic", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        jsonschema.validate(doc, schema("isotropic"))
        self.assertEqual(doc["min_degree"], 2)
        self.assertIn({"degree": 2, "coords": [0, 1]}, doc["primitive_classes"])

    def test_enriques_clifford(self):
        path = self.surface("enriques", "U+E8(-1)", [2, 3] + [0] * 8)
        code, out, _ = run("surface", path, "clifford")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "clifford index: 2")
        code, out, _ = run("surface", path, "clifford", "--format", "json")
        self.assertEqual(json.loads(out)["clifford_index"], 2)
        code, out, _ = run("surface", path, "verdict", "--p", "0", "--format", "json")
        doc = json.loads(out)
        jsonschema.validate(doc, schema("verdict"))
        self.assertEqual(doc["conditional_on"], "GL-secant")
        no_gg = self.surface("enriques", "U+E8(-1)", [2, 3] + [0] * 8, gg=False)
        code, _, _ = run("surface", no_gg, "clifford")
        self.assertEqual(code, 2)

    def test_chain_and_slope(self):
        path = self.surface("k3", "<2>", [3])
        code, out, _ = run("surface", path, "chain", "1", "2", "1")
        self.assertEqual((code, out.strip()), (0, "F^2 = -4"))
        code, out, _ = run("surface", path, "slope", "--p", "2", "--class", "1", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual((doc["value"], doc["r"], doc["i"]), ("-792", 10, 7))

    def test_restriction_and_crosscheck(self):
        path = self.surface("k3", "U", [3, 1])
        code, out, _ = run("surface", path, "restrict", "--p", "1", "--class", "0,1",
                           "--format", "json")
        self.assertEqual(code, 1)
        jsonschema.validate(json.loads(out), schema("verdict"))
        path = self.surface("k3", "U", [5, 15])
        code, out, _ = run("surface", path, "crosscheck", "--p", "1", "--format", "json")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["consistent"])

    def test_invalid_surface(self):
        path = self.write("odd.json", {"kind": "k3", "gram": [[1]], "L": [1]})
        code, _, err = run("surface", path, "isotropic")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error:"))


if __name__ == "__main__":
    SYZ, SCHEMAS = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0]], verbosity=2)
