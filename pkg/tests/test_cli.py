import json
import subprocess
import sys

from alphaspectra.cli import main
from alphaspectra.digraph import read_dgr1, to_dgr1, write_dgr1
from alphaspectra.families import FamilySpec, generate, parse_spec
from alphaspectra.spectral import spectral_radius


def run_cli(args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "alphaspectra", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


class TestRadius:
    def test_cycle_text(self, capsys):
        assert main(["radius", "--spec", "cycle:7", "--alpha", "0.4"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "radius 1.0"

    def test_json_matches_api(self, capsys):
        assert main(["radius", "--spec", "infty:1,2", "--alpha", "0.3", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        api = spectral_radius(generate(parse_spec("infty:1,2")), 0.3)
        assert data["radius"] == api.radius
        assert data["enclosure"] == [api.enclosure.lo, api.enclosure.hi]
        assert data["perron"] == [float(v) for v in api.perron]

    def test_graph_file(self, tmp_path, capsys):
        path = tmp_path / "g.dgr"
        write_dgr1(generate(FamilySpec.cycle(4)), path)
        assert main(["radius", "--graph", str(path), "--alpha", "0.25"]) == 0
        assert "radius 1.0" in capsys.readouterr().out

    def test_not_strongly_connected_is_exit_1(self, tmp_path, capsys):
        path = tmp_path / "bad.dgr"
        path.write_text("dgr1 3\n0 1\n1 2\n")
        assert main(["radius", "--graph", str(path), "--alpha", "0.0"]) == 1

    def test_error_json(self, tmp_path, capsys):
        path = tmp_path / "bad.dgr"
        path.write_text("dgr1 3\n0 1\n1 2\n")
        assert main(["radius", "--graph", str(path), "--alpha", "0.0", "--json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["error"] == "NotStronglyConnectedError"


class TestFamily:
    def test_writes_dgr1(self, tmp_path):
        out = tmp_path / "t.dgr"
        assert main(["family", "--spec", "theta:0,1;2", "--out", str(out)]) == 0
        assert read_dgr1(out) == generate(FamilySpec.theta((0, 1), 2))

    def test_stdout(self, capsys):
        assert main(["family", "--spec", "cycle:3"]) == 0
        assert capsys.readouterr().out == to_dgr1(generate(FamilySpec.cycle(3)))

    def test_invalid_spec_parity(self, capsys):
        assert main(["family", "--spec", "bip1:8,2,2"]) == 1
        assert "odd" in capsys.readouterr().err


class TestCharRoot:
    def test_sqrt2(self, capsys):
        assert main(["char-root", "--spec", "infty:1,1", "--alpha", "0"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert abs(float(lines[0].split()[1]) - 2**0.5) < 1e-9
        assert float(lines[1].split()[1]) < 1e-9

    def test_kpq_closed_form(self, capsys):
        assert main(["char-root", "--spec", "kpq:3,2", "--alpha", "0.5", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert abs(data["root"] - 2.5) < 1e-12

    def test_unsupported_family(self, capsys):
        assert main(["char-root", "--spec", "cycle:5", "--alpha", "0"]) == 1


class TestEnumerate:
    def test_writes_classes_and_manifest(self, tmp_path):
        outdir = tmp_path / "n3"
        assert main(["enumerate", "--n", "3", "--out", str(outdir)]) == 0
        manifest = json.loads((outdir / "manifest.json").read_text())
        assert manifest["count"] == 5
        assert len(manifest["classes"]) == 5
        for entry in manifest["classes"]:
            d = read_dgr1(outdir / entry["file"])
            assert len(d.arcs) == entry["arcs"]

    def test_stdout_manifest(self, capsys):
        assert main(["enumerate", "--n", "2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["count"] == 1


class TestVerify:
    def test_global_min_exit_zero(self, tmp_path, capsys):
        json_out = tmp_path / "report.json"
        csv_out = tmp_path / "report.csv"
        rc = main(
            [
                "verify",
                "--campaign",
                "global-min",
                "--alpha-grid",
                "0,0.25,0.5",
                "--json-out",
                str(json_out),
                "--csv-out",
                str(csv_out),
            ]
        )
        assert rc == 0
        report = json.loads(json_out.read_text())
        assert report["campaign"] == "global-min"
        assert report["alpha_grid"] == [0.0, 0.25, 0.5]
        assert len(report["items"]) == 3 * 5048
        lines = csv_out.read_text().splitlines()
        assert lines[0] == "spec,alpha,radius,lo,hi"
        assert len(lines) == 1 + 3 * 5048

    def test_family_extremes(self, capsys):
        rc = main(
            [
                "verify",
                "--campaign",
                "family-extremes",
                "--family",
                "infty",
                "--n",
                "8",
                "--s",
                "3",
                "--alpha-grid",
                "0,0.5",
            ]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert "[pass]" in out

    def test_transform_lemmas(self, capsys):
        assert main(["verify", "--campaign", "transform-lemmas", "--trials", "10", "--seed", "3"]) == 0

    def test_bipartite(self, capsys):
        rc = main(
            ["verify", "--campaign", "bipartite-min", "--n", "8", "--p", "3", "--q", "2",
             "--alpha-grid", "0,0.5"]
        )
        assert rc == 0

    def test_missing_flags(self, capsys):
        assert main(["verify", "--campaign", "bipartite-min"]) == 1


class TestSweep:
    def test_csv_output(self, tmp_path, capsys):
        spec_list = tmp_path / "specs.txt"
        spec_list.write_text("cycle:5\ninfty:1,2\n# comment\n\n")
        rc = main(
            [
                "sweep",
                "--spec-list",
                str(spec_list),
                "--alpha-from",
                "0",
                "--alpha-to",
                "0.8",
                "--steps",
                "5",
            ]
        )
        assert rc == 0
        import csv
        import io

        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ["spec", "alpha", "radius"]
        assert len(rows) == 1 + 2 * 5
        assert {r[0] for r in rows[1:]} == {"cycle:5", "infty:1,2"}
        assert all(abs(float(r[2]) - 1.0) < 1e-12 for r in rows[1:] if r[0] == "cycle:5")


class TestExitCodes:
    def test_missing_input_file_is_exit_1(self, capsys):
        assert main(["sweep", "--spec-list", "no-such-file.txt",
                     "--alpha-from", "0", "--alpha-to", "0.5", "--steps", "2"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_usage_error_is_2(self):
        out = run_cli(["radius", "--alpha", "0.5"])
        assert out.returncode == 2

    def test_unknown_verb_is_2(self):
        out = run_cli(["frobnicate"])
        assert out.returncode == 2

    def test_entrypoint_runs(self):
        out = run_cli(["radius", "--spec", "cycle:3", "--alpha", "0"])
        assert out.returncode == 0
        assert out.stdout.startswith("radius 1.0")
