import json
import subprocess
import sys
import time

import jsonschema
import pytest

import revembed
import revembed.cli as cli
from revembed import VerifyReport, parse_pla


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def load_schema(name):
    return json.loads(revembed.schema_path(name).read_text())


RUNNING = str(revembed.data_path("running_example.pla"))
UNDER3 = str(revembed.data_path("underapprox_dsop.pla"))
AND2 = str(revembed.data_path("and2.pla"))


class TestLines:
    @pytest.mark.parametrize(
        "method,mu", [("heuristic", 12), ("exact-cube", 9), ("exact-bdd", 9), ("brute", 9)]
    )
    def test_methods(self, capsys, method, mu):
        code, out, _ = run(capsys, "lines", RUNNING, "--method", method)
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("lines.schema.json"))
        assert payload["mu"] == mu
        assert payload["total_lines"] == 7

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "lines", "/definitely/not/here.pla")
        assert code == 1
        assert "error" in err

    def test_bad_pla(self, capsys, tmp_path):
        bad = tmp_path / "bad.pla"
        bad.write_text(".i 2\n.o 1\n111 1\n.e\n")
        code, _, err = run(capsys, "lines", str(bad))
        assert code == 1
        assert "line 3" in err


class TestDsop:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "dsop", RUNNING)
        assert code == 0
        assert out.splitlines()[0] == "# dsop"
        assert parse_pla(out).cube_count() == 12

    def test_compact_to_file(self, capsys, tmp_path):
        target = tmp_path / "out.pla"
        code, out, _ = run(capsys, "dsop", RUNNING, "--compact", "-o", str(target))
        assert code == 0
        assert out == ""
        assert parse_pla(target.read_text()).cube_count() == 10


class TestEmbed:
    def test_exact_json_verify(self, capsys):
        code, out, _ = run(
            capsys, "embed", UNDER3, "--exact", "--verify", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("embed.schema.json"))
        assert payload["mode"] == "exact"
        assert payload["r"] == 8
        assert payload["verify"]["injective"]
        assert not payload["verify"]["total"]

    def test_exact_with_offset_verify(self, capsys):
        code, out, _ = run(
            capsys, "embed", UNDER3, "--exact", "--with-offset", "--verify"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verify"]["total"]

    def test_bennett(self, capsys):
        code, out, _ = run(capsys, "embed", RUNNING, "--bennett", "--verify")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("embed.schema.json"))
        assert payload["mode"] == "bennett"
        assert payload["r"] == 8
        assert all(payload["verify"].values())

    def test_pla_format_round_trips(self, capsys):
        code, out, _ = run(capsys, "embed", UNDER3, "--exact", "--format", "pla")
        assert code == 0
        dumped = parse_pla(out)
        assert dumped.n == 8
        assert dumped.m == 8

    def test_dot_format(self, capsys):
        code, out, _ = run(capsys, "embed", UNDER3, "--exact", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")

    def test_offset_with_bennett_rejected(self, capsys):
        code, _, err = run(
            capsys, "embed", UNDER3, "--bennett", "--with-offset"
        )
        assert code == 1
        assert "with-offset" in err

    def test_verification_failure_exits_3(self, capsys, monkeypatch):
        broken = VerifyReport(
            injective=False, functional=True, total=True, projects=True
        )
        monkeypatch.setattr(cli, "verify", lambda rc, pla: broken)
        code, _, err = run(capsys, "embed", UNDER3, "--exact", "--verify")
        assert code == 3
        assert "verification failed" in err


class TestGen:
    def test_redundancy_json(self, capsys):
        code, out, _ = run(capsys, "gen", "redundancy", "5", "5")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("gen.schema.json"))
        assert payload["n"] == 30

    def test_rgs_embed(self, capsys):
        code, out, _ = run(capsys, "gen", "rgs", "5", "--embed")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("gen.schema.json"))
        assert payload["sat_count"] == "52"
        assert payload["embed"]["r"] == 16

    def test_rgs_dot(self, capsys):
        code, out, _ = run(capsys, "gen", "rgs", "3", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")

    def test_bad_shape(self, capsys):
        code, _, err = run(capsys, "gen", "redundancy", "0", "4")
        assert code == 1


class TestBench:
    def test_data_directory(self, capsys):
        code, out, _ = run(
            capsys,
            "bench",
            str(revembed.data_path("running_example.pla").parent),
            "--ordering-study",
            "3",
            "--samples",
            "2",
        )
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("bench.schema.json"))
        names = [r["file"] for r in payload["results"]]
        assert "running_example.pla" in names
        assert len(payload["ordering_study"]) == 2

    def test_not_a_directory(self, capsys):
        code, _, err = run(capsys, "bench", RUNNING)
        assert code == 1


class TestPlumbing:
    def test_no_command_is_usage_error(self, capsys):
        code, _, err = run(capsys)
        assert code == 1

    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1

    def test_output_dc_warning(self, capsys, tmp_path):
        f = tmp_path / "dc.pla"
        f.write_text(".i 2\n.o 2\n11 1~\n.e\n")
        code, _, err = run(capsys, "lines", str(f))
        assert code == 0
        assert "warning" in err

    def test_timeout_exits_2(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli, "heuristic_mu", lambda pla: time.sleep(5)
        )
        start = time.monotonic()
        code, _, err = run(capsys, "--timeout", "0.2", "lines", RUNNING)
        elapsed = time.monotonic() - start
        assert code == 2
        assert "resource limit" in err
        assert elapsed < 3

    def test_console_script(self):
        proc = subprocess.run(
            ["revembed", "lines", RUNNING, "--method", "exact-bdd"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["mu"] == 9

    def test_module_entry(self):
        proc = subprocess.run(
            [sys.executable, "-m", "revembed.cli", "dsop", RUNNING],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("# dsop")
