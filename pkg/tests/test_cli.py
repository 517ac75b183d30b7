import json

from didom.cli import main
from didom.core import loads_arclist, read_arclist


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariants:
    def test_family_gm3(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--family", "Gm:3")
        assert code == 0
        data = json.loads(out)
        assert data["gamma"]["value"] == 4
        assert data["rho"]["value"] == 3
        assert "elapsed_ms" not in data["gamma"]

    def test_cycle_total_domination(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--family", "cycle:5")
        assert code == 0
        assert json.loads(out)["gamma_t"]["value"] == 5

    def test_timings_flag(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "--family", "Gm:1", "--timings")
        assert code == 0
        assert "elapsed_ms" in json.loads(out)["gamma"]

    def test_file_input(self, capsys, tmp_path, directed_triangle):
        path = tmp_path / "tri.arcs"
        from didom.core import write_arclist

        write_arclist(directed_triangle, str(path))
        code, out, _ = run_cli(capsys, "invariants", str(path))
        assert code == 0
        assert json.loads(out)["gamma"]["value"] == 2

    def test_empty_graph_rejected(self, capsys, tmp_path):
        path = tmp_path / "empty.arcs"
        path.write_text("n 0\n")
        code, _, err = run_cli(capsys, "invariants", str(path))
        assert code == 2
        assert "no vertices" in err

    def test_parse_error_has_line(self, capsys, tmp_path):
        path = tmp_path / "bad.arcs"
        path.write_text("n 2\n0 5\n")
        code, _, err = run_cli(capsys, "invariants", str(path))
        assert code == 2
        assert "line 2" in err

    def test_missing_input(self, capsys):
        code, _, err = run_cli(capsys, "invariants")
        assert code == 2

    def test_byte_stable(self, capsys):
        _, out1, _ = run_cli(capsys, "invariants", "--family", "Hm:3")
        _, out2, _ = run_cli(capsys, "invariants", "--family", "Hm:3")
        assert out1 == out2


class TestProduct:
    def test_cart_to_file(self, capsys, tmp_path):
        out_file = tmp_path / "prod.arcs"
        code, out, _ = run_cli(capsys, "product", "cart", "Gm:1", "Gm:1", "--out", str(out_file))
        assert code == 0
        prod = read_arclist(str(out_file))
        assert prod.n == 9 and prod.arc_count == 18

    def test_direct_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "product", "direct", "cycle:3", "cycle:3")
        assert code == 0
        d = loads_arclist(out)
        assert d.n == 9 and d.arc_count == 9

    def test_file_inputs(self, capsys, tmp_path):
        lhs = tmp_path / "lhs.arcs"
        lhs.write_text("n 2\n0 1\n1 0\n")
        code, out, _ = run_cli(capsys, "product", "cart", str(lhs), "path:2")
        assert code == 0
        assert loads_arclist(out).n == 4

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.arcs"
        bad.write_text("whatever\n")
        code, _, err = run_cli(capsys, "product", "cart", str(bad), "Gm:1")
        assert code == 2
        assert "parse error" in err


class TestFamily:
    def test_emit_matches_builder(self, capsys):
        code, out, _ = run_cli(capsys, "family", "C4:0202")
        assert code == 0
        from didom.families import build_family

        assert loads_arclist(out).out_adj == build_family("C4:0202").out_adj

    def test_roundtrip_through_file(self, capsys, tmp_path):
        path = tmp_path / "fam.arcs"
        code, _, _ = run_cli(capsys, "family", "K1star", "--out", str(path))
        assert code == 0
        d = read_arclist(str(path))
        assert d.n == 7 and d.arc_count == 8

    def test_unknown_family(self, capsys):
        code, _, err = run_cli(capsys, "family", "mystery:9")
        assert code == 2


class TestVerify:
    def test_default_suite_exit_zero(self, capsys, tmp_path):
        out_file = tmp_path / "records.jsonl"
        code, out, _ = run_cli(capsys, "verify", "--out", str(out_file))
        assert code == 0
        assert "suite:" in out
        lines = out_file.read_text().splitlines()
        assert lines and all(json.loads(l)["claim"] for l in lines)

    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text(
            "seed 3\ncheck thm:ditree-packing-domination enum-ditrees:4\n"
        )
        code, out, _ = run_cli(capsys, "verify", str(cfg))
        assert code == 0
        assert "432" in out

    def test_malformed_config(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("check not-a-claim family:K1star\n")
        code, _, err = run_cli(capsys, "verify", str(cfg))
        assert code == 2
        assert "unknown claim" in err

    def test_vizing_failure_whitelisted(self, capsys, tmp_path):
        cfg = tmp_path / "viz.cfg"
        cfg.write_text("check conj:vizing-inequality pair:Gm:1|chord5\n")
        code, out, _ = run_cli(capsys, "verify", str(cfg))
        assert code == 0
        assert "fails=1" in out

    def test_jobs_flag(self, capsys, tmp_path):
        cfg = tmp_path / "par.cfg"
        cfg.write_text(
            "seed 2\ncheck thm:meir-moon random-ditrees:count=8,n=8\n"
        )
        code, out, _ = run_cli(capsys, "verify", str(cfg), "--jobs", "3")
        assert code == 0
        assert "thm:meir-moon: 8" in out


class TestSearchAcyclic:
    def test_small_run(self, capsys, tmp_path):
        out_file = tmp_path / "dags.jsonl"
        code, _, err = run_cli(
            capsys,
            "search-acyclic",
            "--max-n", "4",
            "--budget", "10",
            "--seed", "1",
            "--out", str(out_file),
        )
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert len(lines) == 1 + 3 + 25 + 543 + 10
        assert "acyclic search" in err

    def test_stdout_stream(self, capsys):
        code, out, _ = run_cli(
            capsys, "search-acyclic", "--max-n", "2", "--budget", "2", "--seed", "0"
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines() if line]
        assert all(r["claim"] == "problem:acyclic-packing-domination" for r in records)
