import json
import re

from gallai.cli import main
from gallai.core import read_colouring


def strip_elapsed(text: str) -> str:
    return re.sub(r'"elapsed_ms": [0-9.e+-]+', '"elapsed_ms": 0', text)


def test_construct_then_certify(tmp_path):
    f = tmp_path / "k5.gal"
    cert = tmp_path / "k5.json"
    assert main(["construct", "cyclic", "--k", "5", "-o", str(f)]) == 0
    c = read_colouring(f)
    assert (c.n, c.k) == (11, 5)
    assert main(["certify", str(f), "--d", "3", "--expect-count", "5",
                 "--cert", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    assert doc["schema"] == "gallai-certificate v1"
    assert doc["multicoloured"]["count"] == 5
    assert len(doc["multicoloured"]["families"]) == 5
    assert all(e["ok"] for e in doc["connectivity"])
    assert doc["n"] == 11 and doc["k"] == 5


def test_certify_wrong_expectation_fails(tmp_path):
    f = tmp_path / "k5.gal"
    main(["construct", "cyclic", "--k", "5", "-o", str(f)])
    assert main(["certify", str(f), "--d", "3", "--expect-count", "6",
                 "--cert", str(tmp_path / "c.json")]) == 1


def test_k17_certificate(tmp_path):
    f = tmp_path / "k17.gal"
    cert = tmp_path / "k17.json"
    assert main(["construct", "k17", "-o", str(f)]) == 0
    assert main(["certify", str(f), "--notion", "strong", "--d", "4",
                 "--expect-count", "0", "--cert", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    assert doc["multicoloured"]["count"] == 0
    assert doc["multicoloured"]["d_sets"] == 0
    assert doc["multicoloured"]["mode"] == "exhaustive"


def test_invalid_construction_exits_2(capsys):
    assert main(["construct", "cyclic", "--k", "4"]) == 2
    assert "not prime" in capsys.readouterr().err


def test_verify_fail_exits_1(tmp_path, capsys):
    f = tmp_path / "pc.gal"
    cert = tmp_path / "pc.json"
    main(["construct", "pointwise-cycles", "--k", "4", "--n", "13", "-o", str(f)])
    # tight step-cycles are pointwise connected but not strongly connected
    assert main(["verify", str(f), "--notion", "pointwise",
                 "--cert", str(cert)]) == 0
    assert main(["verify", str(f), "--notion", "strong",
                 "--cert", str(cert)]) == 1
    doc = json.loads(cert.read_text())
    bad = [e for e in doc["connectivity"] if not e["ok"]]
    assert bad and all(e["witness"] is not None for e in bad)


def test_count_sampled_marks_certificate(tmp_path):
    f = tmp_path / "k17.gal"
    cert = tmp_path / "s.json"
    main(["construct", "k17", "-o", str(f)])
    assert main(["count", str(f), "--d", "4", "--sample", "500",
                 "--seed", "7", "--cert", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    assert doc["multicoloured"]["mode"] == "sampled"


def test_count_early_exit(tmp_path):
    f = tmp_path / "k5.gal"
    cert = tmp_path / "e.json"
    main(["construct", "cyclic", "--k", "5", "-o", str(f)])
    assert main(["count", str(f), "--d", "3", "--early-exit",
                 "--cert", str(cert)]) == 0
    assert json.loads(cert.read_text())["multicoloured"]["mode"] == "early-exit"


def test_reproducible_outputs(tmp_path):
    fa, fb = tmp_path / "a.gal", tmp_path / "b.gal"
    ca, cb = tmp_path / "a.json", tmp_path / "b.json"
    for f, c in ((fa, ca), (fb, cb)):
        assert main(["certify", "--construct", "paths", "--k", "4", "--n", "20",
                     "--seed", "3", "--d", "3", "-o", str(f),
                     "--cert", str(c)]) == 0
    assert fa.read_bytes() == fb.read_bytes()
    assert strip_elapsed(ca.read_text()) == strip_elapsed(cb.read_text())


def test_pipeline_command(tmp_path):
    f = tmp_path / "p7.gal"
    cert = tmp_path / "p7.json"
    assert main(["pipeline", "--k", "7", "-o", str(f),
                 "--cert", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    assert doc["search"]["predicted_count"] == 13
    assert doc["search"]["realised_count"] == 13
    assert doc["multicoloured"]["count"] == 13
    assert read_colouring(f).n == 26


def test_search_commands(tmp_path):
    cert = tmp_path / "s.json"
    assert main(["search", "min-family", "--k", "5", "--cert", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    assert doc["search"]["optimum"] == 5 and doc["search"]["complete"]

    assert main(["search", "min-3graph", "--n", "5", "--cert", str(cert)]) == 0
    assert json.loads(cert.read_text())["search"]["optimum"] == 5

    # budget exhaustion surfaces as exit 3
    assert main(["search", "min-triangles", "--k", "3", "--n", "6",
                 "--budget", "50", "--cert", str(cert)]) == 3
    assert not json.loads(cert.read_text())["search"]["complete"]

    # a hunt is budget-bounded by design and always reports exit 3
    assert main(["search", "hunt", "--n", "7", "--seeds", "2",
                 "--budget", "60", "--cert", str(cert)]) == 3
    doc = json.loads(cert.read_text())
    assert doc["search"]["optimum"] > 0 and not doc["search"]["complete"]


def test_construct_blowup_roundtrip(tmp_path):
    base = tmp_path / "k11.gal"
    big = tmp_path / "k22.gal"
    cert = tmp_path / "c.json"
    main(["construct", "cyclic", "--k", "5", "-o", str(base)])
    assert main(["construct", "blow-up", "-i", str(base),
                 "--sizes", ",".join(["2"] * 11), "-o", str(big)]) == 0
    assert main(["certify", str(big), "--d", "3", "--expect-count", "5",
                 "--cert", str(cert)]) == 0

    assert main(["construct", "double", "-i", str(base), "--special", "5",
                 "-o", str(big)]) == 0
    assert main(["certify", str(big), "--d", "3", "--expect-count", "9",
                 "--cert", str(cert)]) == 0


def test_construct_streamed_blowup_matches(tmp_path):
    base = tmp_path / "m3.gal"
    a, b = tmp_path / "mat.gal", tmp_path / "str.gal"
    main(["construct", "mono", "--n", "3", "--r", "3", "-o", str(base)])
    assert main(["construct", "strong-blowup", "-i", str(base), "-o", str(a)]) == 0
    assert main(["construct", "strong-blowup", "-i", str(base), "-o", str(b),
                 "--stream"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_minimal_3graph_file(tmp_path):
    f = tmp_path / "h10.gal"
    cert = tmp_path / "h10.json"
    assert main(["construct", "minimal-3graph", "--n", "10", "-o", str(f)]) == 0
    c = read_colouring(f)
    assert c.r == 3 and c.k == 2
    assert main(["verify", str(f), "--notion", "strong", "--colour", "1",
                 "--cert", str(cert)]) == 0


def test_missing_input_exits_2(capsys):
    assert main(["certify"]) == 2
    assert main(["verify"]) == 2


def test_workers_env_default(monkeypatch):
    from gallai.cli import build_parser
    monkeypatch.setenv("GALLAI_WORKERS", "3")
    args = build_parser().parse_args(["count", "x.gal"])
    assert args.workers == 3
    args = build_parser().parse_args(["count", "x.gal", "--workers", "1"])
    assert args.workers == 1
