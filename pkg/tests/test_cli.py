import json

import pytest

from metrograph.cli import main


def test_generate_and_tau_round_trip(tmp_path, capsys):
    out = tmp_path / "h21.csv"
    assert main(["generate", "hex", "--n", "2", "--m", "1", "-o", str(out)]) == 0
    assert out.exists()
    assert main(["tau", "--input", str(out), "--normalized"]) == 0
    text = capsys.readouterr().out
    assert "1/30.22741" in text


def test_tau_hex_table_cells(capsys):
    assert main(["tau", "hex", "--n", "4", "--m", "4", "--normalized"]) == 0
    assert "1/57.21661" in capsys.readouterr().out
    assert main(
        ["tau", "hex", "--n", "4", "--m", "49", "--normalized",
         "--method", "analytic"]
    ) == 0
    assert "1/86.28266" in capsys.readouterr().out


def test_tau_json_output(tmp_path):
    out = tmp_path / "res.json"
    assert main(
        ["tau", "circle", "--n", "3", "--normalized", "--json", str(out)]
    ) == 0
    payload = json.loads(out.read_text())
    assert abs(payload["tau"] - 1.0 / 12.0) < 1e-12
    assert payload["normalized"] is True
    assert payload["v"] == 3


def test_tau_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        main(["tau", "mm", "--a", "3", "--b", "3", "--normalized",
              "--json", str(p)])
    assert a.read_bytes() == b.read_bytes()


def test_size_limit_refusal(capsys):
    rc = main(
        ["tau", "mm", "--a", "5", "--b", "5", "--normalized",
         "--size-limit", "50"]
    )
    assert rc == 2


def test_allow_large_estimate(capsys):
    rc = main(
        ["tau", "hex", "--n", "9", "--m", "9", "--normalized",
         "--size-limit", "50", "--allow-large", "--method", "trace"]
    )
    assert rc == 0
    text = capsys.readouterr().out
    tau = float(text.split("=")[1].split("=")[0])
    from metrograph.analytic import tau_hex_closed

    assert abs(tau - tau_hex_closed(10)) < 0.05 * tau_hex_closed(10)


def test_table_hex_diff(capsys):
    assert main(
        ["table", "hex", "--ns", "5", "--ms", "5,50", "--diff"]
    ) == 0
    text = capsys.readouterr().out
    assert "1/57.21661" in text
    assert "1/86.28266" in text


def test_kirchhoff(capsys):
    assert main(["kirchhoff", "complete", "--v", "4"]) == 0
    assert "3" in capsys.readouterr().out


def test_spectrum(capsys):
    assert main(["spectrum", "hex", "--n", "2", "--m", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 12


def test_verify_suites():
    assert main(["verify", "--suite", "trig"]) == 0
    assert main(["verify", "--suite", "bounds", "--n-max", "10"]) == 0


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["generate", "unknown-family"])
    assert exc.value.code == 2
