"""End-to-end checks of the command line tool: flags, formats, exit codes."""

import json
import os
import subprocess

CLI = os.environ["TSPECTRA_CLI"]


def run(*args, env=None):
    merged = os.environ.copy()
    if env:
        merged.update(env)
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=merged, timeout=300
    )


def test_spectrum_json():
    result = run("spectrum", "4", "--format", "json")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["n"] == 4
    assert report["values"] == [-6, -2, 0, 2, 6]
    again = run("spectrum", "4", "--format", "json")
    assert again.stdout == result.stdout  # byte-identical


def test_spectrum_nonexistence():
    result = run("spectrum", "9", "--format", "json")
    assert result.returncode == 0
    assert 2 not in json.loads(result.stdout)["values"]


def test_spectrum_csv_and_witnesses():
    result = run("spectrum", "3", "--witnesses", "--format", "csv")
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "value,witness"
    assert "3,3" in result.stdout


def test_spectrum_ceiling():
    blocked = run("spectrum", "90")
    assert blocked.returncode == 3
    assert "override" in blocked.stderr
    raised = run("spectrum", "86", "--format", "json", env={"TS_SPECTRA_LIMIT": "40"})
    assert raised.returncode == 3
    lowered = run("spectrum", "41", env={"TS_SPECTRA_LIMIT": "40"})
    assert lowered.returncode == 3
    allowed = run("spectrum", "41", "--limit-override", "--format", "json",
                  env={"TS_SPECTRA_LIMIT": "40"})
    assert allowed.returncode == 0


def test_spectrum_multiplicities():
    result = run("spectrum", "3", "--multiplicities", "--format", "json")
    assert result.returncode == 0
    assert json.loads(result.stdout)["multiplicities"] == {"-3": 1, "0": 4, "3": 1}
    too_big = run("spectrum", "13", "--multiplicities")
    assert too_big.returncode == 3


def test_witness_verified():
    result = run("witness", "76", "300", "--json")
    assert result.returncode == 0
    cert = json.loads(result.stdout)
    assert cert["verified"] is True
    assert cert["partition"][0] == 25
    assert cert["derivation"][-1]["step"] == "lift"


def test_witness_not_found():
    result = run("witness", "9", "2")
    assert result.returncode == 1
    assert "no partition of 9 attains 2" in result.stderr


def test_witness_negative_target():
    result = run("witness", "10", "--", "-3")
    assert result.returncode == 0
    assert "4 2 2 2" in result.stdout


def test_witness_bad_args():
    assert run("witness", "5", "999").returncode == 2
    assert run("witness").returncode == 2
    assert run("nonsense").returncode == 2


def test_verify_theorem_x():
    result = run("verify", "theorem-x", "--n-range", "27..40")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["ok"] is True
    assert len(report["results"]) == 14


def test_verify_theorem_xx_single_n():
    result = run("verify", "theorem-xx", "--n", "45")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["results"][0]["lo"] == -45
    assert report["results"][0]["covered"] == 91


def test_verify_conjecture_at_threshold():
    result = run("verify", "conjecture", "--n", "76")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    entry = report["results"][0]
    assert entry["interval"] == [-1275, 1275]
    assert entry["missing"] == []
    assert entry["partitions_scanned"] == 9289091


def test_verify_conjecture_gap_below_threshold():
    # the quadratic interval genuinely has holes for small n
    result = run("verify", "conjecture", "--n", "40")
    assert result.returncode == 1
    entry = json.loads(result.stdout)["results"][0]
    assert entry["interval"] == [-351, 351]
    assert entry["missing"] == [-301, 301]
    assert entry["partitions_scanned"] == 37338


def test_verify_inequalities():
    result = run("verify", "inequalities", "--n-range", "76..150")
    assert result.returncode == 0
    assert json.loads(result.stdout)["ok"] is True
    assert run("verify", "inequalities", "--n", "40").returncode == 2


def test_verify_errata(tmp_path):
    report_path = tmp_path / "errata.jsonl"
    result = run("verify", "errata", "--n-range", "1..60", "--report", str(report_path))
    assert result.returncode == 0
    records = [json.loads(line) for line in report_path.read_text().splitlines() if line]
    assert records, "boundary rows exist below n = 60"
    assert all(record["failure"] == "non_monotone" for record in records)


def test_verify_errata_default_range_to_stdout():
    result = run("verify", "errata")
    assert result.returncode == 0
    records = [json.loads(line) for line in result.stdout.splitlines() if line]
    assert len(records) == 604  # the full default sweep up to n = 200


def test_verify_needs_range():
    assert run("verify", "theorem-x").returncode == 2
    assert run("verify", "theorem-x", "--n-range", "junk").returncode == 2
    assert run("verify", "theorem-x", "--n", "14").returncode == 2
    assert run("spectrum", "4", "--format", "yaml").returncode == 2


def test_oracle():
    result = run("oracle", "3", "--format", "json")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["agree"] is True
    assert report["adjacency"]["values"] == [-3, 0, 3]
    mult = run("oracle", "5", "--multiplicities")
    assert mult.returncode == 0
    assert run("oracle", "7").returncode == 3


def test_output_file(tmp_path):
    out = tmp_path / "spectrum.json"
    result = run("spectrum", "5", "--format", "json", "--output", str(out))
    assert result.returncode == 0
    assert json.loads(out.read_text())["n"] == 5
