from __future__ import annotations

import json

import pytest

from cmmcert.cli import main
from cmmcert.series import read_cache


@pytest.fixture(autouse=True)
def cache(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("CMM_CACHE_DIR", str(d))
    return d


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_text(capsys):
    code, out, err = run(capsys, "expand", "--order", "7", "--text")
    assert code == 0
    assert out.strip() == "1 1 1 0 0 1 2 1"
    assert "AllNonNegative" in err


def test_expand_order_zero(capsys):
    assert run(capsys, "expand", "--order", "0", "--text")[1].strip() == "1"


def test_expand_writes_cache_file(capsys, tmp_path):
    out = tmp_path / "g.cmmq"
    assert run(capsys, "expand", "--order", "30", "--out", str(out))[0] == 0
    s = read_cache(out)
    assert s.order == 30 and list(s.coeffs[:8]) == [1, 1, 1, 0, 0, 1, 2, 1]


def test_expand_negative_order_is_usage_error(capsys):
    assert run(capsys, "expand", "--order", "-1")[0] == 3


def test_tampered_cache_is_recomputed(capsys, cache):
    run(capsys, "expand", "--order", "40")
    path = cache / "G_40.cmmq"
    raw = bytearray(path.read_bytes())
    raw[20] ^= 0xFF
    path.write_bytes(bytes(raw))
    code, out, err = run(capsys, "expand", "--order", "40", "--text")
    assert code == 0 and "recomputed" in err
    assert out.split()[:8] == "1 1 1 0 0 1 2 1".split()
    assert "cache" in run(capsys, "expand", "--order", "40")[2]


def test_verify_index_table(capsys):
    code, out, _ = run(capsys, "verify-index", "--max", "7")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()[1:]]
    assert [abs(int(r[1]) - int(r[2])) for r in rows] == [1, 1, 0, 0, 1, 2, 1]
    assert all(r[-1] == "yes" for r in rows)


def test_verify_index_one(capsys):
    assert run(capsys, "verify-index", "--max", "1")[0] == 0


def test_verify_index_bad_bound(capsys):
    assert run(capsys, "verify-index", "--max", "0")[0] == 3


def test_threshold_reports_observed_failure(capsys):
    code, out, _ = run(capsys, "threshold", "--range", "2000:3000")
    assert out.strip() == "threshold=2328, operative cutoff=4800"
    assert code == 1


@pytest.mark.xfail(strict=True, reason="the observed threshold is 2328")
def test_threshold_line_matches_claim(capsys):
    _, out, _ = run(capsys, "threshold", "--range", "2000:3000")
    assert out.strip() == "threshold=2322, operative cutoff=4800"


def test_threshold_clean_range(capsys):
    code, out, _ = run(capsys, "threshold", "--range", "5000:5100")
    assert out.strip() == "no failures in range" and code == 0


def test_threshold_jobs_identical(capsys):
    one = run(capsys, "threshold", "--range", "2300:2400", "--jobs", "1")
    many = run(capsys, "threshold", "--range", "2300:2400", "--jobs", "8")
    assert one[:2] == many[:2]


@pytest.mark.parametrize("argv", [["threshold", "--range", "3000:2000"], ["threshold", "--range", "x"],
                                  ["threshold", "--jobs", "0"], ["nonsense"], [],
                                  ["check-lemmas", "--precision", "20"]])
def test_usage_errors_exit_3(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 3


# -- certificate --------------------------------------------------------------------

CERT_ARGS = ["certificate", "--order", "60", "--max", "6", "--range", "4801:4830", "--skip-major"]


@pytest.fixture(scope="module")
def certificates(tmp_path_factory):
    d = tmp_path_factory.mktemp("cert")
    mp = pytest.MonkeyPatch()
    mp.setenv("CMM_CACHE_DIR", str(d / "cache"))
    try:
        codes = [main(CERT_ARGS + ["--out", str(d / "a.json")]),
                 main(CERT_ARGS + ["--out", str(d / "b.json")]),
                 main(CERT_ARGS + ["--skip-index", "--out", str(d / "c.json")])]
    finally:
        mp.undo()
    docs = [json.loads((d / f"{k}.json").read_text()) for k in "abc"]
    raw = [(d / f"{k}.json").read_text() for k in "ab"]
    return codes, docs, raw


def test_certificate_layout(certificates):
    codes, (a, _, _), _ = certificates
    assert set(a) >= {"tool_version", "precision_bits", "reports", "scan_results",
                      "coefficient_check", "index_check", "timestamp", "overall_verdict"}
    assert a["coefficient_check"]["verdict"] == "Verified"
    assert a["index_check"] == {"max_n": 6, "verdict": "Verified", "mismatches": []}
    ids = [r["claim_id"] for r in a["reports"]]
    assert ids == sorted(ids)
    lo = a["reports"][0]["lhs"]["lo"]
    assert isinstance(lo["mantissa"], str) and isinstance(lo["exponent"], int)


def test_certificate_reports_known_failures(certificates):
    codes, (a, _, _), _ = certificates
    failed = {r["claim_id"] for r in a["reports"] if r["verdict"] == "Failed"}
    assert "lemma_F_constant.alpha1" in failed
    assert any(i.startswith("minor_arc_sample") for i in failed)
    assert a["overall_verdict"] == "Failed" and codes[0] == 1


def test_certificate_deterministic_except_timestamp(certificates):
    _, _, (ra, rb) = certificates
    strip = lambda s: [line for line in s.splitlines() if '"timestamp"' not in line]
    assert strip(ra) == strip(rb)


def test_certificate_skip_index(certificates):
    codes, (a, _, c), _ = certificates
    assert c["index_check"]["verdict"] == "Skipped"
    assert c["overall_verdict"] == a["overall_verdict"]
    assert codes[2] == codes[0]


def test_certificate_advisory_gap_present(certificates):
    _, (a, _, _), _ = certificates
    (gap,) = [r for r in a["reports"] if r["claim_id"] == "exponent_gap"]
    assert gap["advisory"] and gap["verdict"] == "Verified"
