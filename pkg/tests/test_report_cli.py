import json

import numpy as np
import pytest

from qboson.cli import (ConfigError, _expected_for, emit_report, exit_code_for,
                        main, parse_config, parse_rspec, run_suite)
from qboson.report import (IdentityReport, dump_matrix, load_matrix, make_report,
                           verdict_of)

FAST_CONFIG = """
# desk-scale smoke configuration
q = 0.7+0.2i
kappa = 0
tol = 1e-9
seed = 7
window = 3
dims.pair = 6
dims.triple = 4
reps.dims = [6, 6]
reps.shifts = [0, 0.5]
families.m = [0.5]
families.k = [-1]
families.signs = [lower]
rspecs = [quantum_double, yan_claimed, "general:m=0.5,K=-1,sign=lower"]
axioms.dim = 5
axioms.max_word_len = 1
pairing.kmax = 1
pairing.mmax = 1
"""


@pytest.fixture
def fast_config(tmp_path):
    path = tmp_path / "suite.cfg"
    path.write_text(FAST_CONFIG, encoding="utf-8")
    return parse_config(path)


# ---------------------------------------------------------------------------
# verdicts and matrix dumps


def test_verdict_zones():
    tol = 1e-9
    assert verdict_of(5e-10, tol) == "pass"
    assert verdict_of(1e-9, tol) == "pass"
    assert verdict_of(5e-8, tol) == "info"   # gray zone, never classified
    assert verdict_of(1e-7, tol) == "info"
    assert verdict_of(2e-7, tol) == "fail"


def test_dump_matrix_format(tmp_path):
    path = tmp_path / "eye.mtx"
    dump_matrix(np.eye(2), path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "# 2 2"
    assert len(lines) == 3  # header + two nonzero entries
    assert lines[1].split()[:2] == ["0", "0"]
    assert float(lines[1].split()[2]) == 1.0


def test_dump_matrix_roundtrip(tmp_path):
    rng = np.random.default_rng(0)
    mat = rng.normal(size=(5, 4)) + 1j * rng.normal(size=(5, 4))
    mat[1, 2] = 0.0
    path = dump_matrix(mat, tmp_path / "m.mtx")
    back = load_matrix(path)
    assert back.shape == (5, 4)
    assert np.abs(back - mat).max() <= 1e-16  # 17 significant digits round-trip


def test_load_matrix_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.mtx"
    bad.write_text("0 0 1.0 0.0\n")
    with pytest.raises(ValueError):
        load_matrix(bad)
    bad.write_text("# 2 2\n0 0 1.0\n")
    with pytest.raises(ValueError):
        load_matrix(bad)


# ---------------------------------------------------------------------------
# configuration grammar


def test_parse_config_values(fast_config):
    assert fast_config.q == pytest.approx(0.7 + 0.2j)
    assert fast_config.dim_pair == 6
    assert fast_config.rep_shifts == (0.0 + 0.0j, 0.5 + 0.0j)
    assert fast_config.family_signs == ("lower",)
    assert fast_config.rspecs[2] == "general:m=0.5,K=-1,sign=lower"


def test_parse_config_missing_q(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("kappa = 0\n")
    with pytest.raises(ConfigError, match="must set q"):
        parse_config(path)


def test_parse_config_unknown_key(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("q = 1.3\nwibble = 3\n")
    with pytest.raises(ConfigError, match="line 2"):
        parse_config(path)


def test_parse_config_malformed_line(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("q = 1.3\njust words\n")
    with pytest.raises(ConfigError, match="line 2"):
        parse_config(path)


def test_parse_config_bad_value(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("q = 1.3\nkappa = 1.5\n")
    with pytest.raises(ConfigError, match="line 2"):
        parse_config(path)


def test_parse_config_unterminated_list(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("q = 1.3\nrspecs = [quantum_double\n")
    with pytest.raises(ConfigError, match="line 2"):
        parse_config(path)


def test_parse_config_cap_violation(tmp_path):
    # rejected before any computation
    path = tmp_path / "c.cfg"
    path.write_text("q = 1.3\ncaps.tensor = 10\n")
    with pytest.raises(ConfigError, match="cap"):
        parse_config(path)


def test_parse_config_window_violation(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("q = 1.3\nwindow = 11\ndims.pair = 12\n")
    with pytest.raises(ConfigError, match="window"):
        parse_config(path)


def test_parse_config_alpha_from_kappa(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text('q = 1.3\nkappa = 0\n')
    config = parse_config(path)
    assert config.params().alpha == pytest.approx(np.pi / 2)


def test_parse_rspec():
    assert parse_rspec("quantum_double").kind == "quantum_double"
    spec = parse_rspec("general:m=0.5,K=-1,sign=lower")
    assert (spec.m, spec.K, spec.sign) == (0.5, -1, "lower")
    with pytest.raises(ConfigError):
        parse_rspec("general:m=0.5")
    with pytest.raises(ConfigError):
        parse_rspec("mystery")


# ---------------------------------------------------------------------------
# suite orchestration


def test_run_suite_fast(fast_config):
    reports = run_suite(fast_config)
    assert exit_code_for(reports) == 0
    names = {r.identity for r in reports}
    assert "pairing_eqn" in names and "yang_baxter" in names
    # expected failures are present and marked
    yan_fail = [r for r in reports
                if r.params.get("rspec") == "yan_claimed" and r.identity == "intertwiner_a"]
    assert yan_fail and yan_fail[0].verdict == "fail" and yan_fail[0].expected == "fail"
    # no error entries
    assert not [r for r in reports if r.error]


def test_run_suite_empty_rspecs(fast_config):
    from dataclasses import replace
    config = replace(fast_config, rspecs=())
    reports = run_suite(config)
    assert not [r for r in reports if "rspec" in r.params]
    assert [r for r in reports if r.identity == "pairing_eqn"]


def test_determinism_byte_output(fast_config):
    a = emit_report(run_suite(fast_config), None, fast_config.echo(),
                    include_timing=False)
    b = emit_report(run_suite(fast_config), None, fast_config.echo(),
                    include_timing=False)
    assert a == b


def test_emit_report_roundtrip(tmp_path, fast_config):
    reports = run_suite(fast_config)
    path = tmp_path / "report.json"
    emit_report(reports, path, fast_config.echo())
    doc = json.loads(path.read_text())
    assert set(doc) == {"config", "results"}
    assert len(doc["results"]) == len(reports)
    entry = doc["results"][0]
    for key in ("identity", "params", "dims", "window", "raw_residual",
                "normalized_residual", "verdict", "wall_time"):
        assert key in entry
    back = [IdentityReport(**{k: v for k, v in r.items()
                              if k in IdentityReport.__dataclass_fields__})
            for r in doc["results"]]
    assert [r.identity for r in back] == [r.identity for r in reports]
    assert [r.normalized_residual for r in back] == \
        [r.normalized_residual for r in reports]


def test_exit_code_semantics():
    ok = make_report("x", {}, [2], 1, 0.0, 0.0, 1e-9)
    ok.expected = "pass"
    bad = make_report("y", {}, [2], 1, 1.0, 1.0, 1e-9)
    bad.expected = "pass"
    info = make_report("z", {}, [2], 1, 5e-8, 5e-8, 1e-9)
    assert exit_code_for([ok]) == 0
    assert exit_code_for([ok, info]) == 0  # info entries never block
    assert exit_code_for([ok, bad]) == 1
    bad.expected = "fail"
    assert exit_code_for([ok, bad]) == 0  # expected failure


def test_expected_for_patterns():
    rpt = make_report("intertwiner_a", {"rspec": "yan_claimed"}, [8], 3, 1.0, 1.0, 1e-9)
    assert _expected_for(rpt, ("yan_claimed:intertwiner_a",)) == "fail"
    rpt2 = make_report("intertwiner_a", {"rspec": "quantum_double"}, [8], 3, 0.0, 0.0, 1e-9)
    assert _expected_for(rpt2, ("yan_claimed:intertwiner_a",)) == "pass"
    rpt3 = make_report("hopf_ideal_witness", {}, [8], 3, 1.0, 1.0, 1e-9)
    assert _expected_for(rpt3, ("*:hopf_ideal_witness",)) == "fail"


# ---------------------------------------------------------------------------
# command line


def test_cli_verify_writes_report(tmp_path):
    cfg = tmp_path / "suite.cfg"
    cfg.write_text(FAST_CONFIG, encoding="utf-8")
    out = tmp_path / "report.json"
    code = main(["--config", str(cfg), "--out", str(out), "verify"])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["results"]


def test_cli_bad_config_exits_2(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("q = 1.3\nnope = 1\n")
    assert main(["--config", str(cfg), "verify"]) == 2
    assert main(["--config", str(tmp_path / "missing.cfg"), "verify"]) == 2


def test_cli_rmatrix_dump(tmp_path):
    code = main(["--q", "1.3", "--dim", "6", "--dump-dir", str(tmp_path), "rmatrix",
                 "--rspec", "quantum_double"])
    assert code == 0
    mat = load_matrix(tmp_path / "rmatrix_quantum_double.mtx")
    assert mat.shape == (36, 36)


def test_cli_pairing(tmp_path, capsys):
    code = main(["--q", "1.3", "--dump-dir", str(tmp_path), "pairing",
                 "--kmax", "1", "--mmax", "1"])
    assert code == 0
    assert "pairing max deviation" in capsys.readouterr().out
    assert load_matrix(tmp_path / "pairing_gram.mtx").shape == (4, 4)


def test_cli_scan(tmp_path):
    cfg = tmp_path / "suite.cfg"
    cfg.write_text(FAST_CONFIG + 'scan.q_values = [1.2, 1.4]\n', encoding="utf-8")
    out = tmp_path / "scan.json"
    code = main(["--config", str(cfg), "--out", str(out), "scan"])
    assert code == 0
    assert (tmp_path / "scan_0.json").exists()
    assert (tmp_path / "scan_1.json").exists()


def test_cli_scan_without_values_errors(tmp_path):
    cfg = tmp_path / "suite.cfg"
    cfg.write_text(FAST_CONFIG, encoding="utf-8")
    assert main(["--config", str(cfg), "scan"]) == 2


def test_workers_env_preserves_results(fast_config, monkeypatch):
    serial = run_suite(fast_config)
    monkeypatch.setenv("QBOSON_WORKERS", "4")
    parallel = run_suite(fast_config)
    assert [r.identity for r in serial] == [r.identity for r in parallel]
    assert [r.normalized_residual for r in serial] == \
        [r.normalized_residual for r in parallel]
