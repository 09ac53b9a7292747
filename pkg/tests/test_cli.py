"""Config parsing, suite running, determinism, and the command-line surface."""

import json
import re

import pytest

from tubecert.checks import CheckSpec
from tubecert.cli import (
    ConfigError,
    default_config_text,
    main,
    markdown_summary,
    parse_config,
    result_json_line,
    resolve_targets,
    run_suite,
)

SMALL_CONFIG = """
# a small but representative suite
id = generators
kind = invariance
target = gamma(alpha=1)
seed = 7
path = exact
param.count = 3

id = lines
kind = line_witness
target = D_plus(side=>)
seed = 8

id = closure
kind = closure
target = P_plus
seed = 9
param.draws = 3
param.inverse_draws = 2

id = rank
kind = rank
target = P_plus
seed = 10
"""


def strip_timing(lines):
    return [re.sub(r',?\s*"wall_time_ms":\s*[0-9.]+', "", ln) for ln in lines]


def test_parse_config_blocks():
    specs = parse_config(SMALL_CONFIG)
    assert [s.id for s in specs] == ["generators", "lines", "closure", "rank"]
    assert specs[0].parameters == {"count": "3"}
    assert specs[0].seed == 7
    assert specs[1].path == "exact"


def test_parse_config_rejects_bad_blocks():
    with pytest.raises(ConfigError):
        parse_config("id = a\nkind = invariance\n")  # missing target
    with pytest.raises(ConfigError):
        parse_config("id = a\nkind = nope\ntarget = M_plus\n")
    with pytest.raises(ConfigError):
        parse_config("id = a\nkind = levi\ntarget = M_plus\n\nid = a\nkind = levi\ntarget = M_plus\n")
    with pytest.raises(ConfigError):
        parse_config("just some words\n")
    with pytest.raises(ConfigError):
        parse_config("id = a\nkind = levi\ntarget = M_plus\npath = sideways\n")


def test_resolve_targets_flags_unknown_identifiers():
    specs = parse_config("id = a\nkind = levi\ntarget = M_wrong\n")
    with pytest.raises(ConfigError) as err:
        resolve_targets(specs)
    assert "a" in str(err.value)


def test_empty_config_is_empty_passing_report(tmp_path, capsys):
    cfg = tmp_path / "empty.cfg"
    cfg.write_text("# nothing here\n")
    code = main(["verify", str(cfg)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip() == ""


def test_small_suite_passes_and_is_deterministic():
    specs = parse_config(SMALL_CONFIG)
    first = run_suite(specs)
    second = run_suite(specs)
    assert all(r.status == "pass" for r in first)
    a = strip_timing([result_json_line(r) for r in first])
    b = strip_timing([result_json_line(r) for r in second])
    assert a == b


def test_parallel_execution_matches_serial():
    specs = parse_config(SMALL_CONFIG)
    serial = run_suite(specs, jobs=1)
    parallel = run_suite(specs, jobs=4)
    assert strip_timing([result_json_line(r) for r in serial]) == strip_timing(
        [result_json_line(r) for r in parallel]
    )


def test_failing_check_and_fail_fast():
    bad = parse_config(
        """
id = must-fail
kind = invariance
target = control:bad_constraint
seed = 1
param.expect = exact

id = never-runs
kind = rank
target = P_plus
seed = 2
"""
    )
    results = run_suite(bad, fail_fast=True)
    assert len(results) == 1
    assert results[0].status == "fail"
    results_all = run_suite(bad)
    assert [r.status for r in results_all] == ["fail", "pass"]


def test_error_status_keeps_suite_running():
    specs = [
        CheckSpec(id="boom", kind="levi", target="sigma(sigma=0.5)", seed=1),
        CheckSpec(id="fine", kind="levi", target="quadric_surface(p=3,n=3)", seed=2),
    ]
    results = run_suite(specs)
    assert results[0].status == "error"
    assert "DomainError" in results[0].details["error"]
    assert results[1].status == "pass"


def test_cli_verify_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.cfg"
    good.write_text(
        "id = ok\nkind = line_witness\ntarget = D_plus(side=>)\nseed = 1\n"
    )
    assert main(["verify", str(good)]) == 0
    out = capsys.readouterr().out.strip()
    payload = json.loads(out)
    assert payload["status"] == "pass" and payload["id"] == "ok"

    bad = tmp_path / "bad.cfg"
    bad.write_text(
        "id = no\nkind = invariance\ntarget = control:bad_constraint\nseed = 1\n"
        "param.expect = exact\n"
    )
    assert main(["verify", str(bad)]) == 1

    broken = tmp_path / "broken.cfg"
    broken.write_text("id = x\nkind = levi\n")
    assert main(["verify", str(broken)]) == 2
    assert main(["verify", str(tmp_path / "missing.cfg")]) == 2


def test_cli_markdown_and_out_file(tmp_path, capsys):
    cfg = tmp_path / "one.cfg"
    cfg.write_text("id = ok\nkind = line_witness\ntarget = D_plus(side=<)\nseed = 1\n")
    out_file = tmp_path / "report.jsonl"
    code = main(["verify", str(cfg), "--format", "md", "--out", str(out_file)])
    assert code == 0
    md = capsys.readouterr().out
    assert "| ok | pass |" in md
    assert "1/1 checks passed." in md
    lines = out_file.read_text().strip().splitlines()
    assert json.loads(lines[0])["id"] == "ok"


def test_cli_describe_and_list(capsys):
    assert main(["list"]) == 0
    listed = capsys.readouterr().out
    assert "M_plus" in listed and "cayley" in listed

    assert main(["describe", "M_plus"]) == 0
    text = capsys.readouterr().out
    assert "rho =" in text and "z1^2*zb1^2" in text

    assert main(["describe", "cayley"]) == 0
    text = capsys.readouterr().out
    assert "x3 = x1 x2 + x1^3" in text

    assert main(["describe", "sigma(sigma=1)"]) == 0
    text = capsys.readouterr().out
    assert "degree-4" in text

    assert main(["describe", "does_not_exist"]) == 2


def test_describe_normalizer_components(capsys):
    assert main(["describe", "normalizer(alpha=7/12)"]) == 0
    text = capsys.readouterr().out
    assert "z4 ->" in text


def test_seed_override_changes_draws_but_not_outcomes():
    specs = parse_config(SMALL_CONFIG)
    overridden = run_suite(specs, seed_override=1234)
    assert all(r.status == "pass" for r in overridden)


def test_default_config_parses_and_covers_all_kinds():
    specs = parse_config(default_config_text())
    resolve_targets(specs)
    kinds = {s.kind for s in specs}
    assert kinds == {
        "invariance", "transitivity", "levi", "chern_moser",
        "lie", "line_witness", "closure", "rank",
    }
    assert len(specs) > 40


def test_markdown_summary_counts():
    specs = parse_config(SMALL_CONFIG)[:1]
    results = run_suite(specs)
    md = markdown_summary(results)
    assert md.endswith("1/1 checks passed.")
