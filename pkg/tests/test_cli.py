import json
import subprocess
import sys

from wreathcenter import characters as ch
from wreathcenter import partitions as pt
from wreathcenter.cli import run, split_fields


def call(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_split_fields_respects_braces():
    line = "2; 5; {[1,1]:[1,1,1]; [2]:[2]}; {[1,1]:[3]}; 7"
    assert split_fields(line) == [
        "2",
        "5",
        "{[1,1]:[1,1,1]; [2]:[2]}",
        "{[1,1]:[3]}",
        "7",
    ]


def test_classes_command(capsys):
    code, out, _ = call(capsys, "classes", "--k", "2", "--n", "2")
    assert code == 0
    rows = [split_fields(line) for line in out.strip().splitlines()]
    assert len(rows) == 5
    assert sum(int(r[-1]) for r in rows) == 8


def test_universal_command(capsys):
    code, out, _ = call(
        capsys, "universal", "--k", "1", "--left", "{[1]:[2]}", "--right", "{[1]:[2]}"
    )
    assert code == 0
    coeffs = {split_fields(line)[3]: int(split_fields(line)[4]) for line in out.strip().splitlines()}
    assert coeffs == {"{[1]:[1,1]}": 1, "{[1]:[3]}": 3, "{[1]:[2,2]}": 2}


def test_universal_command_improper_inputs(capsys):
    code, out, _ = call(
        capsys, "universal", "--k", "2", "--left", "{[1,1]:[1]}", "--right",
        "{[1,1]:[1]; [2]:[1]}",
    )
    assert code == 0
    coeffs = {split_fields(line)[3]: int(split_fields(line)[4]) for line in out.strip().splitlines()}
    assert coeffs == {"{[1,1]:[1]; [2]:[1]}": 2, "{[1,1]:[1,1]; [2]:[1]}": 2}


def test_poly_command(capsys):
    code, out, _ = call(
        capsys, "poly", "--k", "3", "--left", "{[2,1]:[1];[3]:[1]}", "--right", "{[3]:[1]}"
    )
    assert code == 0
    rows = {
        (f[3], int(f[4])): int(f[5])
        for f in map(split_fields, out.strip().splitlines())
    }
    assert rows[("{[2,1]:[1]}", 1)] == 2
    assert rows[("{[2,1]:[1]; [3]:[1]}", 0)] == 3
    assert rows[("{[2,1]:[1]; [3]:[1,1]}", 0)] == 2


def test_multiply_with_gamma_filter(capsys):
    code, out, _ = call(
        capsys,
        "multiply",
        "--k", "1", "--n", "4",
        "--left", "{[1]:[2,1,1]}",
        "--right", "{[1]:[2,1,1]}",
        "--gamma", "{[1]:[3,1]}",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert split_fields(lines[0])[-2:] == ["{[1]:[3,1]}", "3"]


def test_multiply_requires_matching_size(capsys):
    code, _, err = call(
        capsys, "multiply", "--k", "1", "--n", "4", "--left", "{[1]:[2]}", "--right", "{[1]:[2]}"
    )
    assert code == 1
    assert "usage" in err


def test_parse_error_exit_code(capsys):
    code, _, err = call(capsys, "universal", "--k", "2", "--left", "oops", "--right", "{}")
    assert code == 1
    code, _, _ = call(capsys, "poly", "--k", "1", "--left", "{[1]:[2,1]}", "--right", "{[1]:[2]}")
    assert code == 1


def test_budget_exit_code(capsys):
    code, _, err = call(
        capsys,
        "multiply",
        "--k", "2", "--n", "3",
        "--left", "{[1,1]:[1,1,1]}",
        "--right", "{[1,1]:[1,1,1]}",
        "--max-group-size", "0",
    )
    assert code == 2
    assert "budget-exceeded" in err


def test_chartable_k1(capsys):
    code, out, _ = call(capsys, "chartable", "--k", "1", "--n", "3")
    assert code == 0
    rows = [split_fields(line) for line in out.strip().splitlines()]
    assert len(rows) == 9
    table = {(r[1], r[2]): int(r[3]) for r in rows}
    for rho in pt.partitions_of(3):
        for delta in pt.partitions_of(3):
            key = (pt.format_partition(rho), pt.format_partition(delta))
            assert table[key] == ch.sym_character(rho, delta)


def test_chartable_k2(capsys):
    code, out, _ = call(capsys, "chartable", "--k", "2", "--n", "1", "--json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    values = {(r["rho"], r["delta"]): r["value"] for r in rows}
    assert values[("{[1,1]:[1]}", "{[2]:[1]}")] == 1
    assert values[("{[2]:[1]}", "{[2]:[1]}")] == -1


def test_verify_command(capsys):
    code, out, _ = call(
        capsys, "verify", "--k", "1", "--left", "{[1]:[2]}", "--right", "{[1]:[3]}"
    )
    assert code == 0
    assert out.strip().endswith("true")


def test_json_output_matches_records(capsys):
    _, out_text, _ = call(
        capsys, "universal", "--k", "1", "--left", "{[1]:[2]}", "--right", "{[1]:[2]}"
    )
    _, out_json, _ = call(
        capsys, "universal", "--k", "1", "--left", "{[1]:[2]}", "--right", "{[1]:[2]}", "--json"
    )
    parsed = json.loads(out_json)
    text_rows = [split_fields(line) for line in out_text.strip().splitlines()]
    assert [(r["gamma"], r["coeff"]) for r in parsed] == [
        (r[3], int(r[4])) for r in text_rows
    ]


def test_cache_replay_is_byte_identical(capsys, tmp_path):
    cache = str(tmp_path / "coeffs.cache")
    argv = [
        "multiply",
        "--k", "2", "--n", "5",
        "--left", "{[1,1]:[1,1,1]; [2]:[2]}",
        "--right", "{[1,1]:[1,1,1]; [2]:[2]}",
        "--cache", cache,
    ]
    code, cold, _ = call(capsys, *argv)
    assert code == 0
    code, warm, _ = call(capsys, *argv)
    assert code == 0
    assert cold == warm
    # the second run must have been served from the cache: the file did not grow
    with open(cache, encoding="utf-8") as handle:
        lines = handle.readlines()
    assert len(lines) == len(cold.strip().splitlines())


def test_cache_deduplicates_on_load(capsys, tmp_path):
    cache = tmp_path / "coeffs.cache"
    argv = [
        "poly",
        "--k", "1",
        "--left", "{[1]:[2]}",
        "--right", "{[1]:[2]}",
        "--cache", str(cache),
    ]
    code, first, _ = call(capsys, *argv)
    assert code == 0
    # duplicate every record, then replay
    content = cache.read_text(encoding="utf-8")
    cache.write_text(content + content, encoding="utf-8")
    code, again, _ = call(capsys, *argv)
    assert code == 0
    assert again == first


def test_output_is_stable_across_processes():
    # fresh interpreters get different hash seeds; sorted output must not care
    argv = [
        sys.executable, "-m", "wreathcenter.cli",
        "universal", "--k", "2", "--left", "{[2]:[2]}", "--right", "{[1,1]:[2]}",
    ]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "envcache"
    monkeypatch.setenv("WREATH_CACHE", str(cache))
    code, out, _ = call(
        capsys, "poly", "--k", "1", "--left", "{[1]:[2]}", "--right", "{[1]:[2]}"
    )
    assert code == 0
    assert cache.exists()
