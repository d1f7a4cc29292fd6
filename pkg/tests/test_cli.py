import json

from genocchi import dellac
from genocchi.cli import run


def lines_of(capsys):
    return capsys.readouterr().out.splitlines()


def test_seq_h_golden(capsys):
    assert run(["seq", "h", "--count", "7"]) == 0
    assert lines_of(capsys) == ["1 1 2 7 38 295 3098"]


def test_seq_median_golden(capsys):
    assert run(["seq", "H", "--count", "5"]) == 0
    assert lines_of(capsys) == ["1 2 8 56 608"]


def test_seq_genocchi1_golden(capsys):
    assert run(["seq", "genocchi1", "--count", "5"]) == 0
    assert lines_of(capsys) == ["1 1 3 17 155"]


def test_seq_json_round_trip(capsys):
    assert run(["seq", "H", "--count", "3", "--json"]) == 0
    raw = lines_of(capsys)[0]
    assert raw == '{"name":"H","label":"H_{2n-1}","values":["1","2","8"]}'
    assert json.dumps(json.loads(raw), separators=(",", ":")) == raw


def test_seq_h_json_has_no_label(capsys):
    assert run(["seq", "h", "--count", "2", "--json"]) == 0
    assert lines_of(capsys)[0] == '{"name":"h","values":["1","1"]}'


def test_poly_golden(capsys):
    assert run(["poly", "hq", "--n", "4"]) == 0
    assert lines_of(capsys) == ["1 + 3*q + 7*q^2 + 10*q^3 + 10*q^4 + 6*q^5 + q^6"]


def test_poly_variants(capsys):
    assert run(["poly", "tildehq", "--n", "3"]) == 0
    assert run(["poly", "barc", "--n", "4"]) == 0
    out = lines_of(capsys)
    assert out == ["1 + 3*q + 2*q^2 + q^3"] * 2


def test_poly_json_round_trip(capsys):
    assert run(["poly", "hq", "--n", "3", "--json"]) == 0
    raw = lines_of(capsys)[0]
    assert raw == '{"coeffs":["1","2","3","1"]}'
    assert json.dumps(json.loads(raw), separators=(",", ":")) == raw


def test_enumerate_dellac_with_limit(capsys):
    assert run(["enumerate", "dellac", "--n", "3", "--limit", "2"]) == 0
    out = lines_of(capsys)
    assert out == [
        "1: 1 2",
        "2: 3 4",
        "3: 5 6",
        "",
        "1: 1 2",
        "2: 3 5",
        "3: 4 6",
        "",
        "total 7",
    ]


def test_enumerate_dellac_json_stream(capsys):
    assert run(["enumerate", "dellac", "--n", "3", "--json"]) == 0
    out = lines_of(capsys)
    assert len(out) == 8
    first = json.loads(out[0])
    assert first == {"n": 3, "columns": [[1, 2], [3, 4], [5, 6]]}
    assert json.loads(out[-1]) == {"total": "7"}


def test_enumerate_admissible_and_motzkin(capsys):
    assert run(["enumerate", "admissible", "--n", "2"]) == 0
    assert lines_of(capsys) == ["1", "2", "total 2"]
    assert run(["enumerate", "motzkin", "--n", "3", "--json"]) == 0
    out = [json.loads(line) for line in lines_of(capsys)]
    assert out[-1] == {"total": "4"}
    assert {tuple(o["heights"]) for o in out[:-1]} == {
        (0, 0, 0, 0),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (0, 1, 1, 0),
    }


def test_count_subcommands(capsys):
    assert run(["count", "dumont", "--n", "2"]) == 0
    assert run(["count", "triangles", "--n", "3"]) == 0
    assert lines_of(capsys) == ["2", "38"]


def test_series_viennot_golden(capsys):
    assert run(["series", "viennot", "--order", "5"]) == 0
    assert lines_of(capsys) == ["1 1 2 8 56 608"]


def test_series_f1_prints_polynomials(capsys):
    assert run(["series", "f1", "--order", "3"]) == 0
    assert lines_of(capsys) == [
        "s^0: 1",
        "s^1: 1",
        "s^2: 1 + q",
        "s^3: 1 + 3*q + 2*q^2 + q^3",
    ]


def test_series_json_round_trip(capsys):
    assert run(["series", "hn", "--order", "3", "--json"]) == 0
    raw = lines_of(capsys)[0]
    data = json.loads(raw)
    assert data == {
        "order": 3,
        "coeffs": [{"coeffs": ["1"]}, {"coeffs": ["1"]}, {"coeffs": ["2"]}, {"coeffs": ["7"]}],
    }
    assert json.dumps(data, separators=(",", ":")) == raw


def test_series_custom_catalan(tmp_path, capsys):
    # all-ones numerators give the Catalan generating function
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"kind": "S", "c": [1] * 10}), encoding="utf-8")
    assert run(["series", "custom", "--spec", str(spec), "--order", "6"]) == 0
    catalan = [1]
    for _ in range(6):
        catalan.append(sum(catalan[i] * catalan[-1 - i] for i in range(len(catalan))))
    assert lines_of(capsys) == [" ".join(str(c) for c in catalan)]


def test_series_custom_preset_file(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"preset": "hn"}), encoding="utf-8")
    assert run(["series", "custom", "--spec", str(spec), "--order", "4"]) == 0
    assert lines_of(capsys) == ["1 1 2 7 38"]


def test_verify_passes_and_round_trips(capsys):
    assert run(["verify", "--n-max", "3", "--json"]) == 0
    raw = lines_of(capsys)[0]
    data = json.loads(raw)
    assert data["failures"] == 0
    assert json.dumps(data, separators=(",", ":")) == raw


def test_verify_table_output(capsys):
    assert run(["verify", "--n-max", "2"]) == 0
    out = capsys.readouterr()
    assert "counts-agree" in out.out
    assert "0 failure(s)" in out.out
    assert "elapsed" in out.err  # timing is informational, kept off stdout


def test_verify_detects_injected_window_bug(monkeypatch, capsys):
    monkeypatch.setattr(dellac, "_row_window", lambda n, col: (col, n + col - 1))
    assert run(["verify", "--n-max", "3"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_byte_identical_reruns(capsys):
    assert run(["verify", "--n-max", "3", "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["verify", "--n-max", "3", "--json"]) == 0
    assert capsys.readouterr().out == first


def test_usage_errors_exit_2(capsys):
    assert run(["frobnicate"]) == 2
    assert run(["seq", "nope", "--count", "3"]) == 2
    assert run(["seq", "h"]) == 2
    assert run(["series", "custom", "--order", "3"]) == 2
    assert run(["series", "f1", "--order", "3", "--spec", "x.json"]) == 2
    assert run(["verify", "--n-max", "99"]) == 2
    assert run(["seq", "h", "--count", "0"]) == 2
    capsys.readouterr()


def test_missing_spec_file_exits_2(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    assert run(["series", "custom", "--spec", str(missing), "--order", "2"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(["series", "custom", "--spec", str(bad), "--order", "2"]) == 2
    capsys.readouterr()


def test_resource_limit_exits_3(capsys):
    assert run(["count", "dumont", "--n", "5"]) == 3
    assert run(["enumerate", "dellac", "--n", "9"]) == 3
    capsys.readouterr()


def test_env_cap_reaches_the_cli(monkeypatch, capsys):
    monkeypatch.setenv("GENOCCHI_MAX_N", "2")
    assert run(["enumerate", "dellac", "--n", "3"]) == 3
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()
