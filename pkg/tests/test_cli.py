import io
import re

import pytest

from tmpascal import Dyadic, build_triangle
from tmpascal.cli import main
from tmpascal.output import (
    read_triangle_csv,
    render_svg,
    write_samples_csv,
    write_triangle_csv,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs_row_output(capsys):
    code, out, _ = run(capsys, "coeffs", "--n", "4")
    assert code == 0
    assert out == "0,0,0,0,1,3,5,7,8,8,8,8,7,5,3,1\n"


def test_eval_prints_exact_value(capsys):
    code, out, _ = run(capsys, "eval", "--n", "4", "--x", "1/2")
    assert code == 0
    assert out == "-1/8\n"


def test_eval_interval_emits_sample_csv(capsys):
    code, out, _ = run(capsys, "eval", "--n", "4", "--interval", "0:1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,f"
    assert lines[1] == "0,0"
    assert "1/2,-1/8" in lines
    assert lines[-1] == "1,-1"
    code, out, _ = run(capsys, "eval", "--n", "4", "--interval", "0:1", "--decimal")
    assert out.splitlines()[0] == "x,f,decimal"
    assert "1/2,-1/8,-0.125" in out


def test_eval_needs_exactly_one_mode(capsys):
    assert run(capsys, "eval", "--n", "4")[0] == 2
    assert run(capsys, "eval", "--n", "4", "--x", "1/2", "--interval", "0:1")[0] == 2


def test_triangle_window_matches_displayed_block(capsys):
    code, out, _ = run(capsys, "triangle", "--k-max", "4", "--n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,n,value"
    assert len(lines) == 1 + 20
    parsed = read_triangle_csv(io.StringIO(out))
    table = build_triangle(k_max=4, n_max=3)
    assert parsed == [(k, n, v) for k, n, v in table.window(0, 4, 0, 3)]


def test_triangle_csv_round_trip_rational(tmp_path, capsys):
    from tmpascal import sturmian_init

    out_file = tmp_path / "window.csv"
    code, _, _ = run(
        capsys, "triangle", "--k-max", "9", "--n", "2", "--alpha", "2/3", "--out", str(out_file)
    )
    assert code == 0
    with open(out_file) as handle:
        parsed = read_triangle_csv(handle)
    table = build_triangle(sturmian_init("2/3"), k_max=9, n_max=2)
    assert parsed == [(k, n, v) for k, n, v in table.window(0, 9, 0, 2)]


def test_verify_suites_pass(capsys):
    for argv in (
        ("verify", "--suite", "lemma1", "--n", "4", "--k-max", "8"),
        ("verify", "--suite", "bounds", "--n", "6"),
        ("verify", "--suite", "growth", "--n", "5"),
        ("verify", "--suite", "lemma5", "--n", "5", "--m-max", "8"),
        ("verify", "--suite", "theorem", "--n", "5", "--m-max", "8"),
        ("verify", "--suite", "residual", "--n", "6"),
        ("verify", "--suite", "operator", "--k-max", "64", "--n", "8"),
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        assert out.rstrip().splitlines()[-1] == "PASS", argv


def test_verify_residual_honest_failure_on_half(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "residual", "--n", "6", "--x", "1/2")
    assert code == 1
    assert out.rstrip().splitlines()[-1] == "FAIL"


def test_residual_csv_contains_frozen_values(tmp_path, capsys):
    out_file = tmp_path / "scan.csv"
    code, _, _ = run(
        capsys, "verify", "--suite", "residual", "--n", "5", "--x", "1", "--out", str(out_file)
    )
    assert code == 0
    text = out_file.read_text()
    assert text.splitlines()[0] == "n,X,integral,lhs,rhs,residual"
    assert "-3/16" in text and "-1/8" in text


def test_sturmian_probe_csv(capsys):
    code, out, _ = run(capsys, "sturmian", "--alpha", "2/3", "--k-max", "32")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,running_max"
    peaks = [line.split(",")[1] for line in lines[1:]]
    assert peaks[0] == "0" and peaks[-1] != "0"


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "eval", "--n", "4", "--x", "junk")[0] == 2
    assert run(capsys, "sturmian", "--alpha", "5/3", "--k-max", "8")[0] == 2
    assert run(capsys, "plot", "--levels", "4", "--interval", "nope")[0] == 2
    assert main(["nonsense"]) == 2
    assert main(["verify", "--suite", "wat"]) == 2


def test_budget_exhaustion_exits_three(capsys):
    code, _, err = run(capsys, "triangle", "--k-max", "100000", "--n", "400", "--mem-budget-mb", "1")
    assert code == 3
    assert "budget" in err


def test_cache_round_trip_is_byte_identical(tmp_path, capsys):
    cache_dir = tmp_path / "cache"
    cold = tmp_path / "cold.csv"
    warm = tmp_path / "warm.csv"
    args = ("coeffs", "--n", "8", "--method", "from_table", "--cache-dir", str(cache_dir))
    assert run(capsys, *args, "--out", str(cold))[0] == 0
    assert any(cache_dir.iterdir())
    assert run(capsys, *args, "--out", str(warm))[0] == 0
    assert cold.read_bytes() == warm.read_bytes()


def test_corrupted_cache_row_fails_verification(tmp_path, capsys):
    import hashlib

    cache_dir = tmp_path / "cache"
    args = ("verify", "--suite", "lemma1", "--n", "3", "--k-max", "4", "--cache-dir", str(cache_dir))
    assert run(capsys, *args)[0] == 0
    target = cache_dir / "tm.depth3.txt"
    head, _, payload = target.read_text().partition("\n")
    values = payload.splitlines()
    values[12] = str(int(values[12]) + 1)  # silently wrong value
    new_payload = "\n".join(values)
    digest = hashlib.sha256(new_payload.encode()).hexdigest()
    k_field = head.split()[0]
    target.write_text(f"{k_field} sha256={digest}\n" + new_payload)
    code, out, _ = run(capsys, *args)
    assert code == 1
    assert out.rstrip().splitlines()[-1] == "FAIL"


def test_checksum_mismatch_is_loud(tmp_path, capsys):
    cache_dir = tmp_path / "cache"
    args = ("coeffs", "--n", "5", "--method", "from_table", "--cache-dir", str(cache_dir))
    assert run(capsys, *args)[0] == 0
    target = cache_dir / "tm.depth5.txt"
    target.write_text(target.read_text().replace("sha256=", "sha256=dead"))
    code, _, err = run(capsys, *args)
    assert code == 1
    assert "checksum" in err


def test_cache_dir_env_fallback(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("TMP_CACHE_DIR", str(tmp_path / "envcache"))
    assert run(capsys, "coeffs", "--n", "4", "--method", "from_table")[0] == 0
    assert any((tmp_path / "envcache").iterdir())


def test_plot_svg_structure(capsys):
    code, out, _ = run(capsys, "plot", "--levels", "4,6,12", "--interval", "0:8")
    assert code == 0
    assert out.count("<polyline") == 3
    assert 'data-label="level 12"' in out


def test_plot_level_passes_through_odd_integer_value(capsys):
    code, out, _ = run(capsys, "plot", "--levels", "4", "--interval", "0:2")
    assert code == 0
    points = re.search(r'points="([^"]+)"', out).group(1).split()
    pairs = [tuple(float(part) for part in point.split(",")) for point in points]
    assert (1.0, 1.0) in pairs  # y axis is flipped, so value -1 plots at +1


def test_plot_left_of_origin_is_flat_zero(capsys):
    # the --interval=value form keeps argparse from eating the leading minus
    code, out, _ = run(capsys, "plot", "--levels", "4", "--interval=-2:0")
    assert code == 0
    points = re.search(r'points="([^"]+)"', out).group(1).split()
    assert all(point.endswith(",0") for point in points)


def test_empty_window_gives_header_only():
    stream = io.StringIO()
    write_triangle_csv(stream, iter(()))
    assert stream.getvalue() == "k,n,value\n"


def test_samples_csv_optional_decimal_column():
    stream = io.StringIO()
    write_samples_csv(stream, [(Dyadic(1, 1), Dyadic(-1, 3))], decimal=True)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "x,f,decimal"
    assert lines[1] == "1/2,-1/8,-0.125"


def test_render_svg_rejects_empty():
    with pytest.raises(ValueError):
        render_svg([])
