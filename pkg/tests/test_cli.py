import io

import pytest

from conftest import drive

from kannada_ime import cli
from kannada_ime.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, ScriptError, parse_script
from kannada_ime.composer import ComposerConfig, DefaultVowel, OhokMode


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write_script(tmp_path, text, name="script.txt"):
    p = tmp_path / name
    p.write_text(text, "utf-8")
    return str(p)


def test_compose_simple(tmp_path):
    code, out, err = run_cli(["compose", write_script(tmp_path, "k n f n w")])
    assert code == EXIT_OK
    assert out == "ಕನ್ನಡ\n"
    assert err == ""


def test_compose_trace(tmp_path):
    code, out, _ = run_cli(["compose", "--trace", write_script(tmp_path, "k f k")])
    assert code == EXIT_OK
    assert out.splitlines() == ["ಕ", "ಕ್", "ಕ್ಕ"]


def test_compose_mode_flags(tmp_path):
    code, out, _ = run_cli(
        ["compose", "--mode", "so", write_script(tmp_path, "k n+ w")]
    )
    assert code == EXIT_OK and out == "ಕನ್ನಡ\n"
    code, out, _ = run_cli(
        ["compose", "--default-vowel", "null", write_script(tmp_path, "k k a")]
    )
    assert code == EXIT_OK and out == "ಕ್ಕ\n"


def test_compose_notice_goes_to_stderr_and_exits_zero(tmp_path):
    code, out, err = run_cli(["compose", write_script(tmp_path, "k a i")])
    assert code == EXIT_OK
    assert out == "ಕ\n"
    assert "notice:" in err


def test_compose_no_strict_allows_blocked_form(tmp_path):
    code, out, err = run_cli(
        ["compose", "--no-strict", write_script(tmp_path, "k a i")]
    )
    assert code == EXIT_OK and out == "ಕಇ\n" and err == ""


def test_compose_no_shunyify(tmp_path):
    code, out, _ = run_cli(
        ["compose", "--no-shunyify", write_script(tmp_path, "a n f k a")]
    )
    assert code == EXIT_OK and out == "ಅನ್ಕ\n"


def test_compose_ascii_digits(tmp_path):
    assert run_cli(["compose", write_script(tmp_path, "4 2")])[1] == "೪೨\n"
    assert (
        run_cli(["compose", "--ascii-digits", write_script(tmp_path, "4 2")])[1]
        == "42\n"
    )


def test_compose_matches_library(tmp_path):
    for script, flags, config in [
        ("s f t f r I", [], ComposerConfig()),
        ("s+ t+ r I", ["--mode", "ao"], ComposerConfig(ohok_mode=OhokMode.ANDANTE)),
        (
            "a k+ a",
            ["--default-vowel", "null", "--mode", "ko"],
            ComposerConfig(default_vowel=DefaultVowel.NULL, ohok_mode=OhokMode.KANDANTE),
        ),
    ]:
        _, out, _ = run_cli(["compose", *flags, write_script(tmp_path, script)])
        assert out == drive(script, config)[1] + "\n"


def test_compose_missing_file_is_data_error():
    code, _, err = run_cli(["compose", "/nonexistent/script.txt"])
    assert code == EXIT_DATA and "error:" in err


def test_compose_bad_token_is_data_error(tmp_path):
    code, _, err = run_cli(["compose", write_script(tmp_path, "k <NOPE> a")])
    assert code == EXIT_DATA
    assert "line 1" in err and "<NOPE>" in err


def test_usage_errors_exit_one():
    assert run_cli([])[0] == EXIT_USAGE
    assert run_cli(["compose", "--mode", "bogus", "x"])[0] == EXIT_USAGE
    assert run_cli(["frobnicate"])[0] == EXIT_USAGE


def test_help_exits_zero():
    assert run_cli(["--help"])[0] == EXIT_OK


def test_analyze_file(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("ಕನ್ನಡ ಅಕ್ಕ", "utf-8")
    code, out, _ = run_cli(["analyze", str(corpus)])
    assert code == EXIT_OK
    assert "mula akshara" in out


def test_analyze_csv(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("ಕನ್ನಡ", "utf-8")
    code, out, _ = run_cli(["analyze", "--format", "csv", str(corpus)])
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("category,")


def test_analyze_non_kannada_is_data_error(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("pure ascii text", "utf-8")
    code, _, err = run_cli(["analyze", str(corpus)])
    assert code == EXIT_DATA and "no Kannada syllables" in err


def test_savings_grid_defaults():
    code, out, _ = run_cli(["savings"])
    assert code == EXIT_OK
    for number in ("174", "186", "193", "87", "11", "242"):
        assert number in out


def test_savings_from_corpus(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("ಕನ್ನಡ ನುಡಿ", "utf-8")
    code, out, _ = run_cli(["savings", "--freq", str(corpus)])
    assert code == EXIT_OK


def test_custom_layout_flag(tmp_path):
    # swap the ka/ga keys and keep everything else
    from importlib import resources

    doc = (
        resources.files("kannada_ime")
        .joinpath("layouts")
        .joinpath("kgp_default.layout")
        .read_text("utf-8")
    )
    swapped = []
    for line in doc.splitlines():
        parts = line.split()
        if len(parts) == 3 and parts[2] == "ka" and parts[1] == "-":
            line = line.replace(" ka", " ga")
        elif len(parts) == 3 and parts[2] == "ga" and parts[1] == "-":
            line = line.replace(" ga", " ka")
        swapped.append(line)
    layout_file = tmp_path / "swapped.layout"
    layout_file.write_text("\n".join(swapped) + "\n", "utf-8")
    code, out, _ = run_cli(
        ["compose", "--layout", str(layout_file), write_script(tmp_path, "k")]
    )
    assert code == EXIT_OK and out == "ಗ\n"


def test_bad_layout_is_data_error(tmp_path):
    layout_file = tmp_path / "bad.layout"
    layout_file.write_text("k - ka\n", "utf-8")
    code, _, err = run_cli(
        ["compose", "--layout", str(layout_file), write_script(tmp_path, "k")]
    )
    assert code == EXIT_DATA and "error:" in err


def test_parse_script_tokens():
    events = parse_script("k K k+ <BS> <SP> 7")
    assert [e.shift for e in events[:2]] == [False, True]
    assert events[2].hold
    assert events[3].base == cli.km.BACKSPACE
    assert events[4].base == " "
    assert events[5].base == "7"


def test_parse_script_error_position():
    with pytest.raises(ScriptError) as exc:
        parse_script("k a\nx ?? y")
    assert exc.value.line == 2 and exc.value.column == 3


def test_parse_script_rejects_held_digit():
    with pytest.raises(ScriptError, match="hold"):
        parse_script("3+")
