import subprocess
import sys

import pytest

from tweetrules.cli import lint_resources, main
from tweetrules.lexicon import parse_lexicon
from tweetrules.rules import parse_rules

PRECEDENCE = "precedence"


@pytest.fixture
def tweets(write):
    return write("tweets.tsv", "1\tFirst case confirmed in Milan.\n2\tgood morning\n3\tNew #covid19 deaths!\n")


def test_classify_rule_mode(demo, tweets, tmp_path):
    out = tmp_path / "preds.tsv"
    code = main(["classify", "--mode", "rule", "--lexicon", demo["lex"], "--rules", demo["rules"],
                 "--in", str(tweets), "--out", str(out), "--threshold", "1"])
    assert code == 0
    assert out.read_text() == "1\tINFORMATIVE\n2\tUNINFORMATIVE\n3\tINFORMATIVE\n"


def test_classify_nb_modes(demo, tweets, tmp_path):
    for mode in ("nb-full", "nb-sentence"):
        out = tmp_path / f"{mode}.tsv"
        assert main(["classify", "--mode", mode, "--train", demo["corpus"], "--in", str(tweets), "--out", str(out)]) == 0
        assert [line.split("\t")[0] for line in out.read_text().splitlines()] == ["1", "2", "3"]
    out = tmp_path / "scored.tsv"
    main(["classify", "--mode", "nb-full", "--train", demo["corpus"], "--in", str(tweets), "--out", str(out), "--with-scores"])
    assert all(len(line.split("\t")) == 3 for line in out.read_text().splitlines())


@pytest.mark.parametrize(
    "extra",
    [
        ["--mode", "rule", "--lexicon", "LEX"],
        ["--mode", "rule", "--lexicon", "LEX", "--rules", "RULES", "--threshold", "0"],
        ["--mode", "nb-full"],
        ["--mode", "bogus"],
    ],
)
def test_classify_config_errors(demo, tweets, tmp_path, extra):
    extra = [demo["lex"] if a == "LEX" else demo["rules"] if a == "RULES" else a for a in extra]
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(["classify", "--in", str(tweets), "--out", str(tmp_path / "o.tsv"), *extra]))
    assert info.value.code == 2


def test_classify_bad_input_file(demo, write, tmp_path):
    bad = write("bad.tsv", "1\ttext\tMAYBE\n")
    args = ["classify", "--lexicon", demo["lex"], "--rules", demo["rules"], "--out", str(tmp_path / "o.tsv")]
    assert main(args + ["--in", str(bad)]) == 3
    assert main(args + ["--in", str(tmp_path / "missing.tsv")]) == 3


def label_lines(pattern, with_text=False):
    names = {"I": "INFORMATIVE", "U": "UNINFORMATIVE"}
    mid = "\tt" if with_text else ""
    return "".join(f"{i}{mid}\t{names[c]}\n" for i, c in enumerate(pattern))


def test_evaluate(write, capsys):
    gold = write("gold.tsv", label_lines("IIIIIUU", with_text=True))
    assert main(["evaluate", "--gold", str(gold), "--pred", str(write("perfect.tsv", label_lines("IIIIIUU")))]) == 0
    assert "P=1.0000 R=1.0000 F1=1.0000" in capsys.readouterr().out
    # tp 3, fn 2, fp 1, tn 1
    assert main(["evaluate", "--gold", str(gold), "--pred", str(write("mixed.tsv", label_lines("IIIUUIU")))]) == 0
    assert capsys.readouterr().out == "tp=3 fp=1 fn=2 tn=1\nP=0.7500 R=0.6000 F1=0.6667\n"


def test_evaluate_missing_id(write):
    gold = write("gold.tsv", "a\tt\tINFORMATIVE\nb\tt\tUNINFORMATIVE\n")
    pred = write("pred.tsv", "a\tINFORMATIVE\n")
    assert main(["evaluate", "--gold", str(gold), "--pred", str(pred)]) == 3


def crossval(demo, *extra):
    return ["crossval", "--mode", "rule", "--lexicon", demo["lex"], "--rules", demo["rules"],
            "--in", demo["corpus"], "--seed", "7", *extra]


def test_crossval_golden(demo, golden_dir, capsys):
    assert main(crossval(demo, "--k", "5")) == 0
    assert capsys.readouterr().out == (golden_dir / "crossval_rule_k5_s7.txt").read_text()
    assert main(crossval(demo, "--k", "5", "--format", "kv")) == 0
    assert capsys.readouterr().out == (golden_dir / "crossval_rule_k5_s7.kv").read_text()


def test_crossval_byte_deterministic(demo, capsys):
    main(crossval(demo))
    first = capsys.readouterr().out
    main(crossval(demo))
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("k", ["1", "1000"])
def test_crossval_bad_k(demo, k):
    assert main(crossval(demo, "--k", k)) == 2


def test_crossval_nb_and_predictions(demo, tmp_path, capsys):
    preds = tmp_path / "oof.tsv"
    assert main(["crossval", "--mode", "nb-sentence", "--in", demo["corpus"], "--seed", "7", "--predictions", str(preds)]) == 0
    assert "nb-sentence" in capsys.readouterr().out
    assert len(preds.read_text().splitlines()) == 240


def test_integrate_precedence_truth_table(golden_dir, tmp_path):
    d = golden_dir / "precedence"
    out = tmp_path / "out.tsv"
    code = main(["integrate", "--strategy", PRECEDENCE, "--full", str(d / "full.tsv"),
                 "--per-sentence", str(d / "per_sentence.tsv"), "--rules", str(d / "rules.tsv"),
                 "--ids", str(d / "ids.tsv"), "--out", str(out)])
    assert code == 0
    assert out.read_text() == (d / "expected.tsv").read_text()


def test_integrate_or_identical(golden_dir, tmp_path):
    d = golden_dir / "precedence"
    out = tmp_path / "out.tsv"
    assert main(["integrate", "--strategy", "or", "--stream", str(d / "full.tsv"), "--stream", str(d / "full.tsv"),
                 "--ids", str(d / "ids.tsv"), "--out", str(out)]) == 0
    assert out.read_text() == (d / "full.tsv").read_text()


def test_integrate_vote_three_streams(golden_dir, tmp_path):
    d = golden_dir / "precedence"
    out = tmp_path / "out.tsv"
    assert main(["integrate", "--strategy", "vote", "--stream", str(d / "full.tsv"),
                 "--stream", str(d / "per_sentence.tsv"), "--stream", str(d / "rules.tsv"),
                 "--ids", str(d / "ids.tsv"), "--out", str(out)]) == 0
    labels = [line.split("\t")[1] for line in out.read_text().splitlines()]
    assert labels == ["INFORMATIVE", "INFORMATIVE", "UNINFORMATIVE", "UNINFORMATIVE",
                      "UNINFORMATIVE", "INFORMATIVE", "UNINFORMATIVE", "INFORMATIVE"]


@pytest.mark.parametrize(
    "args",
    [
        ["--strategy", "vote", "--stream", "FULL"],
        ["--strategy", PRECEDENCE, "--full", "FULL", "--rules", "FULL"],
        ["--strategy", PRECEDENCE, "--stream", "FULL", "--stream", "FULL", "--stream", "FULL"],
        ["--strategy", "and", "--full", "FULL", "--stream", "FULL"],
    ],
)
def test_integrate_stream_count_errors(golden_dir, tmp_path, args):
    d = golden_dir / "precedence"
    args = [str(d / "full.tsv") if a == "FULL" else a for a in args]
    assert main(["integrate", *args, "--ids", str(d / "ids.tsv"), "--out", str(tmp_path / "o.tsv")]) == 2


def test_integrate_coverage_gap(golden_dir, write, tmp_path):
    d = golden_dir / "precedence"
    short = write("short.tsv", "t1\tINFORMATIVE\n")
    assert main(["integrate", "--strategy", "or", "--stream", str(d / "full.tsv"), "--stream", str(short),
                 "--ids", str(d / "ids.tsv"), "--out", str(tmp_path / "o.tsv")]) == 3


def test_lint_demo_clean(demo, capsys):
    assert main(["lint", "--lexicon", demo["lex"], "--rules", demo["rules"]]) == 0
    out = capsys.readouterr().out.strip()
    entries, rules, warnings = (int(part.split()[0]) for part in out.split(", "))
    assert entries >= 6 and rules >= 3 and warnings == 0


def test_lint_unknown_class(demo, write, capsys):
    rules = write("r.rules", "NUMord *N\nVERB *N\n")
    assert main(["lint", "--lexicon", demo["lex"], "--rules", str(rules)]) == 4
    assert "VERB" in capsys.readouterr().out


def test_lint_unreachable_rule(write):
    lex = parse_lexicon(write("l.lex", "new\tADJ\npatients\tN\n"))
    assert len(lint_resources(lex, parse_rules(write("r.rules", "ADJ *N\n")))) == 1
    assert lint_resources(lex, parse_rules(write("r2.rules", "ADJ *N -> informative\n"))) == []


def test_lint_malformed(demo, write):
    rules = write("r.rules", "NUMord N\n")
    assert main(["lint", "--lexicon", demo["lex"], "--rules", str(rules)]) == 3


def test_module_entry_point(demo):
    proc = subprocess.run([sys.executable, "-m", "tweetrules", "lint", "--lexicon", demo["lex"], "--rules", demo["rules"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("0 warnings")


def test_missing_subcommand_is_config_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
