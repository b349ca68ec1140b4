"""Rebuild the frozen regression fixtures in tests/golden/ from the demo data.

    python scripts/regen_golden.py

Only run this after an intended behaviour change; review the diff before committing.
"""

import contextlib
import io
from pathlib import Path

from tweetrules.cli import main

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "tweetrules" / "data"
GOLDEN = ROOT / "tests" / "golden"


def run(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main([str(a) for a in argv])
    if code != 0:
        raise SystemExit(f"{argv[0]} exited with {code}")
    return buf.getvalue()


def main_():
    GOLDEN.mkdir(exist_ok=True)
    lex, rules = DATA / "demo.lex", DATA / "demo.rules"
    corpus, heldout = DATA / "demo_corpus.tsv", DATA / "demo_heldout.tsv"

    for fmt, suffix in (("text", "txt"), ("kv", "kv")):
        run("crossval", "--mode", "rule", "--lexicon", lex, "--rules", rules, "--in", corpus,
            "--k", 5, "--seed", 7, "--format", fmt, "--out", GOLDEN / f"crossval_rule_k5_s7.{suffix}")

    run("classify", "--mode", "rule", "--lexicon", lex, "--rules", rules, "--threshold", 1,
        "--in", heldout, "--out", GOLDEN / "e2e_rule.tsv")
    run("classify", "--mode", "nb-full", "--train", corpus, "--in", heldout, "--out", GOLDEN / "e2e_nb_full.tsv")
    run("classify", "--mode", "nb-sentence", "--train", corpus, "--in", heldout, "--out", GOLDEN / "e2e_nb_sentence.tsv")
    run("integrate", "--strategy", "precedence", "--full", GOLDEN / "e2e_nb_full.tsv",
        "--per-sentence", GOLDEN / "e2e_nb_sentence.tsv", "--rules", GOLDEN / "e2e_rule.tsv",
        "--ids", heldout, "--out", GOLDEN / "e2e_integrated.tsv")
    run("evaluate", "--gold", heldout, "--pred", GOLDEN / "e2e_integrated.tsv", "--report", GOLDEN / "e2e_metrics.txt")


if __name__ == "__main__":
    main_()
