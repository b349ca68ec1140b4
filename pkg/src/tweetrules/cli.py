"""Command-line interface.

Exit codes: 0 success, 1 internal error, 2 bad configuration, 3 bad input
file, 4 lint warnings.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .corpus import load_dataset, load_ids, write_predictions
from .ensemble import IntegrationStrategy, integrate_dataset
from .errors import CoverageError, FormatError, StreamCountError
from .evaluation import cross_validate, format_cv_report, format_metrics, kfold_split, score_predictions
from .learned import NBClassifier, load_predictions, predict_full, predict_per_sentence, train_nb
from .lexicon import parse_lexicon
from .rules import DEFAULT_TARGET, RuleClassifier, RuleClassifierConfig, parse_rules

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_INPUT = 3
EXIT_WARNINGS = 4

MODES = ("rule", "nb-full", "nb-sentence")


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    mode: str = "rule"
    lexicon_path: str | None = None
    rules_path: str | None = None
    dataset_path: str | None = None
    train_path: str | None = None
    output_path: str | None = None
    threshold: int = 1
    target_label: str = DEFAULT_TARGET
    seed: int = 0
    k: int = 5

    def validate(self, crossval: bool = False) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.threshold < 1:
            raise ConfigError(f"--threshold must be >= 1, got {self.threshold}")
        if crossval and self.k < 2:
            raise ConfigError(f"--k must be >= 2, got {self.k}")
        if self.mode == "rule":
            if not self.lexicon_path:
                raise ConfigError("rule mode needs --lexicon")
            if not self.rules_path:
                raise ConfigError("rule mode needs --rules")
        elif not crossval and not self.train_path:
            raise ConfigError(f"{self.mode} mode needs --train")


def _rule_classifier(cfg: RunConfig) -> RuleClassifier:
    return RuleClassifier(
        parse_lexicon(cfg.lexicon_path),
        parse_rules(cfg.rules_path),
        RuleClassifierConfig(cfg.threshold, cfg.target_label),
    )


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        mode=args.mode,
        lexicon_path=args.lexicon,
        rules_path=args.rules,
        dataset_path=args.input,
        train_path=getattr(args, "train", None),
        output_path=getattr(args, "out", None),
        threshold=args.threshold,
        target_label=args.target_label,
        seed=getattr(args, "seed", 0),
        k=getattr(args, "k", 5),
    )


def cmd_classify(args) -> int:
    cfg = _config_from_args(args)
    cfg.validate()
    data = load_dataset(cfg.dataset_path, has_labels=False)
    scores = None
    if cfg.mode == "rule":
        clf = _rule_classifier(cfg)
        preds = [(ex.id, clf(ex)) for ex in data]
    else:
        model = train_nb(load_dataset(cfg.train_path, has_labels=True))
        if cfg.mode == "nb-full":
            results = {ex.id: predict_full(model, ex.text) for ex in data}
            preds = [(i, lab) for i, (lab, _) in results.items()]
            if args.with_scores:
                scores = {i: s for i, (_, s) in results.items()}
        else:
            preds = [(ex.id, predict_per_sentence(model, ex.text)[0]) for ex in data]
    write_predictions(cfg.output_path, preds, scores)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    gold = load_dataset(args.gold, has_labels=True)
    preds = load_predictions(args.pred, expected_ids=gold.ids)
    text = format_metrics(*score_predictions(gold, preds))
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_crossval(args) -> int:
    cfg = _config_from_args(args)
    cfg.validate(crossval=True)
    data = load_dataset(cfg.dataset_path, has_labels=True)
    try:
        kfold_split(data, cfg.k, cfg.seed)
    except ValueError as err:
        raise ConfigError(str(err)) from None
    if cfg.mode == "rule":
        clf = _rule_classifier(cfg)
        system = lambda train: clf  # noqa: E731
    else:
        system = NBClassifier.trainer("full" if cfg.mode == "nb-full" else "sentence")
    report = cross_validate(data, cfg.k, cfg.seed, system)
    text = format_cv_report(report, cfg.mode, style=args.format)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.predictions:
        write_predictions(args.predictions, list(report.predictions.items()))
    return EXIT_OK


def cmd_integrate(args) -> int:
    strategy = IntegrationStrategy(args.strategy)
    roles = [args.full, args.per_sentence, args.rules]
    if strategy is IntegrationStrategy.PRECEDENCE:
        if args.stream:
            raise ConfigError("precedence takes --full/--per-sentence/--rules, not --stream")
        if not all(roles):
            raise ConfigError("precedence needs all of --full, --per-sentence and --rules")
        paths = roles
    else:
        if any(roles):
            raise ConfigError(f"{strategy.value} takes --stream, not role flags")
        paths = args.stream or []
        if len(paths) < 2:
            raise ConfigError(f"{strategy.value} needs at least 2 --stream files, got {len(paths)}")
    ids = load_ids(args.ids)
    streams = [load_predictions(p, expected_ids=ids) for p in paths]
    result = integrate_dataset(strategy, streams, ids)
    write_predictions(args.out, result.items(ids))
    return EXIT_OK


def lint_resources(lexicon, ruleset, target_label: str = DEFAULT_TARGET) -> list[str]:
    """Warnings for rules that use unknown classes or can never yield a target-labelled span."""
    classes = lexicon.classes
    labelled = {e.word_class for e in lexicon.entries if e.label == target_label}
    warnings = []
    for rule in ruleset.rules:
        unknown = [c for c in dict.fromkeys(rule.elements) if c not in classes]
        if unknown:
            warnings.append(f"rule '{rule}': class(es) not in lexicon: {', '.join(unknown)}")
        elif rule.label_override is None and rule.elements[rule.head] not in labelled:
            warnings.append(
                f"rule '{rule}': unreachable, no {rule.elements[rule.head]} entry carries label '{target_label}'"
            )
        elif rule.label_override is not None and rule.label_override != target_label:
            warnings.append(f"rule '{rule}': unreachable, overrides label to '{rule.label_override}'")
    return warnings


def cmd_lint(args) -> int:
    lexicon = parse_lexicon(args.lexicon)
    ruleset = parse_rules(args.rules)
    warnings = lint_resources(lexicon, ruleset, args.target_label)
    for w in warnings:
        print(f"warning: {w}")
    print(f"{len(lexicon)} entries, {len(ruleset)} rules, {len(warnings)} warnings")
    return EXIT_WARNINGS if warnings else EXIT_OK


def _add_rule_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=MODES, default="rule")
    p.add_argument("--lexicon", help="lexicon file (rule mode)")
    p.add_argument("--rules", help="rule file (rule mode)")
    p.add_argument("--threshold", type=int, default=1, help="minimum informative span count")
    p.add_argument("--target-label", default=DEFAULT_TARGET)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tweetrules", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="label a dataset and write a prediction TSV")
    _add_rule_args(p)
    p.add_argument("--train", help="labelled dataset for nb modes")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--with-scores", action="store_true", help="nb-full: add the Informative posterior column")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="positive-class P/R/F1 of a prediction file")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--report", help="also write the printed metrics to this file")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("crossval", help="stratified k-fold cross-validation")
    _add_rule_args(p)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.add_argument("--out", help="also write the report to this file")
    p.add_argument("--predictions", help="write out-of-fold predictions to this file")
    p.set_defaults(func=cmd_crossval)

    p = sub.add_parser("integrate", help="combine prediction files")
    p.add_argument("--strategy", choices=[s.value for s in IntegrationStrategy], required=True)
    p.add_argument("--stream", action="append", help="prediction file (vote/and/or); repeat")
    p.add_argument("--full", help="precedence: full-text model predictions")
    p.add_argument("--per-sentence", help="precedence: per-sentence model predictions")
    p.add_argument("--rules", help="precedence: rule-based predictions")
    p.add_argument("--ids", required=True, help="dataset or id list fixing the output ids and order")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("lint", help="check a lexicon and rule set")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--rules", required=True)
    p.add_argument("--target-label", default=DEFAULT_TARGET)
    p.set_defaults(func=cmd_lint)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, StreamCountError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except (FormatError, CoverageError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as err:  # noqa: BLE001
        print(f"internal error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
