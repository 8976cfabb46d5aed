"""Command-line front end: trace one run, re-score a stored matrix, or sweep.

Exit codes: 0 success, 1 load/validation failure, 2 bad flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import AnswerSet, CorpusError, Level, load_answer_set, load_artifacts, validate_dataset
from .evaluate import (
    EvalResult,
    eval_report_dict,
    evaluate_links,
    format_trace_report,
    traceability_analysis,
)
from .preprocess import default_stop_list, load_stop_list, preprocess_corpus
from .reference import DATASETS, reference_for
from .retrieval import CandidateLinkList, apply_filter, generate_links, read_rtm, write_rtm
from .weighting import (
    DISPLAY_NAMES,
    MetricId,
    global_weight,
    metric_from_cli_name,
    term_document_stats,
)

METRIC_CHOICES = tuple(metric.value for metric in MetricId)

DEFAULT_FILTERS = "0,0.05,0.2,0.25"

_EMPTY_RETRIEVAL_NOTE = "precision of an empty retrieval is reported as 0.0 by convention"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracelink",
        description="Recover candidate trace links between high- and low-level artifacts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    trace = sub.add_parser("trace", help="generate one filtered trace matrix")
    _add_corpus_flags(trace)
    trace.add_argument("--metric", choices=METRIC_CHOICES, default=MetricId.BASELINE_IDF.value)
    trace.add_argument("--filter", type=float, default=0.0, help="similarity threshold (strict >)")
    trace.add_argument("--answers", help="answer-set file; enables evaluation output")
    trace.add_argument("--out", default=".", help="output directory (default: current)")
    trace.set_defaults(handler=cmd_trace)

    ev = sub.add_parser("eval", help="re-score a stored trace matrix against an answer set")
    ev.add_argument("rtm", help="trace matrix TSV produced by the trace command")
    ev.add_argument("--answers", required=True)
    ev.set_defaults(handler=cmd_eval)

    sweep = sub.add_parser("sweep", help="metric x filter comparison tables")
    _add_corpus_flags(sweep)
    sweep.add_argument(
        "--metric",
        default="all",
        help="comma-separated metric names, or 'all' (default)",
    )
    sweep.add_argument("--filters", default=DEFAULT_FILTERS, help="comma-separated thresholds")
    sweep.add_argument("--answers", required=True)
    sweep.add_argument("--format", choices=("md", "tsv", "json"), default="md")
    sweep.add_argument(
        "--reference",
        choices=DATASETS,
        help="juxtapose published reference numbers for this dataset",
    )
    sweep.add_argument("--out", help="directory for sweep.<format> plus sweep.json twin")
    sweep.set_defaults(handler=cmd_sweep)

    return parser


def _add_corpus_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--high", required=True, help="high-level artifacts (dir of .txt or TSV)")
    sub.add_argument("--low", required=True, help="low-level artifacts (dir of .txt or TSV)")
    sub.add_argument("--stoplist", help="stop-list file overriding the built-in default")
    sub.add_argument("--no-stem", action="store_true", help="skip stemming")
    sub.add_argument("--swap", action="store_true", help="trace in the reverse direction")


def _load_corpus(args) -> tuple:
    """Load, optionally swap direction, and preprocess both collections."""
    high_path, low_path = args.high, args.low
    if args.swap:
        high_path, low_path = low_path, high_path
    high = load_artifacts(high_path, Level.HIGH)
    low = load_artifacts(low_path, Level.LOW)

    answers = None
    if getattr(args, "answers", None):
        answers = load_answer_set(args.answers)
        if args.swap:
            answers = AnswerSet(
                true_links=frozenset((low_id, high_id) for high_id, low_id in answers.true_links)
            )
        manifest = validate_dataset(high, low, answers)
        if manifest.unresolved_answer_ids:
            print(
                "warning: answer ids not found in the collections: "
                + " ".join(manifest.unresolved_answer_ids),
                file=sys.stderr,
            )

    stop = load_stop_list(args.stoplist) if args.stoplist else default_stop_list()
    high, low, vocab = preprocess_corpus(high, low, stop, stem=not args.no_stem)
    return high, low, vocab, answers


def cmd_trace(args) -> int:
    high, low, vocab, answers = _load_corpus(args)
    stats = term_document_stats(high, low, vocab)
    gw = global_weight(metric_from_cli_name(args.metric), stats)
    links = apply_filter(generate_links(high, low, gw), args.filter)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    rtm_path = out_dir / "rtm.tsv"
    write_rtm(links, rtm_path)
    print(f"wrote {rtm_path} ({len(links)} links, metric={args.metric}, filter={args.filter:g})")

    if answers is not None:
        result = evaluate_links(links, answers)
        report = eval_report_dict(result, metric=args.metric, filter_threshold=args.filter)
        eval_path = out_dir / "evaluation.json"
        eval_path.write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
        trace_path = out_dir / "trace_report.txt"
        trace_path.write_text(format_trace_report(traceability_analysis(links, high, low)),
                              encoding="utf-8")
        print(f"wrote {eval_path} and {trace_path}")
        print(f"recall {result.recall_pct:.1f} precision {result.precision_pct:.1f}")
        if result.retrieved == 0:
            print(f"note: {_EMPTY_RETRIEVAL_NOTE}")
    return 0


def cmd_eval(args) -> int:
    retrieved = read_rtm(args.rtm)
    answers = load_answer_set(args.answers)
    pairs = {(link.high_id, link.low_id) for link in retrieved}
    relevant_retrieved = len(pairs & answers.true_links)
    result = EvalResult(
        relevant_retrieved=relevant_retrieved,
        retrieved=len(pairs),
        relevant_total=len(answers.true_links),
        recall_pct=100.0 * relevant_retrieved / len(answers.true_links),
        precision_pct=100.0 * relevant_retrieved / len(pairs) if pairs else 0.0,
    )
    print(json.dumps(eval_report_dict(result), indent=2))
    return 0


def _parse_metrics(spec: str) -> list[MetricId]:
    if spec.strip() == "all":
        return list(MetricId)
    metrics = []
    for name in spec.split(","):
        name = name.strip()
        if name:
            metrics.append(metric_from_cli_name(name))
    if not metrics:
        raise ValueError("no metrics selected")
    # keep enumeration order, drop duplicates
    ordered = [m for m in MetricId if m in metrics]
    return ordered


def _parse_filters(spec: str) -> list[float]:
    filters = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if chunk:
            filters.append(float(chunk))
    if not filters:
        raise ValueError("no filter thresholds given")
    return filters


def cmd_sweep(args) -> int:
    metrics = _parse_metrics(args.metric)
    filters = _parse_filters(args.filters)
    high, low, vocab, answers = _load_corpus(args)
    assert answers is not None  # --answers is required by the parser

    stats = term_document_stats(high, low, vocab)
    unfiltered: dict[MetricId, CandidateLinkList] = {
        metric: generate_links(high, low, global_weight(metric, stats)) for metric in metrics
    }

    tables = []
    for threshold in filters:
        rows = []
        for metric in metrics:
            result = evaluate_links(apply_filter(unfiltered[metric], threshold), answers)
            ref = reference_for(args.reference, threshold).get(metric) if args.reference else None
            rows.append(
                {
                    "metric": metric.value,
                    "term_weighting": DISPLAY_NAMES[metric],
                    "relevant_retrieved": result.relevant_retrieved,
                    "retrieved": result.retrieved,
                    "relevant_total": result.relevant_total,
                    "recall_pct": result.recall_pct,
                    "precision_pct": result.precision_pct,
                    "reference_recall_pct": ref[0] if ref else None,
                    "reference_precision_pct": ref[1] if ref else None,
                }
            )
        best_recall = max(round(r["recall_pct"], 1) for r in rows)
        best_precision = max(round(r["precision_pct"], 1) for r in rows)
        for row in rows:
            row["best_recall"] = round(row["recall_pct"], 1) == best_recall
            row["best_precision"] = round(row["precision_pct"], 1) == best_precision
        tables.append({"filter": threshold, "rows": rows})

    sweep_doc = {
        "metrics": [m.value for m in metrics],
        "filters": filters,
        "reference_dataset": args.reference,
        "note": _EMPTY_RETRIEVAL_NOTE,
        "tables": tables,
    }

    rendered = _render_sweep(sweep_doc, args.format)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / f"sweep.{args.format}").write_text(rendered, encoding="utf-8")
        twin = out_dir / "sweep.json"
        twin.write_text(json.dumps(sweep_doc, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {out_dir / ('sweep.' + args.format)} and {twin}")
    else:
        print(rendered, end="" if rendered.endswith("\n") else "\n")
    return 0


def _fmt_pct(value: float, best: bool) -> str:
    return f"{value:.1f}*" if best else f"{value:.1f}"


def _render_sweep(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"

    with_reference = doc["reference_dataset"] is not None
    if fmt == "tsv":
        header = ["filter", "metric", "recall", "precision"]
        if with_reference:
            header += ["ref_recall", "ref_precision"]
        lines = ["\t".join(header)]
        for table in doc["tables"]:
            for row in table["rows"]:
                cells = [
                    f"{table['filter']:g}",
                    row["metric"],
                    _fmt_pct(row["recall_pct"], row["best_recall"]),
                    _fmt_pct(row["precision_pct"], row["best_precision"]),
                ]
                if with_reference:
                    cells += [
                        "-" if row["reference_recall_pct"] is None
                        else f"{row['reference_recall_pct']:.1f}",
                        "-" if row["reference_precision_pct"] is None
                        else f"{row['reference_precision_pct']:.1f}",
                    ]
                lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"

    # markdown
    lines = []
    for table in doc["tables"]:
        lines.append(f"### filter {table['filter']:g}")
        lines.append("")
        header = "| Term Weighting | Recall | Precision |"
        rule = "| --- | ---: | ---: |"
        if with_reference:
            header = header[:-1] + " Ref Recall | Ref Precision |"
            rule = rule[:-1] + " ---: | ---: |"
        lines.append(header)
        lines.append(rule)
        for row in table["rows"]:
            cells = [
                row["term_weighting"],
                _fmt_pct(row["recall_pct"], row["best_recall"]),
                _fmt_pct(row["precision_pct"], row["best_precision"]),
            ]
            if with_reference:
                cells.append(
                    "-" if row["reference_recall_pct"] is None
                    else f"{row['reference_recall_pct']:.1f}"
                )
                cells.append(
                    "-" if row["reference_precision_pct"] is None
                    else f"{row['reference_precision_pct']:.1f}"
                )
            lines.append("| " + " | ".join(cells) + " |")
        lines.append("")
    lines.append(f"`*` best value per column; {_EMPTY_RETRIEVAL_NOTE}.")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (CorpusError, ValueError, LookupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
