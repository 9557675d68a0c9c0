"""Command line interface.

    lexnet preprocess book.txt --language en --stopwords sw.txt --lemmas lm.tsv --out streams/
    lexnet build streams/B1-EN.lemmas.txt --out B1-EN.csv
    lexnet metrics B1-EN.csv --directed
    lexnet er --nodes 2389 --links 12901 --directed --seed 7
    lexnet analyze manifest.tsv --out report/ --format csv
    lexnet export report/report.json --format csv --out tables/

Exit status: 0 on success, 2 for bad input, 3 when an internal check fails.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .builder import BuildOptions, build_cooccurrence
from .er import ERSpec, er_reference_metrics
from .errors import InvariantViolation, LexnetError
from .experiment import (
    ComparisonReport,
    CorpusManifest,
    SmallWorldConfig,
    analyze,
    bundled_manifest,
    emit_report,
)
from .graph import LexNetwork
from .metrics import compute_metrics
from .text import LemmaMap, RawDocument, StopwordList, TokenStream, preprocess

log = logging.getLogger("lexnet")

EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _u64(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _common(directed_default=None):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=_u64, default=42, help="random seed (default 42)")
    p.add_argument("--er-samples", type=_positive, default=1,
                   help="ER graphs averaged per network (default 1)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", type=Path, help="output file or directory")
    if directed_default is not None:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--directed", dest="directed", action="store_true", default=directed_default)
        g.add_argument("--undirected", dest="directed", action="store_false")
    return p


def _emit_json(obj, out):
    text = json.dumps(obj, ensure_ascii=False, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")


def _emit_record(record, args):
    if args.format == "csv":
        row = record.to_dict()
        text = ",".join(row) + "\n" + ",".join("NA" if v is None else str(v) for v in row.values()) + "\n"
        if args.out is None:
            sys.stdout.write(text)
        else:
            args.out.write_text(text, encoding="utf-8")
    else:
        _emit_json(record.to_dict(), args.out)


def cmd_preprocess(args):
    doc_id = args.id or Path(args.text).stem
    doc = RawDocument.from_file(args.text, doc_id, args.language)
    stop = (StopwordList.load(args.stopwords, args.language) if args.stopwords
            else StopwordList(args.language))
    lemmas = LemmaMap.load(args.lemmas, args.language) if args.lemmas else LemmaMap(args.language)
    stream = preprocess(doc, stop, lemmas)
    lemma_path, counts_path = stream.save(args.out or Path("."))
    log.info("%s: %d words, %d after stopword removal -> %s",
             doc_id, stream.count_with_stopwords, stream.count_without_stopwords, lemma_path)
    _emit_json(stream.counts(), None)


def _load_graph(paths, directed):
    if len(paths) == 1 and paths[0].suffix == ".csv":
        return LexNetwork.read_edge_list(paths[0], directed)
    streams = [TokenStream.load(p) for p in paths]
    g = build_cooccurrence(streams, BuildOptions())
    return g if directed else g.to_undirected()


def cmd_build(args):
    g = _load_graph(args.streams, args.directed)
    out = args.out or Path(args.streams[0].name.split(".")[0] + ".csv")
    g.write_edge_list(out)
    log.info("%r -> %s", g, out)


def cmd_metrics(args):
    g = _load_graph(args.inputs, args.directed)
    _emit_record(compute_metrics(g), args)


def cmd_er(args):
    spec = ERSpec(args.nodes, args.links, args.directed, args.seed, args.er_samples)
    _emit_record(er_reference_metrics(spec), args)


def cmd_analyze(args):
    manifest_path = args.manifest if args.manifest is not None else bundled_manifest(args.bundled)
    manifest = CorpusManifest.load(manifest_path)
    config = SmallWorldConfig(args.c_threshold, args.l_threshold)
    report = analyze(manifest, args.seed, args.er_samples, config, args.workers)
    out = args.out or Path("report")
    emit_report(report, out, "json")
    if args.format == "csv":
        emit_report(report, out, "csv")
    for row in report.rows:
        v = row.verdict
        log.info("%s-%s %-10s N=%d K=%d C/C_er=%s L/L_er=%s small-world=%s",
                 row.book, row.language.upper(), row.directedness, row.network.N, row.network.K,
                 "NA" if v is None or v.C_ratio is None else f"{v.C_ratio:.1f}",
                 "NA" if v is None else f"{v.L_ratio:.2f}", bool(v and v.is_small_world))


def cmd_export(args):
    report = ComparisonReport.load(args.report)
    for path in emit_report(report, args.out or Path("."), args.format):
        log.info("wrote %s", path)


def build_parser():
    parser = argparse.ArgumentParser(prog="lexnet", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", parents=[_common()], help="text -> lemma stream + word counts")
    p.add_argument("text", type=Path)
    p.add_argument("--language", required=True)
    p.add_argument("--stopwords", type=Path)
    p.add_argument("--lemmas", type=Path)
    p.add_argument("--id", help="document id (default: file stem)")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("build", parents=[_common(directed_default=True)],
                       help="lemma stream(s) -> edge-list CSV")
    p.add_argument("streams", type=Path, nargs="+")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("metrics", parents=[_common(directed_default=True)],
                       help="edge list or lemma stream(s) -> metrics record")
    p.add_argument("inputs", type=Path, nargs="+")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("er", parents=[_common(directed_default=False)],
                       help="metrics of a matched Erdős–Rényi graph")
    p.add_argument("--nodes", "-N", type=_positive, required=True)
    p.add_argument("--links", "-K", type=int, required=True)
    p.set_defaults(func=cmd_er)

    p = sub.add_parser("analyze", parents=[_common()], help="manifest -> comparison report")
    p.add_argument("manifest", type=Path, nargs="?",
                   help="manifest TSV (default: the bundled one named by --bundled)")
    p.add_argument("--bundled", default="mini", choices=["mini", "milton"])
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--c-threshold", type=float, default=SmallWorldConfig.c_threshold)
    p.add_argument("--l-threshold", type=float, default=SmallWorldConfig.l_threshold)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export", parents=[_common()], help="report JSON -> CSV or JSON tables")
    p.add_argument("report", type=Path)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except LexnetError as exc:
        print(f"lexnet: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvariantViolation, AssertionError) as exc:
        print(f"lexnet: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
