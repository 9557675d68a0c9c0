"""Per-book analysis, small-world verdicts and the comparison report."""
from __future__ import annotations

import csv
import json
import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .builder import BuildOptions, build_cooccurrence
from .er import ERSpec, er_reference_metrics
from .errors import EmptyDocument, FormatError, InputError, LexnetError, UndefinedMeasure
from .metrics import MetricsRecord, compute_metrics
from .text import LemmaMap, RawDocument, StopwordList, preprocess

TABLE_COLUMNS = ["book", "language", "N", "k_avg", "C", "L", "D", "C_er", "L_er", "D_er"]
WORD_COUNT_COLUMNS = ["book", "language", "with_stopwords", "without_stopwords"]
VERDICT_COLUMNS = ["book", "language", "directedness", "K", "K_er", "C_ratio", "L_ratio",
                   "is_small_world", "flags", "reachable_pairs", "component_count",
                   "largest_component_size", "er_seed"]
SERIES_COLUMNS = ["language", "directedness", "book", "k_avg", "C", "L", "D"]
MEANS_COLUMNS = ["language", "directedness", "books", "k_avg", "C", "L", "D"]
DIRECTEDNESS = ("directed", "undirected")


# -- manifest ---------------------------------------------------------------

@dataclass(frozen=True)
class BookEntry:
    book_id: str
    language: str
    text_path: Path
    stopwords_path: Path
    lemma_map_path: Path

    @property
    def label(self) -> str:
        return f"{self.book_id}-{self.language.upper()}"


@dataclass(frozen=True)
class CorpusManifest:
    books: tuple

    @classmethod
    def load(cls, path) -> "CorpusManifest":
        """Tab-separated ``book_id language text stopwords lemma_map``; paths are
        resolved against the manifest's directory."""
        path = Path(path)
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise InputError(f"cannot read manifest {path}: {exc}") from exc
        books = []
        seen = set()
        for lineno, line in enumerate(lines, 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = [p.strip() for p in line.split("\t")]
            if len(parts) != 5:
                raise FormatError(f"{path}:{lineno}: expected 5 tab-separated fields")
            book_id, language = parts[0], parts[1].lower()
            if (book_id, language) in seen:
                raise FormatError(f"{path}:{lineno}: duplicate entry {book_id}/{language}")
            seen.add((book_id, language))
            resolved = []
            for p in parts[2:]:
                full = (path.parent / p).resolve()
                if not full.is_file():
                    raise InputError(f"{path}:{lineno}: no such file {full}")
                resolved.append(full)
            books.append(BookEntry(book_id, language, *resolved))
        return cls(tuple(books))


def bundled_manifest(name: str = "mini") -> Path:
    """Path of a manifest shipped with the package: ``mini`` (3-language parallel
    sample) or ``milton`` (Paradise Lost, English)."""
    path = Path(str(resources.files("lexnet") / "data" / name / "manifest.tsv"))
    if not path.is_file():
        raise InputError(f"no bundled manifest named {name!r}")
    return path


# -- verdicts -----------------------------------------------------------------

@dataclass(frozen=True)
class SmallWorldConfig:
    c_threshold: float = 10.0
    l_threshold: float = 1.5


@dataclass(frozen=True)
class SmallWorldVerdict:
    C_ratio: float | None
    L_ratio: float
    is_small_world: bool
    flags: tuple = ()

    def to_dict(self):
        d = asdict(self)
        d["flags"] = list(self.flags)
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["C_ratio"], d["L_ratio"], d["is_small_world"], tuple(d.get("flags", ())))


def small_world_verdict(net: MetricsRecord, er: MetricsRecord,
                        config: SmallWorldConfig | None = None) -> SmallWorldVerdict:
    config = config or SmallWorldConfig()
    if net.L is None or er.L is None:
        raise UndefinedMeasure("average path length undefined for the network or its ER graph")
    flags = []
    if er.C > 0:
        c_ratio = net.C / er.C
    else:
        c_ratio = None
        flags.append("C_er_zero")
    l_ratio = net.L / er.L
    ok = c_ratio is not None and c_ratio >= config.c_threshold and l_ratio <= config.l_threshold
    return SmallWorldVerdict(c_ratio, l_ratio, ok, tuple(flags))


# -- per-book analysis ----------------------------------------------------------

@dataclass(frozen=True)
class ReportRow:
    book: str
    language: str
    directedness: str
    network: MetricsRecord
    er: MetricsRecord
    verdict: SmallWorldVerdict | None
    er_seed: int

    def to_dict(self):
        return {
            "network": self.network.to_dict(),
            "er": self.er.to_dict(),
            "verdict": None if self.verdict is None else self.verdict.to_dict(),
            "er_seed": self.er_seed,
        }


@dataclass(frozen=True)
class WordCounts:
    book: str
    language: str
    with_stopwords: int
    without_stopwords: int


@dataclass(frozen=True)
class BookAnalysis:
    directed: ReportRow
    undirected: ReportRow
    word_counts: WordCounts


def derive_seed(seed: int, *key) -> int:
    """Stable 64-bit seed for one network from the run seed and a text key."""
    words = [seed & 0xFFFFFFFF, seed >> 32] + [zlib.crc32(str(k).encode("utf-8")) for k in key]
    return int(np.random.SeedSequence(words).generate_state(1, np.uint64)[0])


def _row(entry, graph, seed, er_samples, config):
    net = compute_metrics(graph)
    er_seed = derive_seed(seed, entry.book_id, entry.language, graph.directedness)
    er = er_reference_metrics(ERSpec.matching(graph, er_seed, er_samples))
    try:
        verdict = small_world_verdict(net, er, config)
    except UndefinedMeasure:
        verdict = None
    return ReportRow(entry.book_id, entry.language, graph.directedness, net, er, verdict, er_seed)


def analyze_book(entry: BookEntry, seed: int = 42, er_samples: int = 1,
                 config: SmallWorldConfig | None = None) -> BookAnalysis:
    try:
        doc = RawDocument.from_file(entry.text_path, entry.label, entry.language)
        stream = preprocess(
            doc,
            StopwordList.load(entry.stopwords_path, entry.language),
            LemmaMap.load(entry.lemma_map_path, entry.language),
        )
    except OSError as exc:
        raise InputError(f"{entry.label}: {exc}") from exc
    except LexnetError as exc:
        raise type(exc)(f"{entry.label}: {exc}") from exc
    if not stream.lemmas:
        raise EmptyDocument(f"{entry.label}: no words left after preprocessing {entry.text_path}")
    directed = build_cooccurrence([stream], BuildOptions())
    undirected = directed.to_undirected()
    return BookAnalysis(
        _row(entry, directed, seed, er_samples, config),
        _row(entry, undirected, seed, er_samples, config),
        WordCounts(entry.book_id, entry.language,
                   stream.count_with_stopwords, stream.count_without_stopwords),
    )


# -- report --------------------------------------------------------------------------

@dataclass
class ComparisonReport:
    rows: list
    word_counts: list
    seed: int = 42
    er_samples: int = 1
    config: SmallWorldConfig = field(default_factory=SmallWorldConfig)

    def rows_for(self, directedness: str) -> list:
        return [r for r in self.rows if r.directedness == directedness]

    @property
    def languages(self) -> list:
        return sorted({r.language for r in self.rows})

    def to_dict(self) -> dict:
        langs: dict = {}
        for wc in self.word_counts:
            book = langs.setdefault(wc.language, {}).setdefault(wc.book, {})
            book["word_counts"] = {"with_stopwords": wc.with_stopwords,
                                   "without_stopwords": wc.without_stopwords}
        for row in self.rows:
            langs.setdefault(row.language, {}).setdefault(row.book, {})[row.directedness] = row.to_dict()
        return {
            "seed": self.seed,
            "er_samples": self.er_samples,
            "config": asdict(self.config),
            "languages": langs,
            "cross_language": cross_language_table(self).to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ComparisonReport":
        rows, counts = [], []
        try:
            for language, books in data["languages"].items():
                for book, views in books.items():
                    if "word_counts" in views:
                        wc = views["word_counts"]
                        counts.append(WordCounts(book, language, wc["with_stopwords"],
                                                 wc["without_stopwords"]))
                    for d in DIRECTEDNESS:
                        if d not in views:
                            continue
                        v = views[d]
                        rows.append(ReportRow(
                            book, language, d,
                            MetricsRecord.from_dict(v["network"]),
                            MetricsRecord.from_dict(v["er"]),
                            None if v["verdict"] is None else SmallWorldVerdict.from_dict(v["verdict"]),
                            v["er_seed"],
                        ))
            return cls(rows, counts, data["seed"], data["er_samples"],
                       SmallWorldConfig(**data["config"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"not a comparison report: missing {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    @classmethod
    def load(cls, path) -> "ComparisonReport":
        try:
            return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc


def analyze(manifest: CorpusManifest, seed: int = 42, er_samples: int = 1,
            config: SmallWorldConfig | None = None, workers: int = 1) -> ComparisonReport:
    """Analyze every book; the result does not depend on ``workers``."""
    config = config or SmallWorldConfig()
    books = sorted(manifest.books, key=lambda b: (b.language, b.book_id))

    def run(entry):
        return analyze_book(entry, seed, er_samples, config)

    if workers > 1 and len(books) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, books))
    else:
        results = [run(b) for b in books]
    rows = [row for res in results for row in (res.directed, res.undirected)]
    return ComparisonReport(rows, [res.word_counts for res in results], seed, er_samples, config)


# -- cross-language series ------------------------------------------------------

@dataclass(frozen=True)
class CrossLanguageTable:
    series: dict   # (language, directedness) -> list of (book, k_avg, C, L, D)
    means: dict    # (language, directedness) -> (books, k_avg, C, L, D)

    def l_ordering(self, directedness: str) -> list:
        """Languages by mean L, highest first (languages without a defined L last)."""
        def key(lang):
            mean_l = self.means[(lang, directedness)][3]
            return (mean_l is None, -(mean_l or 0.0), lang)

        return sorted((lang for (lang, d) in self.means if d == directedness), key=key)

    def to_dict(self):
        return {
            "series": [
                {"language": lang, "directedness": d,
                 "points": [dict(zip(SERIES_COLUMNS[2:], p)) for p in pts]}
                for (lang, d), pts in self.series.items()
            ],
            "means": [
                {"language": lang, "directedness": d, **dict(zip(MEANS_COLUMNS[2:], m))}
                for (lang, d), m in self.means.items()
            ],
            "L_ordering": {d: self.l_ordering(d) for d in DIRECTEDNESS},
        }


def _mean(values):
    values = [v for v in values if v is not None]
    return math.fsum(values) / len(values) if values else None


def cross_language_table(report: ComparisonReport) -> CrossLanguageTable:
    """Per-language, per-directedness series of book points and unweighted means."""
    series, means = {}, {}
    for lang in report.languages:
        for d in DIRECTEDNESS:
            rows = sorted((r for r in report.rows if r.language == lang and r.directedness == d),
                          key=lambda r: r.book)
            if not rows:
                continue
            pts = [(r.book, r.network.k_avg, r.network.C, r.network.L, r.network.D) for r in rows]
            series[(lang, d)] = pts
            means[(lang, d)] = (len(pts),) + tuple(_mean([p[i] for p in pts]) for i in range(1, 5))
    return CrossLanguageTable(series, means)


# -- emitters ---------------------------------------------------------------------

def fmt(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".10g")
    return str(value)


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])


def emit_report(report: ComparisonReport, out_dir, format: str = "csv") -> list[Path]:
    """Write the report. ``json``: ``report.json``. ``csv``: ``directed.csv``,
    ``undirected.csv`` (table layout), ``word_counts.csv``, ``small_world.csv``,
    ``series.csv`` and ``language_means.csv``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if format == "json":
        path = out / "report.json"
        path.write_text(report.to_json(), encoding="utf-8")
        return [path]
    if format != "csv":
        raise ValueError(f"unknown report format {format!r}")
    written = []
    for d in DIRECTEDNESS:
        path = out / f"{d}.csv"
        _write_csv(path, TABLE_COLUMNS, [
            (r.book, r.language, r.network.N, r.network.k_avg, r.network.C, r.network.L,
             r.network.D, r.er.C, r.er.L, r.er.D)
            for r in report.rows_for(d)
        ])
        written.append(path)
    path = out / "word_counts.csv"
    _write_csv(path, WORD_COUNT_COLUMNS, [
        (w.book, w.language, w.with_stopwords, w.without_stopwords) for w in report.word_counts
    ])
    written.append(path)
    path = out / "small_world.csv"
    _write_csv(path, VERDICT_COLUMNS, [
        (r.book, r.language, r.directedness, r.network.K, r.er.K,
         r.verdict.C_ratio if r.verdict else None, r.verdict.L_ratio if r.verdict else None,
         r.verdict.is_small_world if r.verdict else False,
         ";".join(r.verdict.flags) if r.verdict else "undefined_L",
         r.network.reachable_pairs, r.network.component_count,
         r.network.largest_component_size, r.er_seed)
        for r in report.rows
    ])
    written.append(path)
    table = cross_language_table(report)
    path = out / "series.csv"
    _write_csv(path, SERIES_COLUMNS,
               [(lang, d) + p for (lang, d), pts in table.series.items() for p in pts])
    written.append(path)
    path = out / "language_means.csv"
    _write_csv(path, MEANS_COLUMNS, [(lang, d) + m for (lang, d), m in table.means.items()])
    written.append(path)
    return written
