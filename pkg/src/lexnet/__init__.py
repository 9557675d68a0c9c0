"""Word co-occurrence networks from books and their small-world comparison
against matched Erdős–Rényi graphs."""

__version__ = "0.1.0"

from .builder import BuildOptions, build_cooccurrence
from .er import ERSpec, er_reference_metrics, generate_er
from .errors import (
    DuplicateLabel,
    EmptyDocument,
    EmptyGraph,
    FormatError,
    InputError,
    InvariantViolation,
    LanguageMismatch,
    LexnetError,
    NodeOutOfRange,
    NoPaths,
    TooManyLinks,
    UndefinedMeasure,
)
from .experiment import (
    ComparisonReport,
    CorpusManifest,
    SmallWorldConfig,
    analyze,
    analyze_book,
    bundled_manifest,
    cross_language_table,
    emit_report,
    small_world_verdict,
)
from .graph import LexNetwork, to_undirected
from .metrics import (
    MetricsRecord,
    all_pairs_distances,
    avg_clustering,
    avg_degree,
    avg_path_length,
    compute_metrics,
    degree,
    diameter,
    local_clustering,
)
from .text import LemmaMap, RawDocument, StopwordList, TokenStream, lemmatize, preprocess, remove_stopwords, tokenize
