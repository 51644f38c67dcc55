"""Tuning the noun-phrase frequency extractor on labelled documents.

The output counts (n1, n2, n3) are tuned by exhaustive search over a
small integer grid, maximizing the micro-averaged F-measure on the
training documents.  Candidate generation per document happens once;
each grid point only moves the top-k cutoffs, so the search walks
precomputed match prefix sums.  Ties prefer smaller output lists:
smallest n1+n2+n3, then smallest n3, then smallest n2.

At inference time a size-gated pair of models routes short documents
(byte length below the threshold) to one model and long documents to
the other, mirroring training corpora of short and long documents.
"""

import json
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from .corpus import LabeledDocument, strip_keyphrase_block
from .evaluation import ConfusionCounts, score_counts
from .extraction import NpfModel, PhraseCandidate, generate_candidates, rank_candidates
from .stemming import stem_phrase
from .tagging import Tagger, tag_document

DEFAULT_SIZE_THRESHOLD = 20_000


class ModelError(Exception):
    """Unusable model file or parameters."""


@dataclass(frozen=True)
class SizeGatedModel:
    short_model: NpfModel
    long_model: NpfModel
    threshold_bytes: int = DEFAULT_SIZE_THRESHOLD

    def __post_init__(self) -> None:
        if self.threshold_bytes <= 0:
            raise ValueError("threshold_bytes must be positive")


@dataclass(frozen=True)
class SearchSpace:
    """Inclusive (low, high) ranges for each output count."""

    n1: tuple[int, int] = (0, 15)
    n2: tuple[int, int] = (0, 15)
    n3: tuple[int, int] = (0, 5)

    def __post_init__(self) -> None:
        for name in ("n1", "n2", "n3"):
            low, high = getattr(self, name)
            if low < 0 or high < low:
                raise ValueError(f"bad {name} range ({low}, {high})")

    def points(self):
        return product(
            range(self.n1[0], self.n1[1] + 1),
            range(self.n2[0], self.n2[1] + 1),
            range(self.n3[0], self.n3[1] + 1),
        )


def select_model(doc_bytes: int, gated: SizeGatedModel) -> NpfModel:
    """Route by size: below the threshold is short, at or above is long."""
    if doc_bytes < gated.threshold_bytes:
        return gated.short_model
    return gated.long_model


@dataclass(frozen=True)
class PreparedDocument:
    """A document run through the extraction pipeline once, ready for scoring."""

    doc_id: str
    byte_size: int
    ranked: dict[int, list[PhraseCandidate]]
    target_stems: frozenset[tuple[str, ...]]
    target_count: int


def prepare_document(doc: LabeledDocument, tagger: Tagger | None = None) -> PreparedDocument:
    """Strip, tag, and rank one document's candidates for repeated scoring."""
    body = strip_keyphrase_block(doc.text)
    ranked = rank_candidates(generate_candidates(tag_document(body, tagger)))
    return PreparedDocument(
        doc_id=doc.id,
        byte_size=len(body.encode("utf-8")),
        ranked=ranked,
        target_stems=frozenset(stem_phrase(t) for t in doc.targets),
        target_count=len(doc.targets),
    )


def extract_prepared(prepared: PreparedDocument, model: NpfModel) -> list[str]:
    """The extractor's output for a prepared document, cheap to re-evaluate."""
    phrases: list[str] = []
    for length_class in (1, 2, 3):
        slots = model.slot(length_class)
        phrases.extend(
            candidate.best_surface()
            for candidate in prepared.ranked[length_class][:slots]
        )
    return phrases


def counts_for_model(prepared: PreparedDocument, model: NpfModel) -> ConfusionCounts:
    """Confusion counts of the extractor's output against the targets."""
    a = 0
    selected = 0
    for length_class in (1, 2, 3):
        top = prepared.ranked[length_class][: model.slot(length_class)]
        selected += len(top)
        a += sum(1 for candidate in top if candidate.stems in prepared.target_stems)
    return ConfusionCounts(a=a, b=selected - a, c=prepared.target_count - a)


def _match_prefixes(prepared: PreparedDocument, limit: int, length_class: int) -> list[int]:
    """prefix[i] = targets matched among the first i ranked candidates."""
    prefix = [0]
    for candidate in prepared.ranked[length_class][:limit]:
        prefix.append(prefix[-1] + (candidate.stems in prepared.target_stems))
    return prefix


def grid_search_npf(
    train: Sequence[LabeledDocument],
    space: SearchSpace = SearchSpace(),
    tagger: Tagger | None = None,
) -> tuple[NpfModel, float]:
    """Exhaustively tune (n1, n2, n3) to maximize micro F on the training set.

    Returns the winning model and its training micro F-measure.
    """
    prepared = [prepare_document(doc, tagger) for doc in train]
    return grid_search_prepared(prepared, space)


def grid_search_prepared(
    prepared: Sequence[PreparedDocument], space: SearchSpace = SearchSpace()
) -> tuple[NpfModel, float]:
    """Grid search over documents already run through prepare_document."""
    if not prepared:
        raise ModelError("cannot tune on an empty training set")

    max_n1, max_n2, max_n3 = space.n1[1], space.n2[1], space.n3[1]
    per_doc = []
    total_targets = 0
    for doc in prepared:
        per_doc.append(
            (
                _match_prefixes(doc, max_n1, 1),
                _match_prefixes(doc, max_n2, 2),
                _match_prefixes(doc, max_n3, 3),
            )
        )
        total_targets += doc.target_count

    best: tuple[float, int, int, int, int] | None = None  # (-f, sum, n3, n2, n1)
    for n1, n2, n3 in space.points():
        matches = 0
        selected = 0
        for prefixes in per_doc:
            p1, p2, p3 = prefixes
            matches += (
                p1[min(n1, len(p1) - 1)]
                + p2[min(n2, len(p2) - 1)]
                + p3[min(n3, len(p3) - 1)]
            )
            selected += (
                min(n1, len(p1) - 1) + min(n2, len(p2) - 1) + min(n3, len(p3) - 1)
            )
        denominator = 2 * matches + (selected - matches) + (total_targets - matches)
        f_measure = 2 * matches / denominator if denominator else 0.0
        key = (-f_measure, n1 + n2 + n3, n3, n2, n1)
        if best is None or key < best:
            best = key
    assert best is not None
    neg_f, _total, n3, n2, n1 = best
    return NpfModel(n1=n1, n2=n2, n3=n3), -neg_f


# --- Model files ---------------------------------------------------------
#
# A model file is JSON: either a single triple {"n1":..,"n2":..,"n3":..}
# or a size-gated pair {"short": {...}, "long": {...}, "threshold_bytes": N}.


def _model_from_obj(obj: object, path: Path) -> NpfModel:
    if not isinstance(obj, dict):
        raise ModelError(f"{path}: expected an object with n1/n2/n3")
    try:
        return NpfModel(n1=obj["n1"], n2=obj["n2"], n3=obj["n3"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"{path}: bad model parameters: {exc}") from exc


def load_model(path: str | Path) -> SizeGatedModel:
    """Read a model file; a single-model file gates to itself."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ModelError(f"cannot read model file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path} is not valid JSON: {exc}") from exc
    if isinstance(obj, dict) and "short" in obj:
        try:
            threshold = obj.get("threshold_bytes", DEFAULT_SIZE_THRESHOLD)
            return SizeGatedModel(
                short_model=_model_from_obj(obj["short"], path),
                long_model=_model_from_obj(obj["long"], path),
                threshold_bytes=threshold,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelError(f"{path}: bad size-gated model: {exc}") from exc
    model = _model_from_obj(obj, path)
    return SizeGatedModel(short_model=model, long_model=model)


def save_model(model: NpfModel | SizeGatedModel, path: str | Path) -> None:
    """Write a model file in the JSON schema that load_model reads."""
    if isinstance(model, SizeGatedModel):
        obj: dict = {
            "short": {"n1": model.short_model.n1, "n2": model.short_model.n2,
                      "n3": model.short_model.n3},
            "long": {"n1": model.long_model.n1, "n2": model.long_model.n2,
                     "n3": model.long_model.n3},
            "threshold_bytes": model.threshold_bytes,
        }
    else:
        obj = {"n1": model.n1, "n2": model.n2, "n3": model.n3}
    Path(path).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")


def evaluate_gated(
    documents: Sequence[LabeledDocument],
    gated: SizeGatedModel,
    tagger: Tagger | None = None,
):
    """Score extraction over documents, routing each by its byte size.

    Returns (CorpusScore, list of (doc_id, phrases)).
    """
    counts = []
    outputs = []
    for doc in documents:
        prepared = prepare_document(doc, tagger)
        model = select_model(prepared.byte_size, gated)
        outputs.append((doc.id, extract_prepared(prepared, model)))
        counts.append(counts_for_model(prepared, model))
    return score_counts(counts), outputs
