"""Command-line interface.

Commands: stem, tag, extract, train, evaluate, split, stats.  All text
I/O is UTF-8 with newline line endings.  Exit status 0 on success, 1 for
usage errors, 2 for data errors (unreadable corpus, model, or input
files).
"""

import argparse
import json
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import training
from .corpus import CorpusError, corpus_stats, load_corpus, strip_keyphrase_block
from .evaluation import CorpusScore, match_count, score_counts
from .extraction import extract_top5_words
from .stemming import StemmerKind, stem_word
from .tagging import tag_document

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _fmt(value: float) -> str:
    return f"{value:.3f}"


# --- commands ------------------------------------------------------------


def _cmd_stem(args) -> int:
    kind = StemmerKind(args.algorithm)
    for word in args.words:
        print(f"{word}\t{stem_word(word, kind)}")
    return 0


def _cmd_tag(args) -> int:
    text = _read_text(args.file)
    tagged = tag_document(text)
    sentences: dict[int, list[str]] = {}
    for token in tagged:
        sentences.setdefault(token.sentence_id, []).append(
            f"{token.surface}/{token.tag.value}"
        )
    for sentence_id in sorted(sentences):
        print(" ".join(sentences[sentence_id]))
    return 0


def _cmd_extract(args) -> int:
    text = strip_keyphrase_block(_read_text(args.file))
    if args.algorithm == "top5":
        phrases = extract_top5_words(text)
    else:
        if args.model is None:
            raise _UsageError("--model is required with --algorithm npf")
        gated = training.load_model(args.model)
        model = training.select_model(len(text.encode("utf-8")), gated)
        doc = corpus_mod.LabeledDocument(id=args.file, text=text, targets=())
        prepared = training.prepare_document(doc)
        phrases = training.extract_prepared(prepared, model)
    for phrase in phrases:
        print(phrase)
    return 0


def _cmd_train(args) -> int:
    documents = load_corpus(args.corpus)
    if not documents:
        raise CorpusError(f"no documents in {args.corpus}")
    space = training.SearchSpace(
        n1=(args.n1_min, args.n1_max),
        n2=(args.n2_min, args.n2_max),
        n3=(args.n3_min, args.n3_max),
    )

    if args.split_bytes is None:
        model, best_f = training.grid_search_npf(documents, space)
        training.save_model(model, args.out)
        print(f"model\tn1={model.n1} n2={model.n2} n3={model.n3}")
        print(f"training_f\t{_fmt(best_f)}")
    else:
        threshold = args.split_bytes
        prepared = [training.prepare_document(doc) for doc in documents]
        short = [p for p in prepared if p.byte_size < threshold]
        long = [p for p in prepared if p.byte_size >= threshold]
        if not short:
            raise CorpusError(f"no training documents shorter than {threshold} bytes")
        if not long:
            raise CorpusError(f"no training documents of at least {threshold} bytes")
        short_model, short_f = training.grid_search_prepared(short, space)
        long_model, long_f = training.grid_search_prepared(long, space)
        gated = training.SizeGatedModel(short_model, long_model, threshold)
        training.save_model(gated, args.out)
        print(f"short\tn1={short_model.n1} n2={short_model.n2} n3={short_model.n3}"
              f"\tf={_fmt(short_f)}")
        print(f"long\tn1={long_model.n1} n2={long_model.n2} n3={long_model.n3}"
              f"\tf={_fmt(long_f)}")
        combined = [
            training.counts_for_model(p, training.select_model(p.byte_size, gated))
            for p in prepared
        ]
        print(f"training_f\t{_fmt(score_counts(combined).micro.f_measure)}")
    print(f"model written to {args.out}")
    return 0


def _score_documents(args, documents) -> tuple[CorpusScore, list[str]]:
    ids = [doc.id for doc in documents]
    if args.algorithm == "top5":
        counts = [
            match_count(
                extract_top5_words(strip_keyphrase_block(doc.text)), doc.targets
            )
            for doc in documents
        ]
        return score_counts(counts), ids
    if args.model is None:
        raise _UsageError("--model is required with --algorithm npf")
    gated = training.load_model(args.model)
    score, _outputs = training.evaluate_gated(documents, gated)
    return score, ids


def _cmd_evaluate(args) -> int:
    documents = load_corpus(args.corpus)
    if not documents:
        raise CorpusError(f"no documents in {args.corpus}")
    score, ids = _score_documents(args, documents)

    if args.format == "json":
        payload = {
            "documents": [
                {
                    "id": doc_id,
                    "a": s.counts.a,
                    "b": s.counts.b,
                    "c": s.counts.c,
                    "precision": round(s.metrics.precision, 3),
                    "recall": round(s.metrics.recall, 3),
                    "f_measure": round(s.metrics.f_measure, 3),
                }
                for doc_id, s in zip(ids, score.per_document)
            ],
            "micro": {
                "a": score.pooled.a,
                "b": score.pooled.b,
                "c": score.pooled.c,
                "precision": round(score.micro.precision, 3),
                "recall": round(score.micro.recall, 3),
                "f_measure": round(score.micro.f_measure, 3),
            },
            "macro": {
                "precision": round(score.macro.precision, 3),
                "recall": round(score.macro.recall, 3),
                "f_measure": round(score.macro.f_measure, 3),
            },
        }
        print(json.dumps(payload, indent=2))
        return 0

    print("doc\ta\tb\tc\tprecision\trecall\tf_measure")
    for doc_id, s in zip(ids, score.per_document):
        print(
            f"{doc_id}\t{s.counts.a}\t{s.counts.b}\t{s.counts.c}"
            f"\t{_fmt(s.metrics.precision)}\t{_fmt(s.metrics.recall)}"
            f"\t{_fmt(s.metrics.f_measure)}"
        )
    print(
        f"micro\t{score.pooled.a}\t{score.pooled.b}\t{score.pooled.c}"
        f"\t{_fmt(score.micro.precision)}\t{_fmt(score.micro.recall)}"
        f"\t{_fmt(score.micro.f_measure)}"
    )
    print(
        f"macro\t-\t-\t-\t{_fmt(score.macro.precision)}"
        f"\t{_fmt(score.macro.recall)}\t{_fmt(score.macro.f_measure)}"
    )
    return 0


def _cmd_split(args) -> int:
    documents = load_corpus(args.corpus)
    if args.leave_group_out is not None:
        train, test = corpus_mod.split_leave_group_out(documents, args.leave_group_out)
    else:
        train, test = corpus_mod.split_corpus(
            documents, args.train_fraction, args.seed
        )
    assignment = {doc.id: "train" for doc in train}
    assignment.update({doc.id: "test" for doc in test})
    for doc_id in sorted(assignment):
        print(f"{doc_id}\t{assignment[doc_id]}")
    return 0


def _cmd_stats(args) -> int:
    stats = corpus_stats(load_corpus(args.corpus))
    histogram = {str(k): round(v, 3) for k, v in stats.words_per_keyphrase.items()}
    if args.format == "json":
        payload = {
            "doc_count": stats.doc_count,
            "words_per_keyphrase": histogram,
            "keyphrases_per_doc": {
                "mean": round(stats.keyphrases_per_doc_mean, 3),
                "std": round(stats.keyphrases_per_doc_std, 3),
            },
            "words_per_keyphrase_avg": {
                "mean": round(stats.words_per_keyphrase_mean, 3),
                "std": round(stats.words_per_keyphrase_std, 3),
            },
            "words_per_doc": {
                "mean": round(stats.words_per_doc_mean, 3),
                "std": round(stats.words_per_doc_std, 3),
            },
            "pct_keyphrases_in_text": round(stats.pct_keyphrases_in_text, 3),
            "est_unique_phrases": stats.est_unique_phrases,
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"doc_count\t{stats.doc_count}")
    for length, fraction in stats.words_per_keyphrase.items():
        print(f"words_per_keyphrase_{length}\t{fraction:.3f}")
    print(f"keyphrases_per_doc\t{stats.keyphrases_per_doc_mean:.3f}"
          f"\t±{stats.keyphrases_per_doc_std:.3f}")
    print(f"words_per_keyphrase\t{stats.words_per_keyphrase_mean:.3f}"
          f"\t±{stats.words_per_keyphrase_std:.3f}")
    print(f"words_per_doc\t{stats.words_per_doc_mean:.3f}"
          f"\t±{stats.words_per_doc_std:.3f}")
    print(f"pct_keyphrases_in_text\t{stats.pct_keyphrases_in_text:.3f}")
    print(f"est_unique_phrases\t{stats.est_unique_phrases}")
    return 0


# --- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="phrasekit", description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("stem", help="stem words")
    p.add_argument("--algorithm", required=True,
                   choices=[kind.value for kind in StemmerKind])
    p.add_argument("words", nargs="+")
    p.set_defaults(func=_cmd_stem)

    p = subparsers.add_parser("tag", help="tokenize and tag a document")
    p.add_argument("file", help="input file, or - for stdin")
    p.set_defaults(func=_cmd_tag)

    p = subparsers.add_parser("extract", help="extract keyphrases from a document")
    p.add_argument("--algorithm", choices=["npf", "top5"], default="npf")
    p.add_argument("--model", help="model file written by train")
    p.add_argument("file", help="input file, or - for stdin")
    p.set_defaults(func=_cmd_extract)

    p = subparsers.add_parser("train", help="tune extractor output counts on a corpus")
    p.add_argument("corpus", help="corpus directory of .txt/.key pairs")
    p.add_argument("--out", required=True, help="model file to write")
    p.add_argument("--n1-min", type=int, default=0)
    p.add_argument("--n1-max", type=int, default=15)
    p.add_argument("--n2-min", type=int, default=0)
    p.add_argument("--n2-max", type=int, default=15)
    p.add_argument("--n3-min", type=int, default=0)
    p.add_argument("--n3-max", type=int, default=5)
    p.add_argument("--split-bytes", type=int, default=None, metavar="BYTES",
                   help="train separate short/long models split at this size")
    p.set_defaults(func=_cmd_train)

    p = subparsers.add_parser("evaluate", help="score extraction against targets")
    p.add_argument("corpus", help="corpus directory of .txt/.key pairs")
    p.add_argument("--algorithm", choices=["npf", "top5"], default="npf")
    p.add_argument("--model", help="model file written by train")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=_cmd_evaluate)

    p = subparsers.add_parser("split", help="deterministic train/test split")
    p.add_argument("corpus", help="corpus directory of .txt/.key pairs")
    p.add_argument("--train-fraction", type=float, default=0.75)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--leave-group-out", metavar="GROUP", default=None,
                   help="hold this whole group out as the test set")
    p.set_defaults(func=_cmd_split)

    p = subparsers.add_parser("stats", help="corpus statistics")
    p.add_argument("corpus", help="corpus directory of .txt/.key pairs")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (CorpusError, training.ModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
