import pytest

from phrasekit.corpus import (
    CorpusError,
    LabeledDocument,
    corpus_stats,
    load_corpus,
    split_corpus,
    split_leave_group_out,
    strip_keyphrase_block,
)
from phrasekit.extraction import NpfModel, extract_npf
from phrasekit.tagging import tag_document


def write_pair(directory, doc_id, text, phrases, group=None):
    (directory / f"{doc_id}.txt").write_text(text, encoding="utf-8")
    (directory / f"{doc_id}.key").write_text("\n".join(phrases) + "\n", encoding="utf-8")
    if group is not None:
        path = directory / "groups.tsv"
        with path.open("a", encoding="utf-8") as fh:
            fh.write(f"{doc_id}\t{group}\n")


class TestLoadCorpus:
    def test_fixture_corpus(self, fixture_corpus_dir):
        docs = load_corpus(fixture_corpus_dir)
        assert [d.id for d in docs] == ["alpha", "bravo", "charlie"]
        assert [d.group for d in docs] == ["ai", "econ", "mind"]
        assert docs[0].targets == ("neural network", "training data", "evolution")

    def test_two_pairs(self, tmp_path):
        write_pair(tmp_path, "doc1", "words here", ["words"])
        write_pair(tmp_path, "doc2", "more words", ["words two"])
        assert len(load_corpus(tmp_path)) == 2

    def test_empty_directory_ok(self, tmp_path):
        assert load_corpus(tmp_path) == []

    def test_missing_directory_rejected(self, tmp_path):
        with pytest.raises(CorpusError, match="not a corpus directory"):
            load_corpus(tmp_path / "nowhere")

    def test_orphan_txt_named(self, tmp_path):
        (tmp_path / "doc9.txt").write_text("text", encoding="utf-8")
        with pytest.raises(CorpusError, match="doc9.txt"):
            load_corpus(tmp_path)

    def test_orphan_key_named(self, tmp_path):
        (tmp_path / "doc9.key").write_text("phrase", encoding="utf-8")
        with pytest.raises(CorpusError, match="doc9.key"):
            load_corpus(tmp_path)

    def test_duplicate_stem_targets_rejected(self, tmp_path):
        write_pair(tmp_path, "dup", "text", ["neural network", "neural networks"])
        with pytest.raises(CorpusError, match="dup.key"):
            load_corpus(tmp_path)

    def test_blank_lines_ignored_and_whitespace_collapsed(self, tmp_path):
        (tmp_path / "a.txt").write_text("text", encoding="utf-8")
        (tmp_path / "a.key").write_text("\n  neural   network  \n\nplans\n", encoding="utf-8")
        docs = load_corpus(tmp_path)
        assert docs[0].targets == ("neural network", "plans")

    def test_unknown_group_id_rejected(self, tmp_path):
        write_pair(tmp_path, "a", "text", ["plans"])
        (tmp_path / "groups.tsv").write_text("ghost\tg1\n", encoding="utf-8")
        with pytest.raises(CorpusError, match="ghost"):
            load_corpus(tmp_path)

    def test_groups_optional(self, tmp_path):
        write_pair(tmp_path, "a", "text", ["plans"])
        assert load_corpus(tmp_path)[0].group is None


class TestStripKeyphraseBlock:
    def test_keywords_line_removed(self):
        assert strip_keyphrase_block("Title\nKeywords: a, b\nBody") == "Title\nBody"

    def test_no_keyword_line_unchanged(self):
        text = "Title\n\nBody text.\n"
        assert strip_keyphrase_block(text) == text

    def test_lone_keyphrases_line(self):
        assert strip_keyphrase_block("KEYPHRASES: x") == ""

    def test_indented_and_case_insensitive(self):
        assert strip_keyphrase_block("  keyWORDS: a\nrest") == "rest"

    def test_mid_line_mention_kept(self):
        text = "the keywords: here are not a block header\n"
        assert strip_keyphrase_block(text) != "" and "keywords" in strip_keyphrase_block(text)


def make_corpus(count, group=None):
    return [
        LabeledDocument(id=f"d{i:03d}", text="plans", targets=("plans",), group=group)
        for i in range(count)
    ]


class TestSplitCorpus:
    def test_three_quarters_of_hundred(self):
        train, test = split_corpus(make_corpus(100), 0.75, seed=5)
        assert len(train) == 75 and len(test) == 25

    def test_deterministic_for_seed(self):
        corpus = make_corpus(40)
        first = split_corpus(corpus, 0.75, seed=9)
        second = split_corpus(corpus, 0.75, seed=9)
        assert [d.id for d in first[0]] == [d.id for d in second[0]]
        different = split_corpus(corpus, 0.75, seed=10)
        assert [d.id for d in first[0]] != [d.id for d in different[0]]

    def test_partition(self):
        corpus = make_corpus(31)
        train, test = split_corpus(corpus, 0.6, seed=2)
        assert sorted(d.id for d in train + test) == sorted(d.id for d in corpus)
        assert not {d.id for d in train} & {d.id for d in test}

    def test_stratified_group_counts(self):
        sizes = {"e1": 47, "e2": 41, "e3": 42, "e4": 96, "e5": 41, "e6": 44}
        corpus = []
        for group, size in sizes.items():
            corpus.extend(
                LabeledDocument(f"{group}_{i:03d}", "plans", ("plans",), group)
                for i in range(size)
            )
        train, test = split_corpus(corpus, 0.75, seed=1)
        per_group_train = {
            group: sum(1 for d in train if d.group == group) for group in sizes
        }
        # round-to-nearest per group: 35.25->35, 30.75->31, 31.5->32, 72, 31, 33
        assert per_group_train == {
            "e1": 35, "e2": 31, "e3": 32, "e4": 72, "e5": 31, "e6": 33,
        }
        assert len(train) == 234 and len(test) == 77

    def test_group_of_two_keeps_one_test_doc(self):
        corpus = make_corpus(2, group="pair")
        train, test = split_corpus(corpus, 0.9, seed=3)
        assert len(train) == 1 and len(test) == 1

    def test_singleton_group_goes_to_train(self):
        corpus = make_corpus(1, group="solo")
        train, test = split_corpus(corpus, 0.75, seed=3)
        assert len(train) == 1 and len(test) == 0

    def test_empty_corpus_rejected(self):
        with pytest.raises(CorpusError):
            split_corpus([], 0.75, seed=1)

    def test_bad_fraction_rejected(self):
        with pytest.raises(ValueError):
            split_corpus(make_corpus(4), 1.0, seed=1)

    def test_leave_group_out(self, fixture_corpus_dir):
        docs = load_corpus(fixture_corpus_dir)
        train, test = split_leave_group_out(docs, "econ")
        assert [d.id for d in test] == ["bravo"]
        assert [d.id for d in train] == ["alpha", "charlie"]

    def test_leave_group_out_unknown_group(self, fixture_corpus_dir):
        docs = load_corpus(fixture_corpus_dir)
        with pytest.raises(CorpusError, match="nope"):
            split_leave_group_out(docs, "nope")


class TestCorpusStats:
    def test_stemmed_containment(self):
        doc = LabeledDocument(
            id="d",
            text="We study neural networks daily.",
            targets=("neural network", "evolution"),
        )
        stats = corpus_stats([doc])
        assert stats.pct_keyphrases_in_text == pytest.approx(0.5)

    def test_verbatim_targets_all_found(self):
        doc = LabeledDocument(
            id="d",
            text="Stock markets rise. Market forces remain.",
            targets=("stock markets", "market forces"),
        )
        assert corpus_stats([doc]).pct_keyphrases_in_text == 1.0

    def test_containment_does_not_cross_sentences(self):
        doc = LabeledDocument(
            id="d",
            text="They saw the stock. Markets fell.",
            targets=("stock markets",),
        )
        assert corpus_stats([doc]).pct_keyphrases_in_text == 0.0

    def test_unique_phrase_estimate(self):
        text = " ".join(["word"] * 87_000)
        stats = corpus_stats([LabeledDocument("big", text, ("word",))])
        assert stats.est_unique_phrases == 21_750

    def test_keyphrase_block_excluded_from_containment(self):
        doc = LabeledDocument(
            id="d",
            text="Keywords: secret phrase\nNothing else here.",
            targets=("secret phrase",),
        )
        assert corpus_stats([doc]).pct_keyphrases_in_text == 0.0

    def test_histogram_fractions(self, fixture_corpus_dir):
        stats = corpus_stats(load_corpus(fixture_corpus_dir))
        assert stats.doc_count == 3
        assert sum(stats.words_per_keyphrase.values()) == pytest.approx(1.0)
        assert stats.words_per_keyphrase[1] == pytest.approx(5 / 11)
        assert stats.words_per_keyphrase[2] == pytest.approx(5 / 11)
        assert stats.words_per_keyphrase[3] == pytest.approx(1 / 11)
        assert stats.pct_keyphrases_in_text == pytest.approx(8 / 11)

    def test_mean_and_std(self):
        docs = [
            LabeledDocument("a", "one two three four", ("one", "two three")),
            LabeledDocument("b", "one two", ("one",)),
        ]
        stats = corpus_stats(docs)
        assert stats.doc_count == 2
        assert stats.keyphrases_per_doc_mean == pytest.approx(1.5)
        assert stats.keyphrases_per_doc_std == pytest.approx(0.5)
        assert stats.words_per_doc_mean == pytest.approx(3.0)
        assert stats.words_per_keyphrase_mean == pytest.approx(4 / 3)

    def test_empty_corpus_zeroed(self):
        stats = corpus_stats([])
        assert stats.doc_count == 0
        assert stats.words_per_keyphrase == {}
        assert stats.pct_keyphrases_in_text == 0.0
        assert stats.est_unique_phrases == 0

    def test_extracted_targets_always_in_text(self, fixture_corpus_dir):
        docs = load_corpus(fixture_corpus_dir)
        relabeled = []
        for doc in docs:
            body = strip_keyphrase_block(doc.text)
            phrases = extract_npf(tag_document(body), NpfModel(2, 1, 1))
            assert phrases
            relabeled.append(LabeledDocument(doc.id, body, tuple(phrases)))
        assert corpus_stats(relabeled).pct_keyphrases_in_text == 1.0
