"""phrasekit: keyphrase extraction and evaluation toolkit.

Subpackages and modules:

- ``stemming``: Porter, Lovins, and Iterated Lovins stemmers.
- ``tagging``: tokenizer and heuristic part-of-speech tagger.
- ``extraction``: noun-phrase candidate generation and keyphrase extractors.
- ``evaluation``: stem-sequence matching and precision/recall/F scoring.
- ``training``: exhaustive tuning of extractor output counts.
- ``corpus``: labelled-corpus loading, splitting, and statistics.
- ``cli``: the ``phrasekit`` command-line interface.
"""

__version__ = "0.1.0"
