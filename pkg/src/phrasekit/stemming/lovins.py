"""Lovins suffix-removal stemmer and its iterated (fixpoint) variant.

The algorithm removes at most one ending per pass, choosing the longest
listed ending whose context condition is satisfied and whose removal
leaves a stem of at least two letters, then applies spelling-adjustment
rules (undoubling of final double consonants and terminal respellings).
The rule tables below are transcribed from Lovins (1968).

The iterated variant re-applies the stemmer until the output stops
changing, which can only merge stem classes, never split them.
"""

from collections.abc import Callable

MAX_FIXPOINT_ITERATIONS = 10


class StemIterationError(RuntimeError):
    """No fixpoint within the iteration cap; indicates a rule-table cycle."""


# --- Context conditions -------------------------------------------------
#
# Each ending carries a one- or two-letter condition code.  A condition
# receives the candidate stem (the word minus the ending) and decides
# whether removal is allowed.  The global requirement that a stem keeps
# at least two letters is enforced separately in _remove_ending.

def _a(stem: str) -> bool:
    return True


def _b(stem: str) -> bool:
    return len(stem) >= 3


def _c(stem: str) -> bool:
    return len(stem) >= 4


def _d(stem: str) -> bool:
    return len(stem) >= 5


def _e(stem: str) -> bool:
    return not stem.endswith("e")


def _f(stem: str) -> bool:
    return len(stem) >= 3 and not stem.endswith("e")


def _g(stem: str) -> bool:
    return len(stem) >= 3 and stem.endswith("f")


def _h(stem: str) -> bool:
    return stem.endswith("t") or stem.endswith("ll")


def _i(stem: str) -> bool:
    return not stem.endswith(("o", "e"))


def _j(stem: str) -> bool:
    return not stem.endswith(("a", "e"))


def _k(stem: str) -> bool:
    return len(stem) >= 3 and (
        stem.endswith(("l", "i")) or (stem.endswith("e") and len(stem) >= 3 and stem[-3] == "u")
    )


def _l(stem: str) -> bool:
    if stem.endswith(("u", "x")):
        return False
    if stem.endswith("s") and not stem.endswith("os"):
        return False
    return True


def _m(stem: str) -> bool:
    return not stem.endswith(("a", "c", "e", "m"))


def _n(stem: str) -> bool:
    # Minimum stem length 3; 4 when the stem's third-last letter is s.
    if len(stem) < 3:
        return False
    if stem[-3] == "s":
        return len(stem) >= 4
    return True


def _o(stem: str) -> bool:
    return stem.endswith(("l", "i"))


def _p(stem: str) -> bool:
    return not stem.endswith("c")


def _q(stem: str) -> bool:
    return len(stem) >= 3 and not stem.endswith(("l", "n"))


def _r(stem: str) -> bool:
    return stem.endswith(("n", "r"))


def _s(stem: str) -> bool:
    return stem.endswith("dr") or (stem.endswith("t") and not stem.endswith("tt"))


def _t(stem: str) -> bool:
    return stem.endswith("s") or (stem.endswith("t") and not stem.endswith("ot"))


def _u(stem: str) -> bool:
    return stem.endswith(("l", "m", "n", "r"))


def _v(stem: str) -> bool:
    return stem.endswith("c")


def _w(stem: str) -> bool:
    return not stem.endswith(("s", "u"))


def _x(stem: str) -> bool:
    return stem.endswith(("l", "i")) or (stem.endswith("e") and len(stem) >= 3 and stem[-3] == "u")


def _y(stem: str) -> bool:
    return stem.endswith("in")


def _z(stem: str) -> bool:
    return not stem.endswith("f")


def _aa(stem: str) -> bool:
    return stem.endswith(("d", "f", "ph", "th", "l", "er", "or", "es", "t"))


def _bb(stem: str) -> bool:
    return len(stem) >= 3 and not stem.endswith(("met", "ryst"))


def _cc(stem: str) -> bool:
    return stem.endswith("l")


_CONDITIONS: dict[str, Callable[[str], bool]] = {
    "A": _a, "B": _b, "C": _c, "D": _d, "E": _e, "F": _f, "G": _g,
    "H": _h, "I": _i, "J": _j, "K": _k, "L": _l, "M": _m, "N": _n,
    "O": _o, "P": _p, "Q": _q, "R": _r, "S": _s, "T": _t, "U": _u,
    "V": _v, "W": _w, "X": _x, "Y": _y, "Z": _z, "AA": _aa, "BB": _bb,
    "CC": _cc,
}


# --- Ending list (ending -> condition code), grouped by length ----------

_ENDINGS: dict[str, str] = {
    # length 11
    "alistically": "B", "arizability": "A", "izationally": "B",
    # length 10
    "antialness": "A", "arisations": "A", "arizations": "A", "entialness": "A",
    # length 9
    "allically": "C", "antaneous": "A", "antiality": "A", "arisation": "A",
    "arization": "A", "ationally": "B", "ativeness": "A", "eableness": "E",
    "entations": "A", "entiality": "A", "entialize": "A", "entiation": "A",
    "ionalness": "A", "istically": "A", "itousness": "A", "izability": "A",
    "izational": "A",
    # length 8
    "ableness": "A", "arizable": "A", "entation": "A", "entially": "A",
    "eousness": "A", "ibleness": "A", "icalness": "A", "ionalism": "A",
    "ionality": "A", "ionalize": "A", "iousness": "A", "izations": "A",
    "lessness": "A",
    # length 7
    "ability": "A", "aically": "A", "alistic": "B", "alities": "A",
    "ariness": "E", "aristic": "A", "arizing": "A", "ateness": "A",
    "atingly": "A", "ational": "B", "atively": "A", "ativism": "A",
    "elihood": "E", "encible": "A", "entally": "A", "entials": "A",
    "entiate": "A", "entness": "A", "fulness": "A", "ibility": "A",
    "icalism": "A", "icalist": "A", "icality": "A", "icalize": "A",
    "ication": "G", "icianry": "A", "ination": "A", "ingness": "A",
    "ionally": "A", "isation": "A", "ishness": "A", "istical": "A",
    "iteness": "A", "iveness": "A", "ivistic": "A", "ivities": "A",
    "ization": "F", "izement": "A", "oidally": "A", "ousness": "A",
    # length 6
    "aceous": "A", "acious": "B", "action": "G", "alness": "A",
    "ancial": "A", "ancies": "A", "ancing": "B", "ariser": "A",
    "arized": "A", "arizer": "A", "atable": "A", "ations": "B",
    "atives": "A", "eature": "Z", "efully": "A", "encies": "A",
    "encing": "A", "ential": "A", "enting": "C", "entist": "A",
    "eously": "A", "ialist": "A", "iality": "A", "ialize": "A",
    "ically": "A", "icance": "A", "icians": "A", "icists": "A",
    "ifully": "A", "ionals": "A", "ionate": "D", "ioning": "A",
    "ionist": "A", "iously": "A", "istics": "A", "izable": "E",
    "lessly": "A", "nesses": "A", "oidism": "A",
    # length 5
    "acies": "A", "acity": "A", "aging": "B", "aical": "A",
    "alist": "A", "alism": "B", "ality": "A", "alize": "A",
    "allic": "BB", "anced": "B", "ances": "B", "antic": "C",
    "arial": "A", "aries": "A", "arily": "A", "arity": "B",
    "arize": "A", "aroid": "A", "ately": "A", "ating": "I",
    "ation": "B", "ative": "A", "ators": "A", "atory": "A",
    "ature": "E", "early": "Y", "ehood": "A", "eless": "A",
    "elity": "A", "ement": "A", "enced": "A", "ences": "A",
    "eness": "E", "ening": "E", "ental": "A", "ented": "C",
    "ently": "A", "fully": "A", "ially": "A", "icant": "A",
    "ician": "A", "icide": "A", "icism": "A", "icist": "A",
    "icity": "A", "idine": "I", "iedly": "A", "ihood": "A",
    "inate": "A", "iness": "A", "ingly": "B", "inism": "J",
    "inity": "CC", "ional": "A", "ioned": "A", "ished": "A",
    "istic": "A", "ities": "A", "itous": "A", "ively": "A",
    "ivity": "A", "izers": "F", "izing": "F", "oidal": "A",
    "oides": "A", "otide": "A", "ously": "A",
    # length 4
    "able": "A", "ably": "A", "ages": "B", "ally": "B",
    "ance": "B", "ancy": "B", "ants": "B", "aric": "A",
    "arly": "K", "ated": "I", "ates": "A", "atic": "B",
    "ator": "A", "ealy": "Y", "edly": "E", "eful": "A",
    "eity": "A", "ence": "A", "ency": "A", "ened": "E",
    "enly": "E", "eous": "A", "hood": "A", "ials": "A",
    "ians": "A", "ible": "A", "ibly": "A", "ical": "A",
    "ides": "L", "iers": "A", "iful": "A", "ines": "M",
    "ings": "N", "ions": "B", "ious": "A", "isms": "B",
    "ists": "A", "itic": "H", "ized": "F", "izer": "F",
    "less": "A", "lily": "A", "ness": "A", "ogen": "A",
    "ward": "A", "wise": "A", "ying": "B", "yish": "A",
    # length 3
    "acy": "A", "age": "B", "aic": "A", "als": "BB",
    "ant": "B", "ars": "O", "ary": "F", "ata": "A",
    "ate": "A", "eal": "Y", "ear": "Y", "ely": "E",
    "ene": "E", "ent": "C", "ery": "E", "ese": "A",
    "ful": "A", "ial": "A", "ian": "A", "ics": "A",
    "ide": "L", "ied": "A", "ier": "A", "ies": "P",
    "ily": "A", "ine": "M", "ing": "N", "ion": "Q",
    "ish": "C", "ism": "B", "ist": "A", "ite": "AA",
    "ity": "A", "ium": "A", "ive": "A", "ize": "F",
    "oid": "A", "one": "R", "ous": "A",
    # length 2
    "ae": "A", "al": "BB", "ar": "X", "as": "B",
    "ed": "E", "en": "F", "es": "E", "ia": "A",
    "ic": "A", "is": "A", "ly": "B", "on": "S",
    "or": "T", "um": "U", "us": "V", "yl": "R",
    "'s": "A", "s'": "A",
    # length 1
    "a": "A", "e": "A", "i": "A", "o": "A",
    "s": "W", "y": "B",
}

_MAX_ENDING_LENGTH = max(len(e) for e in _ENDINGS)

_DOUBLES = ("bb", "dd", "gg", "ll", "mm", "nn", "pp", "rr", "ss", "tt")

# Terminal respellings: pattern -> (replacement, letters that block when
# they immediately precede the pattern).  Only the longest matching
# pattern is considered; a blocked match means no respelling at all.
_RESPELL: dict[str, tuple[str, str]] = {
    "iev": ("ief", ""),
    "uct": ("uc", ""),
    "umpt": ("um", ""),
    "rpt": ("rb", ""),
    "urs": ("ur", ""),
    "istr": ("ister", ""),
    "metr": ("meter", ""),
    "olv": ("olut", ""),
    "ul": ("l", "aoi"),
    "bex": ("bic", ""),
    "dex": ("dic", ""),
    "pex": ("pic", ""),
    "tex": ("tic", ""),
    "ax": ("ac", ""),
    "ex": ("ec", ""),
    "ix": ("ic", ""),
    "lux": ("luc", ""),
    "uad": ("uas", ""),
    "vad": ("vas", ""),
    "cid": ("cis", ""),
    "lid": ("lis", ""),
    "erid": ("eris", ""),
    "pand": ("pans", ""),
    "end": ("ens", "s"),
    "ond": ("ons", ""),
    "lud": ("lus", ""),
    "rud": ("rus", ""),
    "her": ("hes", "pt"),
    "mit": ("mis", ""),
    "ent": ("ens", "m"),
    "ert": ("ers", ""),
    "et": ("es", "n"),
    "yt": ("ys", ""),
    "yz": ("ys", ""),
}

_MAX_RESPELL_LENGTH = max(len(p) for p in _RESPELL)


def _remove_ending(word: str) -> str:
    """Strip the longest listed ending whose condition holds, keeping >= 2 letters."""
    longest = min(_MAX_ENDING_LENGTH, len(word) - 2)
    for length in range(longest, 0, -1):
        condition_code = _ENDINGS.get(word[-length:])
        if condition_code is None:
            continue
        stem = word[:-length]
        if _CONDITIONS[condition_code](stem):
            return stem
    return word


def _undouble(stem: str) -> str:
    if stem.endswith(_DOUBLES):
        return stem[:-1]
    return stem


def _respell(stem: str) -> str:
    for length in range(min(_MAX_RESPELL_LENGTH, len(stem)), 1, -1):
        pattern = stem[-length:]
        rule = _RESPELL.get(pattern)
        if rule is None:
            continue
        replacement, blocked_by = rule
        preceding = stem[-length - 1: -length]
        if preceding and preceding in blocked_by:
            return stem
        return stem[: -length] + replacement
    return stem


def lovins_stem(word: str) -> str:
    """Return the Lovins stem of a single word, lowercasing first.

    Non-alphabetic tokens pass through unchanged apart from lowercasing.
    """
    word = word.lower()
    if not word.isalpha():
        return word
    stem = _remove_ending(word)
    stem = _undouble(stem)
    return _respell(stem)


def iterated_lovins_stem(word: str) -> str:
    """Apply the Lovins stemmer until the word stops changing.

    Raises StemIterationError if no fixpoint is reached within
    MAX_FIXPOINT_ITERATIONS passes; no English word needs more than a few.
    """
    return _fixpoint(word.lower(), lovins_stem, MAX_FIXPOINT_ITERATIONS)


def _fixpoint(word: str, step: Callable[[str], str], cap: int) -> str:
    current = word
    for _ in range(cap):
        stemmed = step(current)
        if stemmed == current:
            return current
        current = stemmed
    raise StemIterationError(
        f"no stemming fixpoint for {word!r} within {cap} iterations"
    )
