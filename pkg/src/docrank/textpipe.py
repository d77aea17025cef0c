"""Text-processing pipeline: normalization, dictionary tokenization,
spelling correction, stopword removal, POS tagging and keyword extraction.

Everything is driven by data files (lexicon TSV, stopword list) so tests can
run on tiny fixtures. All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum


class PosTag(Enum):
    CMTR = "CMTR"  # measurement classifier
    NPRP = "NPRP"  # proper noun
    NCMN = "NCMN"  # common noun
    NTTL = "NTTL"  # title noun
    VACT = "VACT"  # active verb
    VSTA = "VSTA"  # stative verb
    PRON = "PRON"
    PREP = "PREP"
    PART = "PART"
    PUNC = "PUNC"
    OTHER = "OTHER"


# Tags whose surfaces count as keywords.
KEYWORD_TAGS = frozenset(
    {PosTag.CMTR, PosTag.NPRP, PosTag.NCMN, PosTag.NTTL, PosTag.VACT, PosTag.VSTA}
)


@dataclass(frozen=True)
class LexiconEntry:
    frequency: int
    tag: PosTag


@dataclass
class Lexicon:
    """Word list with frequencies and POS tags, plus the alphabet used to
    generate spelling-correction candidates."""

    entries: dict[str, LexiconEntry]
    alphabet: list[str]
    _max_len: int = field(init=False, default=0)

    def __post_init__(self):
        for word in self.entries:
            if not word:
                raise ValueError("lexicon words must be nonempty")
        if not self.alphabet:
            raise ValueError("lexicon alphabet must be nonempty")
        self._max_len = max((len(w) for w in self.entries), default=0)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    @property
    def max_word_len(self) -> int:
        return self._max_len


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: PosTag


def load_lexicon(path) -> Lexicon:
    """Parse a lexicon TSV file.

    First line must be a header "#alphabet:" immediately followed by the
    code points of the edit alphabet; every following non-empty line is
    "word<TAB>frequency<TAB>tag".
    """
    from .errors import ParseError

    entries: dict[str, LexiconEntry] = {}
    alphabet: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if lineno == 1:
                if not line.startswith("#alphabet:"):
                    raise ParseError("missing #alphabet: header", lineno)
                alphabet = list(line[len("#alphabet:"):])
                continue
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError("expected word<TAB>frequency<TAB>tag", lineno)
            word, freq_s, tag_s = parts
            if not word:
                raise ParseError("empty word", lineno)
            try:
                freq = int(freq_s)
            except ValueError:
                raise ParseError(f"bad frequency {freq_s!r}", lineno) from None
            if freq < 0:
                raise ParseError("frequency must be non-negative", lineno)
            try:
                tag = PosTag[tag_s]
            except KeyError:
                raise ParseError(f"unknown tag {tag_s!r}", lineno) from None
            entries[word] = LexiconEntry(freq, tag)
    return Lexicon(entries=entries, alphabet=alphabet)


def load_stopwords(path) -> set[str]:
    """One stopword per line; lines starting with '#' are comments."""
    stops: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip()
            if word and not word.startswith("#"):
                stops.add(word)
    return stops


# Thai combining vowel/tone marks considered "dangling" when they have no
# base character to attach to (string start or right after a space).
_COMBINING = "ัิ-ฺ็-๎"
_DANGLING_RE = re.compile(rf"(?:^|(?<= ))[{_COMBINING}]+")
_RUN_RE = re.compile(rf"([{_COMBINING}?ๆ])\1+")


def normalize(text: str) -> str:
    """Collapse whitespace, drop dangling combining marks, and squeeze runs
    of repeated combining marks / "?" / "ๆ" down to one occurrence.

    Idempotent and length-nonincreasing.
    """
    out = " ".join(text.split())
    out = _DANGLING_RE.sub("", out)
    out = " ".join(out.split())
    out = _RUN_RE.sub(r"\1", out)
    return out


def tokenize(text: str, lexicon: Lexicon) -> list[str]:
    """Greedy longest-match segmentation against the lexicon.

    Spaces separate chunks and never appear in tokens. Maximal runs of
    characters matching no lexicon word become single unknown tokens, so
    the concatenation of the output always equals the input minus spaces.
    """
    tokens: list[str] = []
    for chunk in text.split(" "):
        if chunk:
            tokens.extend(_segment(chunk, lexicon))
    return tokens


def _segment(chunk: str, lexicon: Lexicon) -> list[str]:
    words = lexicon.entries
    n = len(chunk)
    out: list[str] = []
    i = 0
    unknown_start = None
    while i < n:
        match = None
        for length in range(min(lexicon.max_word_len, n - i), 0, -1):
            cand = chunk[i:i + length]
            if cand in words:
                match = cand
                break
        if match is None:
            if unknown_start is None:
                unknown_start = i
            i += 1
        else:
            if unknown_start is not None:
                out.append(chunk[unknown_start:i])
                unknown_start = None
            out.append(match)
            i += len(match)
    if unknown_start is not None:
        out.append(chunk[unknown_start:])
    return out


def _edits1(word: str, alphabet: list[str]) -> set[str]:
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = [L + R[1:] for L, R in splits if R]
    transposes = [L + R[1] + R[0] + R[2:] for L, R in splits if len(R) > 1]
    replaces = [L + c + R[1:] for L, R in splits if R for c in alphabet]
    inserts = [L + c + R for L, R in splits for c in alphabet]
    return set(deletes + transposes + replaces + inserts)


def _best(candidates: set[str], lexicon: Lexicon) -> str | None:
    known = [w for w in candidates if w in lexicon.entries]
    if not known:
        return None
    # highest frequency wins; ties go to the lexicographically smallest word
    return min(known, key=lambda w: (-lexicon.entries[w].frequency, w))


def correct_spelling(token: str, lexicon: Lexicon) -> str:
    """Norvig-style correction: exact match, then edit distance 1, then 2;
    unknown tokens with no candidate are returned unchanged."""
    if token in lexicon.entries:
        return token
    # no lexicon word can be within distance 2 of a much longer token,
    # so don't generate candidates for arbitrarily long unknown runs
    if len(token) > lexicon.max_word_len + 2:
        return token
    e1 = _edits1(token, lexicon.alphabet)
    best = _best(e1, lexicon)
    if best is not None:
        return best
    e2 = set()
    for w in e1:
        e2.update(_edits1(w, lexicon.alphabet))
    best = _best(e2, lexicon)
    return best if best is not None else token


def remove_stopwords(tokens: list[str], stops: set[str]) -> list[str]:
    """Order-preserving filter; '?' is always removed."""
    return [t for t in tokens if t != "?" and t not in stops]


def pos_tag(tokens: list[str], lexicon: Lexicon) -> list[TaggedToken]:
    """Lexicon-lookup tagger; unknown tokens default to NCMN so that unseen
    content words still survive keyword filtering."""
    out = []
    for t in tokens:
        entry = lexicon.entries.get(t)
        out.append(TaggedToken(t, entry.tag if entry else PosTag.NCMN))
    return out


def extract_keywords(tagged: list[TaggedToken]) -> list[str]:
    """Keep surfaces whose tag is keyword-eligible; duplicates retained."""
    return [t.surface for t in tagged if t.tag in KEYWORD_TAGS]
