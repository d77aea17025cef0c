import pytest
from hypothesis import given, strategies as st

from docrank.errors import ParseError
from docrank.textpipe import (
    Lexicon,
    LexiconEntry,
    PosTag,
    TaggedToken,
    correct_spelling,
    extract_keywords,
    load_lexicon,
    load_stopwords,
    normalize,
    pos_tag,
    remove_stopwords,
    tokenize,
)

from oracles import edit1_candidates, enumerate_segmentations, greedy_from_enumeration


def make_lexicon(words, alphabet=None):
    entries = {w: LexiconEntry(f, PosTag[t]) for w, (f, t) in words.items()}
    alphabet = alphabet or sorted({c for w in words for c in w})
    return Lexicon(entries=entries, alphabet=list(alphabet))


# --------------------------------------------------------------- normalize

def test_normalize_whitespace_collapse():
    assert normalize("a   b") == "a b"
    assert normalize("  a\t\nb  ") == "a b"


def test_normalize_repeated_combining_mark():
    assert normalize("สวัสดีี") == "สวัสดี"  # duplicated U+0E35


def test_normalize_dangling_marks_removed():
    assert normalize("ิก") == "ก"
    assert normalize("ก ัิข") == "ก ข"


def test_normalize_question_mark_and_maiyamok_runs():
    assert normalize("อะไร???") == "อะไร?"
    assert normalize("เด็กๆๆๆ") == "เด็กๆ"


def test_normalize_empty():
    assert normalize("") == ""


# printable Thai block plus ASCII and whitespace, biased toward edge chars
_norm_alphabet = st.sampled_from(
    list("กขสวัสดีิ ่้ๆ?ab  \t") + ["ั", "ิ", "็"]
)


@given(st.lists(_norm_alphabet, max_size=40).map("".join))
def test_normalize_idempotent_and_nonincreasing(s):
    once = normalize(s)
    assert normalize(once) == once
    assert len(once) <= len(s)


# ---------------------------------------------------------------- tokenize

def test_tokenize_greedy_matches_enumeration_oracle(thai_lexicon):
    text = "ข้อมูลเมียนมาร์"
    words = set(thai_lexicon.entries)
    segs = enumerate_segmentations(text, words)
    assert ["ข้อมูล", "เมียนมาร์"] in segs
    assert tokenize(text, thai_lexicon) == greedy_from_enumeration(text, words)
    assert tokenize(text, thai_lexicon) == ["ข้อมูล", "เมียนมาร์"]


def test_tokenize_empty(thai_lexicon):
    assert tokenize("", thai_lexicon) == []


def test_tokenize_unknown_run_single_token(thai_lexicon):
    assert tokenize("abc", thai_lexicon) == ["abc"]


def test_tokenize_longest_match_wins():
    lex = make_lexicon({"ab": (1, "NCMN"), "abc": (1, "NCMN"), "c": (1, "NCMN")})
    assert tokenize("abc", lex) == ["abc"]


def test_tokenize_spaces_are_separators(thai_lexicon):
    toks = tokenize("ข้อมูล เมียนมาร์", thai_lexicon)
    assert toks == ["ข้อมูล", "เมียนมาร์"]
    assert all(" " not in t for t in toks)


@given(st.text(alphabet="abก ข้อมูล", max_size=30))
def test_tokenize_partition_property(thai_lexicon, s):
    toks = tokenize(s, thai_lexicon)
    assert "".join(toks) == s.replace(" ", "")


# --------------------------------------------------------- correct_spelling

@pytest.fixture(scope="module")
def latin_lexicon():
    return make_lexicon(
        {"hello": (10, "NCMN"), "help": (5, "NCMN")},
        alphabet="abcdefghijklmnopqrstuvwxyz",
    )


def test_correct_spelling_passthrough(latin_lexicon):
    assert correct_spelling("hello", latin_lexicon) == "hello"


def test_correct_spelling_distance1_max_frequency(latin_lexicon):
    # oracle: both lexicon words are reachable within one edit of "helo"
    cands = edit1_candidates("helo", list("abcdefghijklmnopqrstuvwxyz"))
    assert {"hello", "help"} <= cands
    assert correct_spelling("helo", latin_lexicon) == "hello"  # freq 10 > 5


def test_correct_spelling_nothing_in_range(latin_lexicon):
    assert correct_spelling("zzzz", latin_lexicon) == "zzzz"


def test_correct_spelling_distance2(latin_lexicon):
    assert correct_spelling("heo", latin_lexicon) == "hello"


def test_correct_spelling_tie_lexicographic():
    lex = make_lexicon({"aa": (5, "NCMN"), "ab": (5, "NCMN")}, alphabet="ab")
    # both at distance 1 from "a" with equal frequency; "aa" < "ab"
    assert correct_spelling("a", lex) == "aa"


@given(st.sampled_from(["hello", "help"]))
def test_correct_spelling_identity_on_lexicon(latin_lexicon, w):
    assert correct_spelling(w, latin_lexicon) == w


# ---------------------------------------------------------- remove_stopwords

def test_remove_stopwords_basic():
    assert remove_stopwords(["ขอ", "ข้อมูล"], {"ขอ"}) == ["ข้อมูล"]


def test_remove_stopwords_empty():
    assert remove_stopwords([], set()) == []


def test_remove_stopwords_question_mark_always():
    assert remove_stopwords(["ข้อมูล", "?"], set()) == ["ข้อมูล"]


# ------------------------------------------------------------------ pos_tag

def test_pos_tag_lexicon_lookup(thai_lexicon):
    assert pos_tag(["ข้อมูล"], thai_lexicon) == [TaggedToken("ข้อมูล", PosTag.NCMN)]
    assert pos_tag(["ใน"], thai_lexicon) == [TaggedToken("ใน", PosTag.PREP)]


def test_pos_tag_unknown_defaults_to_ncmn(thai_lexicon):
    assert pos_tag(["zzzz"], thai_lexicon) == [TaggedToken("zzzz", PosTag.NCMN)]


@given(st.lists(st.sampled_from(["ข้อมูล", "ใน", "xyz"]), max_size=20))
def test_pos_tag_length_preserved(thai_lexicon, tokens):
    assert len(pos_tag(tokens, thai_lexicon)) == len(tokens)


# ----------------------------------------------------------- extract_keywords

def test_extract_keywords_heading_fixture(thai_lexicon):
    tagged = pos_tag(tokenize("ลักษณะภูมิประเทศ", thai_lexicon), thai_lexicon)
    assert extract_keywords(tagged) == ["ลักษณะ", "ภูมิประเทศ"]


def test_extract_keywords_query_fixture(thai_lexicon, thai_stopwords):
    toks = tokenize("ขอข้อมูลนิคมอุตสาหกรรมในเมียนมาร์หน่อยค่ะ", thai_lexicon)
    toks = remove_stopwords(toks, thai_stopwords)
    kws = extract_keywords(pos_tag(toks, thai_lexicon))
    assert set(kws) == {"นิคมอุตสาหกรรม", "ข้อมูล", "เมียนมาร์"}


def test_extract_keywords_all_filtered():
    tagged = [TaggedToken("ใน", PosTag.PREP), TaggedToken("ค่ะ", PosTag.PART)]
    assert extract_keywords(tagged) == []


def test_extract_keywords_keeps_duplicates():
    tagged = [TaggedToken("ก", PosTag.NCMN)] * 3
    assert extract_keywords(tagged) == ["ก", "ก", "ก"]


@given(st.lists(st.sampled_from([
    TaggedToken("a", PosTag.NCMN), TaggedToken("b", PosTag.PREP),
    TaggedToken("c", PosTag.VACT), TaggedToken("d", PosTag.PART),
]), max_size=20))
def test_extract_keywords_subsequence(tagged):
    kws = extract_keywords(tagged)
    surfaces = [t.surface for t in tagged]
    it = iter(surfaces)
    assert all(k in it for k in kws)  # subsequence check


# ------------------------------------------------------------------ loaders

def test_load_lexicon_roundtrip(thai_lexicon):
    assert "ข้อมูล" in thai_lexicon
    assert thai_lexicon.entries["ใน"].tag is PosTag.PREP
    assert thai_lexicon.alphabet


def test_load_lexicon_rejects_missing_header(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("ก\t1\tNCMN\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_lexicon(p)


def test_load_lexicon_rejects_bad_line(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("#alphabet:กข\nก\tx\tNCMN\n", encoding="utf-8")
    with pytest.raises(ParseError) as exc:
        load_lexicon(p)
    assert exc.value.line_number == 2


def test_load_stopwords_skips_comments(tmp_path):
    p = tmp_path / "stops.txt"
    p.write_text("# comment\nใน\n\nขอ\n", encoding="utf-8")
    assert load_stopwords(p) == {"ใน", "ขอ"}
