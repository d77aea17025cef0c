"""
Walking a Thai query through the text pipeline
==============================================

Every retrieval decision starts here: normalize the raw text, segment it
against a dictionary, drop stopwords, tag what is left, and keep only the
keyword-bearing tags. This script runs each stage on a real query and prints
the intermediate results, using the small fixture lexicon shipped with the
test suite.
"""

import os
from pathlib import Path

os.chdir(Path(__file__).resolve().parents[1])

from docrank import (extract_keywords, load_lexicon, load_stopwords,
                     normalize, pos_tag, remove_stopwords, tokenize)

lexicon = load_lexicon("tests/fixtures/thai/lexicon.tsv")
stopwords = load_stopwords("tests/fixtures/thai/stopwords.txt")

query = "ขอข้อมูล  นิคมอุตสาหกรรมในเมียนมาร์หน่อยค่ะ??"
print("raw:       ", repr(query))

# duplicate spaces and repeated question marks collapse away
norm = normalize(query)
print("normalized:", repr(norm))

# greedy longest-match segmentation; the concatenation of the tokens is
# always the input minus its spaces
tokens = tokenize(norm, lexicon)
print("tokens:    ", tokens)

tokens = remove_stopwords(tokens, stopwords)
print("no stops:  ", tokens)

tagged = pos_tag(tokens, lexicon)
print("tagged:    ", [(t.surface, t.tag.value) for t in tagged])

# only noun/verb-class tags survive as keywords
keywords = extract_keywords(tagged)
print("keywords:  ", keywords)
