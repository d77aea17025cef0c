#!/usr/bin/env python3
"""Regenerate the committed test fixtures.

Two fixture sets are produced, both fully deterministic:

  tests/fixtures/thai/        tiny Thai corpus (12 documents, 4 countries)
                              with a matching lexicon, stopword list,
                              gazetteer and toy 10-dimensional embeddings.
  tests/fixtures/hybrid_eval/ constructed Latin-token corpus (23 documents)
                              plus a 10-pair eval set on which, at
                              accuracy@1, bm25-only scores 6/10,
                              embedding-only 7/10 and hybrid 9/10.

The script verifies the claimed numbers by running the actual retrieval
stack before writing anything, so the committed fixtures can always be
reproduced and re-checked with:  python3 scripts/gen_fixtures.py
"""

import json
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from docrank.embeddings import load_embeddings  # noqa: E402
from docrank.evalharness import evaluate, load_pairs  # noqa: E402
from docrank.ingest import build_corpus, parse_manifest  # noqa: E402
from docrank.ranker import Retriever, load_gazetteer  # noqa: E402
from docrank.textpipe import load_lexicon, load_stopwords, tokenize  # noqa: E402

THAI_DIR = ROOT / "tests" / "fixtures" / "thai"
HYBRID_DIR = ROOT / "tests" / "fixtures" / "hybrid_eval"


# ---------------------------------------------------------------- Thai corpus

# word -> (frequency, tag)
THAI_LEXICON = {
    "ลักษณะ": (50, "NCMN"),
    "ภูมิประเทศ": (30, "NCMN"),
    "สภาพ": (40, "NCMN"),
    "ภูมิอากาศ": (30, "NCMN"),
    "วัฒนธรรม": (30, "NCMN"),
    "มารยาท": (20, "NCMN"),
    "ธุรกิจ": (40, "NCMN"),
    "และ": (100, "PART"),
    "ทาง": (80, "PREP"),
    "ขอ": (90, "VACT"),
    "ข้อมูล": (100, "NCMN"),
    "นิคมอุตสาหกรรม": (20, "NCMN"),
    "ใน": (200, "PREP"),
    "เมียนมาร์": (50, "NPRP"),
    "หน่อย": (60, "PART"),
    "ค่ะ": (100, "PART"),
    "คะ": (90, "PART"),
    "ประชากร": (40, "NCMN"),
    "มี": (150, "VSTA"),
    "เท่าไร": (40, "PART"),
    "เมืองหลวง": (30, "NCMN"),
    "ของ": (180, "PREP"),
    "กัมพูชา": (40, "NPRP"),
    "ชื่อ": (50, "NCMN"),
    "อะไร": (70, "PART"),
    "หรือ": (60, "PART"),
    "เกี่ยวกับ": (80, "PREP"),
    "การนำเข้า": (30, "NCMN"),
    "สินค้า": (60, "NCMN"),
    "กฎระเบียบ": (20, "NCMN"),
    "กฎหมาย": (30, "NCMN"),
    "การลงทุน": (30, "NCMN"),
    "ระบบ": (40, "NCMN"),
    "โลจิสติกส์": (10, "NCMN"),
    "การขนส่ง": (20, "NCMN"),
    "เวียดนาม": (40, "NPRP"),
    "ลาว": (40, "NPRP"),
    "ภาษี": (30, "NCMN"),
    "แรงงาน": (30, "NCMN"),
    "วีซ่า": (20, "NCMN"),
    "เศรษฐกิจ": (30, "NCMN"),
    "สกุลเงิน": (20, "NCMN"),
    "ธนาคาร": (30, "NCMN"),
    "เกษตร": (20, "NCMN"),
    "ท่องเที่ยว": (20, "VACT"),
    "พื้นที่": (30, "NCMN"),
    "สำคัญ": (30, "VSTA"),
    "นักลงทุน": (20, "NCMN"),
    "ผู้ประกอบการ": (20, "NCMN"),
    "เอกสาร": (30, "NCMN"),
    "ต่างประเทศ": (30, "NCMN"),
    "เป็น": (150, "VSTA"),
    "ที่": (200, "PREP"),
}

THAI_STOPWORDS = [
    "ขอ", "ใน", "หน่อย", "ค่ะ", "คะ", "มี", "เท่าไร", "ของ", "อะไร",
    "หรือ", "เกี่ยวกับ", "และ", "ทาง", "ที่", "เป็น",
]

GAZETTEER = {
    "MM": ["เมียนมาร์", "พม่า", "Myanmar"],
    "VN": ["เวียดนาม", "Vietnam"],
    "KH": ["กัมพูชา", "Cambodia"],
    "LA": ["ลาว", "Laos"],
}

# toy 10-dim word vectors; axes: 0 trade, 1 Myanmar, 2 law, 3 logistics,
# 4 geography, 5 culture, 6 information, 7 Vietnam, 8 Cambodia, 9 Laos
def _axis(i, scale=1.0):
    v = [0.0] * 10
    v[i] = scale
    return v


def _mix(i, wi, j, wj):
    v = [0.0] * 10
    v[i], v[j] = wi, wj
    return v


THAI_VECTORS = {
    "ข้อมูล": _axis(6),
    "การนำเข้า": _axis(0),
    "สินค้า": _axis(0),
    "เมียนมาร์": _axis(1),
    "กฎระเบียบ": _axis(2),
    "กฎหมาย": _axis(2),
    "การลงทุน": _mix(0, 0.8, 2, 0.6),
    "ระบบ": _axis(3),
    "โลจิสติกส์": _axis(3),
    "การขนส่ง": _mix(0, 0.6, 3, 0.8),
    "ลักษณะ": _axis(4),
    "ภูมิประเทศ": _axis(4),
    "สภาพ": _axis(4),
    "ภูมิอากาศ": _axis(4),
    "ประชากร": _axis(4),
    "เมืองหลวง": _axis(4),
    "พื้นที่": _axis(4),
    "เกษตร": _axis(4),
    "วัฒนธรรม": _axis(5),
    "มารยาท": _axis(5),
    "แรงงาน": _axis(5),
    "ท่องเที่ยว": _axis(5),
    "ธุรกิจ": _mix(0, 0.6, 5, 0.8),
    "ชื่อ": _axis(6),
    "สำคัญ": _axis(6),
    "เอกสาร": _axis(6),
    "เวียดนาม": _axis(7),
    "กัมพูชา": _axis(8),
    "ลาว": _axis(9),
    "ภาษี": _mix(0, 0.6, 2, 0.8),
    "เศรษฐกิจ": _axis(0),
    "นิคมอุตสาหกรรม": _mix(0, 0.8, 3, 0.6),
    "วีซ่า": _axis(2),
    "ธนาคาร": _axis(2),
    "นักลงทุน": _axis(0),
    "ผู้ประกอบการ": _axis(0),
    "ต่างประเทศ": _axis(0),
    "สกุลเงิน": _axis(0),
}

THAI_DOCS = {
    "mm_trade.txt": (
        "MM", "myanmar-trade", "https://example.org/mm/trade",
        [
            ("กฎระเบียบการนำเข้าสินค้าในเมียนมาร์",
             "กฎระเบียบการนำเข้าสินค้าในเมียนมาร์มีข้อมูลสำคัญ\n"
             "ผู้ประกอบการต่างประเทศขอข้อมูลการนำเข้าสินค้าและภาษี\n"),
            ("กฎหมายการลงทุนในเมียนมาร์",
             "กฎหมายการลงทุนในเมียนมาร์สำคัญ นักลงทุนต่างประเทศมีเอกสารและวีซ่า\n"
             "ข้อมูลกฎหมายเมียนมาร์\n"),
            ("ระบบโลจิสติกส์และการขนส่งในเมียนมาร์",
             "ระบบโลจิสติกส์และการขนส่งสินค้าในเมียนมาร์มีข้อมูลระบบธนาคาร\n"),
        ],
    ),
    "mm_general.txt": (
        "MM", "myanmar-general", "https://example.org/mm/general",
        [
            ("ลักษณะภูมิประเทศ", "ลักษณะภูมิประเทศมีพื้นที่เกษตรสำคัญ\n"),
            ("สภาพภูมิอากาศ", "สภาพภูมิอากาศมีลักษณะสำคัญทางเกษตร\n"),
            ("วัฒนธรรมและมารยาททางธุรกิจ",
             "วัฒนธรรมและมารยาททางธุรกิจสำคัญของผู้ประกอบการ\n"),
        ],
    ),
    "vn_guide.txt": (
        "VN", "vietnam-guide", "https://example.org/vn/guide",
        [
            ("ภาษีในเวียดนาม",
             "ภาษีในเวียดนามมีกฎระเบียบสำคัญ ผู้ประกอบการมีข้อมูลภาษี\n"),
            ("แรงงานในเวียดนาม", "แรงงานในเวียดนามมีข้อมูลสำคัญทางธุรกิจ\n"),
        ],
    ),
    "kh_guide.txt": (
        "KH", "cambodia-guide", "https://example.org/kh/guide",
        [
            ("เมืองหลวงของกัมพูชา",
             "เมืองหลวงของกัมพูชามีชื่อสำคัญ ข้อมูลเมืองหลวงและประชากร\n"),
            ("การลงทุนในกัมพูชา",
             "การลงทุนในกัมพูชามีกฎหมายและภาษีสำคัญ นักลงทุนขอวีซ่าธุรกิจ\n"),
        ],
    ),
    "la_guide.txt": (
        "LA", "laos-guide", "https://example.org/la/guide",
        [
            ("เศรษฐกิจในลาว",
             # "สินค้" is a deliberate edit-distance-1 misspelling of "สินค้า"
             "เศรษฐกิจลาวมีข้อมูล สินค้ และสกุลเงิน\n"),
            ("การขนส่งในลาว", "การขนส่งและระบบธนาคารในลาวมีลักษณะสำคัญ\n"),
        ],
    ),
}

SECTION42_QUERY = "ขอข้อมูลเกี่ยวกับการนำเข้าสินค้าในเมียนมาร์หน่อยค่ะ"


def write_lexicon(path, entries):
    alphabet = sorted({ch for w in entries for ch in w})
    lines = ["#alphabet:" + "".join(alphabet)]
    lines += [f"{w}\t{freq}\t{tag}" for w, (freq, tag) in entries.items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_embeddings(path, vectors):
    dim = len(next(iter(vectors.values())))
    lines = [f"{len(vectors)} {dim}"]
    for w, v in vectors.items():
        lines.append(w + " " + " ".join(format(x, "g") for x in v))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def gen_thai():
    docs_dir = THAI_DIR / "docs"
    docs_dir.mkdir(parents=True, exist_ok=True)
    write_lexicon(THAI_DIR / "lexicon.tsv", THAI_LEXICON)
    (THAI_DIR / "stopwords.txt").write_text(
        "# fixture stopword list\n" + "\n".join(THAI_STOPWORDS) + "\n", encoding="utf-8"
    )
    (THAI_DIR / "gazetteer.json").write_text(
        json.dumps(GAZETTEER, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    write_embeddings(THAI_DIR / "embeddings.txt", THAI_VECTORS)

    manifest = []
    for fname, (country, title, uri, sections) in THAI_DOCS.items():
        text = "".join(f"# {h}\n{body}" for h, body in sections)
        (docs_dir / fname).write_text(text, encoding="utf-8")
        manifest.append(
            {"path": f"tests/fixtures/thai/docs/{fname}", "country": country,
             "title": title, "uri": uri}
        )
    (THAI_DIR / "manifest.json").write_text(
        json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )

    # sanity: every body word segments into lexicon words or intended unknowns
    lexicon = load_lexicon(THAI_DIR / "lexicon.tsv")
    for fname, (_, _, _, sections) in THAI_DOCS.items():
        for heading, body in sections:
            for text in (heading, body):
                toks = tokenize(" ".join(text.split()), lexicon)
                unknown = [t for t in toks if t not in lexicon]
                assert unknown in ([], ["สินค้"]), (fname, unknown)

    # verify the 12-document end-to-end behavior before committing the fixture
    os.chdir(ROOT)
    stops = load_stopwords(THAI_DIR / "stopwords.txt")
    emb = load_embeddings(THAI_DIR / "embeddings.txt")
    gaz = load_gazetteer(THAI_DIR / "gazetteer.json")
    man = parse_manifest(THAI_DIR / "manifest.json", set(gaz))
    corpus = build_corpus(man, lexicon, stops, emb)
    assert len(corpus.documents) == 12, len(corpus.documents)
    retriever = Retriever.from_store(corpus, emb, gaz, lexicon, stops)
    results, _ = retriever.query(SECTION42_QUERY, k=3)
    headings = [retriever.doc(r.doc_id).heading for r in results]
    assert headings[0] == "กฎระเบียบการนำเข้าสินค้าในเมียนมาร์", headings
    assert set(headings) == {
        "กฎระเบียบการนำเข้าสินค้าในเมียนมาร์",
        "กฎหมายการลงทุนในเมียนมาร์",
        "ระบบโลจิสติกส์และการขนส่งในเมียนมาร์",
    }, headings
    print("thai fixture ok: 12 docs, top-3 =", headings)


# ------------------------------------------------- hybrid superiority corpus

AUX = 10  # shared auxiliary embedding axis
DIM = 11


def _vec(components):
    v = [0.0] * DIM
    for axis, w in components:
        v[axis] = w
    return v


def gen_hybrid():
    docs_dir = HYBRID_DIR / "docs"
    docs_dir.mkdir(parents=True, exist_ok=True)

    lexicon_entries = {}
    vectors = {}
    manifest = []
    pairs = []

    # per-query cluster layout:
    #   i 1-4: both modes right            (R heading = query axis, R content strong)
    #   i 5-7: embedding right, bm25 wrong (distractor content outscores R)
    #   i 8-9: bm25 right, embedding wrong (distractor heading outscores R)
    #   i 10 : both wrong                  (distractor wins heading and content)
    for i in range(1, 11):
        axis = i - 1
        qx, qy = f"q{i}x", f"q{i}y"
        hr, hd, hf = f"h{i}r", f"h{i}d", f"h{i}f"
        filler = f"filler{i}"
        for w in (qx, qy, hr, hd, hf, filler):
            lexicon_entries[w] = (10, "NCMN")
        vectors[qx] = _vec([(axis, 1.0)])
        vectors[qy] = _vec([(axis, 1.0)])

        if i <= 4:
            vectors[hr] = _vec([(axis, 1.0)])
            vectors[hd] = _vec([(axis, 0.3), (AUX, 0.9539392)])
            sections = [
                (hr, " ".join([qx] * 3 + [qy] * 3)),
                (hd, " ".join([qx] + [filler] * 5)),
            ]
        elif i <= 7:
            vectors[hr] = _vec([(axis, 1.0)])
            vectors[hd] = _vec([(AUX, 1.0)])
            sections = [
                (hr, " ".join([qx, qy] + [filler] * 4)),
                (hd, " ".join([qx] * 4 + [qy] * 4)),
            ]
        else:
            vectors[hr] = _vec([(axis, 0.8), (AUX, 0.6)])
            vectors[hd] = _vec([(axis, 1.0)])
            vectors[hf] = _vec([(AUX, 1.0)])
            if i <= 9:  # bm25 right: R has the strongest content
                sections = [
                    (hr, " ".join([qx] * 4 + [qy] * 4)),
                    (hd, " ".join([qx] + [filler] * 5)),
                    (hf, " ".join([qx] * 2 + [filler] * 4)),
                ]
            else:  # both wrong: distractor wins content too
                sections = [
                    (hr, " ".join([qx, qy] + [filler] * 4)),
                    (hd, " ".join([qx] * 4 + [qy] * 4)),
                    (hf, " ".join([qx] * 2 + [filler] * 4)),
                ]
        title = f"c{i:02d}"
        fname = f"{title}.txt"
        text = "".join(f"# {h}\n{body}\n" for h, body in sections)
        (docs_dir / fname).write_text(text, encoding="utf-8")
        manifest.append(
            {"path": f"tests/fixtures/hybrid_eval/docs/{fname}", "country": "none",
             "title": title}
        )
        pairs.append((f"{qx} {qy}", f"{title}#1"))

    write_lexicon(HYBRID_DIR / "lexicon.tsv", lexicon_entries)
    (HYBRID_DIR / "stopwords.txt").write_text("# none\n", encoding="utf-8")
    (HYBRID_DIR / "gazetteer.json").write_text("{}\n", encoding="utf-8")
    write_embeddings(HYBRID_DIR / "embeddings.txt", vectors)
    (HYBRID_DIR / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    (HYBRID_DIR / "pairs.tsv").write_text(
        "".join(f"{q}\t{d}\n" for q, d in pairs), encoding="utf-8"
    )

    # verify the advertised accuracy@1 numbers
    os.chdir(ROOT)
    lexicon = load_lexicon(HYBRID_DIR / "lexicon.tsv")
    stops = load_stopwords(HYBRID_DIR / "stopwords.txt")
    emb = load_embeddings(HYBRID_DIR / "embeddings.txt")
    gaz = load_gazetteer(HYBRID_DIR / "gazetteer.json")
    man = parse_manifest(HYBRID_DIR / "manifest.json", set(gaz))
    corpus = build_corpus(man, lexicon, stops, emb)
    assert len(corpus.documents) == 23, len(corpus.documents)
    retriever = Retriever.from_store(corpus, emb, gaz, lexicon, stops)
    eval_pairs = load_pairs(HYBRID_DIR / "pairs.tsv", {d.doc_id for d in corpus.documents})
    acc = {m: evaluate(eval_pairs, m, retriever).accuracy_at_1
           for m in ("bm25", "embedding", "hybrid")}
    assert acc["bm25"] == 0.6, acc
    assert acc["embedding"] == 0.7, acc
    assert acc["hybrid"] == 0.9, acc
    print("hybrid fixture ok: accuracy@1 =", acc)


if __name__ == "__main__":
    gen_thai()
    gen_hybrid()
