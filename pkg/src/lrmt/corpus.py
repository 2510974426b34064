"""Sentence corpus ingestion, validation, splitting, and pairing.

Canonical on-disk formats:
  - monolingual: UTF-8 text, LF line endings, one sentence per line
  - parallel: UTF-8 TSV, ``source<TAB>target``, no header

All corpus values are immutable after construction and safe for concurrent
reads.
"""

from __future__ import annotations

import bisect
import json
import os
import unicodedata
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    AlignmentError,
    ConfigError,
    DecodeError,
    EmptyCorpusError,
    FormatError,
    SizeError,
)
from .rng import make_rng, permutation

DEFAULT_DELIMITERS = frozenset({".", "?", "!", "।", "॥"})
DEFAULT_MIN_SCRIPT_RATIO = 0.8


@dataclass(frozen=True)
class SentenceRecord:
    """One sentence plus its 0-based ordinal position in its source."""

    text: str
    index: int

    def __post_init__(self):
        if not self.text.strip():
            raise ConfigError("sentence text must be non-empty after trimming")
        if "\n" in self.text or "\r" in self.text:
            raise ConfigError("sentence text must not contain newline characters")
        if self.index < 0:
            raise ConfigError("sentence index must be non-negative")


@dataclass(frozen=True)
class MonolingualCorpus:
    """Ordered sentences in one language; indices strictly increasing."""

    lang_tag: str
    sentences: tuple[SentenceRecord, ...]
    deduped: bool = False

    def __post_init__(self):
        prev = -1
        for rec in self.sentences:
            if rec.index <= prev:
                raise ConfigError("corpus indices must be strictly increasing")
            prev = rec.index
        if self.deduped:
            texts = [rec.text for rec in self.sentences]
            if len(set(texts)) != len(texts):
                raise ConfigError("deduped corpus contains duplicate texts")

    def __len__(self) -> int:
        return len(self.sentences)

    def texts(self) -> list[str]:
        return [rec.text for rec in self.sentences]


@dataclass(frozen=True)
class ParallelCorpus:
    """Positionally aligned sentence pairs between two languages."""

    src_lang: str
    tgt_lang: str
    pairs: tuple[tuple[SentenceRecord, SentenceRecord], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def src_texts(self) -> list[str]:
        return [src.text for src, _ in self.pairs]

    def tgt_texts(self) -> list[str]:
        return [tgt.text for _, tgt in self.pairs]

    def src_side(self) -> MonolingualCorpus:
        return MonolingualCorpus(
            self.src_lang, tuple(SentenceRecord(s.text, i) for i, (s, _) in enumerate(self.pairs))
        )

    def tgt_side(self) -> MonolingualCorpus:
        return MonolingualCorpus(
            self.tgt_lang, tuple(SentenceRecord(t.text, i) for i, (_, t) in enumerate(self.pairs))
        )


@dataclass(frozen=True)
class ScriptProfile:
    """Per-block letter counts for one sentence."""

    counts: dict[str, int]
    dominant_block: str
    dominant_ratio: float

    def ratios(self) -> dict[str, float]:
        total = sum(self.counts.values())
        if total == 0:
            return {}
        return {block: n / total for block, n in self.counts.items()}


@dataclass(frozen=True)
class ScriptValidationReport:
    """Outcome of checking a corpus against an expected script block."""

    expected_block: str
    min_ratio: float
    flagged: tuple[tuple[int, str], ...]

    @property
    def ok(self) -> bool:
        return not self.flagged

    def to_json(self) -> str:
        return json.dumps(
            {
                "expected_block": self.expected_block,
                "min_ratio": self.min_ratio,
                "ok": self.ok,
                "flagged": [{"index": i, "reason": r} for i, r in self.flagged],
            },
            sort_keys=True,
        )


def ingest_lines(path: str | Path, lang_tag: str, dedup: bool = False) -> MonolingualCorpus:
    """Read a one-sentence-per-line UTF-8 file into a corpus.

    Empty (after trimming) lines are dropped; record indices keep the
    original line numbers. With ``dedup``, later repeats of a text are
    dropped and only the first occurrence kept.
    """
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(str(path), exc.start) from exc

    records = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.split("\n")):
        stripped = line.rstrip("\r").strip()
        if not stripped:
            continue
        if dedup:
            if stripped in seen:
                continue
            seen.add(stripped)
        records.append(SentenceRecord(stripped, lineno))
    if not records:
        raise EmptyCorpusError(f"{path}: no sentences after trimming")
    return MonolingualCorpus(lang_tag, tuple(records), deduped=dedup)


def segment_text(raw: str, delimiters: frozenset[str] | set[str] = DEFAULT_DELIMITERS) -> list[SentenceRecord]:
    """Split running text into sentences at delimiter codepoints.

    The delimiter stays attached to the preceding sentence. Segments that
    are empty after trimming (including bare delimiter runs) are dropped.
    """
    if not delimiters:
        raise ConfigError("segment_text needs a non-empty delimiter set")
    records: list[SentenceRecord] = []
    buf: list[str] = []

    def flush(delim: str = "") -> None:
        body = "".join(buf).strip()
        buf.clear()
        if body:
            # Interior newlines from the raw text must not survive into records.
            body = " ".join(body.split())
            records.append(SentenceRecord(body + delim, len(records)))

    for ch in raw:
        if ch in delimiters:
            flush(ch)
        else:
            buf.append(ch)
    flush()
    return records


def make_split(corpus, dev_n: int, test_n: int, shuffle_seed: int | None = None):
    """Carve disjoint dev/test subsets off the front of a corpus.

    Without a seed the split is contiguous: dev takes the first ``dev_n``
    items, test the next ``test_n``. With a seed, a seeded permutation
    selects the items instead; the selected items are then re-ordered by
    their original position so the output stays index-sorted.
    """
    n = len(corpus)
    if dev_n < 0 or test_n < 0:
        raise ConfigError("split sizes must be non-negative")
    if dev_n + test_n > n:
        raise SizeError(f"dev_n + test_n = {dev_n + test_n} exceeds corpus size {n}")

    order = list(range(n))
    if shuffle_seed is not None:
        order = permutation(make_rng(shuffle_seed, "split"), n)
    dev_idx = sorted(order[:dev_n])
    test_idx = sorted(order[dev_n : dev_n + test_n])

    if isinstance(corpus, MonolingualCorpus):
        def take(idx):
            return MonolingualCorpus(corpus.lang_tag, tuple(corpus.sentences[i] for i in idx))
    elif isinstance(corpus, ParallelCorpus):
        def take(idx):
            return ParallelCorpus(corpus.src_lang, corpus.tgt_lang, tuple(corpus.pairs[i] for i in idx))
    else:
        raise ConfigError(f"cannot split object of type {type(corpus).__name__}")
    return take(dev_idx), take(test_idx)


def pair(src: MonolingualCorpus, tgt: MonolingualCorpus) -> ParallelCorpus:
    """Positionally align two equal-length monolingual corpora."""
    if len(src) != len(tgt):
        raise AlignmentError(len(src), len(tgt))
    return ParallelCorpus(src.lang_tag, tgt.lang_tag, tuple(zip(src.sentences, tgt.sentences)))


# Unicode block ranges for letter classification, (start, end, name), sorted.
# Covers the scripts this tool is expected to meet; anything else falls back
# to "Other". Basic Latin letters report as "Latin" rather than the formal
# block name.
_BLOCKS: list[tuple[int, int, str]] = [
    (0x0000, 0x007F, "Latin"),
    (0x0080, 0x00FF, "Latin-1 Supplement"),
    (0x0100, 0x017F, "Latin Extended-A"),
    (0x0180, 0x024F, "Latin Extended-B"),
    (0x0250, 0x02AF, "IPA Extensions"),
    (0x0370, 0x03FF, "Greek and Coptic"),
    (0x0400, 0x04FF, "Cyrillic"),
    (0x0500, 0x052F, "Cyrillic Supplement"),
    (0x0530, 0x058F, "Armenian"),
    (0x0590, 0x05FF, "Hebrew"),
    (0x0600, 0x06FF, "Arabic"),
    (0x0700, 0x074F, "Syriac"),
    (0x0750, 0x077F, "Arabic Supplement"),
    (0x0780, 0x07BF, "Thaana"),
    (0x0900, 0x097F, "Devanagari"),
    (0x0980, 0x09FF, "Bengali"),
    (0x0A00, 0x0A7F, "Gurmukhi"),
    (0x0A80, 0x0AFF, "Gujarati"),
    (0x0B00, 0x0B7F, "Oriya"),
    (0x0B80, 0x0BFF, "Tamil"),
    (0x0C00, 0x0C7F, "Telugu"),
    (0x0C80, 0x0CFF, "Kannada"),
    (0x0D00, 0x0D7F, "Malayalam"),
    (0x0D80, 0x0DFF, "Sinhala"),
    (0x0E00, 0x0E7F, "Thai"),
    (0x0E80, 0x0EFF, "Lao"),
    (0x0F00, 0x0FFF, "Tibetan"),
    (0x1000, 0x109F, "Myanmar"),
    (0x10A0, 0x10FF, "Georgian"),
    (0x1100, 0x11FF, "Hangul Jamo"),
    (0x1200, 0x137F, "Ethiopic"),
    (0x13A0, 0x13FF, "Cherokee"),
    (0x1780, 0x17FF, "Khmer"),
    (0x1E00, 0x1EFF, "Latin Extended Additional"),
    (0x1F00, 0x1FFF, "Greek Extended"),
    (0x3040, 0x309F, "Hiragana"),
    (0x30A0, 0x30FF, "Katakana"),
    (0x4E00, 0x9FFF, "CJK Unified Ideographs"),
    (0xA980, 0xA9DF, "Javanese"),
    (0xAC00, 0xD7AF, "Hangul Syllables"),
]
_BLOCK_STARTS = [start for start, _, _ in _BLOCKS]


def _block_name(codepoint: int) -> str:
    i = bisect.bisect_right(_BLOCK_STARTS, codepoint) - 1
    if i >= 0:
        start, end, name = _BLOCKS[i]
        if codepoint <= end:
            return name
    return "Other"


def script_profile(record: SentenceRecord) -> ScriptProfile:
    """Count letter codepoints per script block and name the dominant one.

    Only letter-category codepoints count. Ties on the top ratio break to
    the lexicographically smallest block name. A sentence with no letters
    yields an empty dominant block and ratio 0.
    """
    counts: dict[str, int] = {}
    for ch in record.text:
        if unicodedata.category(ch).startswith("L"):
            block = _block_name(ord(ch))
            counts[block] = counts.get(block, 0) + 1
    total = sum(counts.values())
    if total == 0:
        return ScriptProfile({}, "", 0.0)
    dominant = min(counts, key=lambda b: (-counts[b], b))
    return ScriptProfile(counts, dominant, counts[dominant] / total)


def validate_corpus_script(
    corpus: MonolingualCorpus,
    expected_block: str,
    min_ratio: float = DEFAULT_MIN_SCRIPT_RATIO,
) -> ScriptValidationReport:
    """Flag sentences whose dominant script block is off-expectation."""
    if not 0.0 <= min_ratio <= 1.0:
        raise ConfigError("min_ratio must lie in [0, 1]")
    flagged: list[tuple[int, str]] = []
    for rec in corpus.sentences:
        profile = script_profile(rec)
        if profile.dominant_block != expected_block:
            flagged.append(
                (rec.index, f"dominant block {profile.dominant_block or '(none)'} != {expected_block}")
            )
        elif profile.dominant_ratio < min_ratio:
            flagged.append(
                (rec.index, f"dominant ratio {profile.dominant_ratio:.3f} < {min_ratio:.3f}")
            )
    return ScriptValidationReport(expected_block, min_ratio, tuple(flagged))


def write_text_atomic(path: str | Path, content: str) -> None:
    """Write via a temp file plus rename so readers never see partials."""
    path = Path(path)
    tmp = path.with_name(path.name + f".tmp.{os.getpid()}")
    tmp.write_text(content, encoding="utf-8")
    os.replace(tmp, path)


def write_monolingual(corpus: MonolingualCorpus, path: str | Path) -> None:
    write_text_atomic(path, "".join(rec.text + "\n" for rec in corpus.sentences))


def write_parallel(corpus: ParallelCorpus, path: str | Path) -> None:
    lines = []
    for src, tgt in corpus.pairs:
        if "\t" in src.text or "\t" in tgt.text:
            raise FormatError("parallel sentences must not contain tab characters")
        lines.append(f"{src.text}\t{tgt.text}\n")
    write_text_atomic(path, "".join(lines))


def read_parallel(path: str | Path, src_lang: str, tgt_lang: str) -> ParallelCorpus:
    """Read a canonical two-column TSV into a parallel corpus."""
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(str(path), exc.start) from exc

    pairs = []
    for lineno, line in enumerate(text.split("\n")):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise FormatError(f"{path}:{lineno + 1}: expected exactly one tab, found {len(cols) - 1}")
        src_text, tgt_text = cols[0].strip(), cols[1].strip()
        if not src_text or not tgt_text:
            raise FormatError(f"{path}:{lineno + 1}: empty side in pair")
        pairs.append((SentenceRecord(src_text, lineno), SentenceRecord(tgt_text, lineno)))
    if not pairs:
        raise EmptyCorpusError(f"{path}: no pairs")
    return ParallelCorpus(src_lang, tgt_lang, tuple(pairs))


def retag_monolingual(corpus: MonolingualCorpus, lang_tag: str) -> MonolingualCorpus:
    """Same sentences under a different language tag."""
    return MonolingualCorpus(lang_tag, corpus.sentences, deduped=corpus.deduped)


def retag_parallel(corpus: ParallelCorpus, src_lang: str, tgt_lang: str) -> ParallelCorpus:
    """Same pairs under different language tags."""
    return ParallelCorpus(src_lang, tgt_lang, corpus.pairs)


def swap_parallel(corpus: ParallelCorpus) -> ParallelCorpus:
    """Exchange source and target sides."""
    return ParallelCorpus(corpus.tgt_lang, corpus.src_lang, tuple((t, s) for s, t in corpus.pairs))
