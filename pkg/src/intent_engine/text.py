"""Text normalization, tokenization, vocabularies, and fixed-length encoding.

Requests are normalized (NFC, lowercase, punctuation stripped), split on
whitespace, mapped to ids through a train-split vocabulary, and padded or
truncated to a fixed length so they can feed the classifiers.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DataError

PAD_TOKEN = "<pad>"
UNK_TOKEN = "<unk>"
PAD_ID = 0
UNK_ID = 1
_N_RESERVED = 2


def normalize(text: str) -> str:
    """NFC-normalize, lowercase, turn punctuation into spaces, collapse runs.

    Diacritics are preserved ("sí" stays "sí"); only Unicode punctuation
    categories (P*) are stripped.
    """
    text = unicodedata.normalize("NFC", text).lower()
    out = []
    for ch in text:
        if unicodedata.category(ch).startswith("P"):
            out.append(" ")
        else:
            out.append(ch)
    return " ".join("".join(out).split())


def tokenize(text: str) -> list[str]:
    """Whitespace tokens of the normalized text; empty input gives []."""
    return normalize(text).split()


@dataclass
class Vocabulary:
    """Token <-> id bijection with reserved PAD (0) and UNK (1) entries.

    Corpus tokens start at id 2, ordered by descending training frequency
    with lexicographic tie-breaks, so a fixed train split always yields an
    identical vocabulary.
    """

    tokens: list[str]
    min_count: int = 1
    _ids: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.tokens) < _N_RESERVED or self.tokens[0] != PAD_TOKEN or self.tokens[1] != UNK_TOKEN:
            raise ValueError("vocabulary must start with the PAD and UNK tokens")
        self._ids = {tok: i for i, tok in enumerate(self.tokens)}
        if len(self._ids) != len(self.tokens):
            raise ValueError("duplicate token in vocabulary")

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self._ids

    def id_of(self, token: str) -> int:
        """Id of a token, UNK id when out of vocabulary."""
        return self._ids.get(token, UNK_ID)

    def token_of(self, idx: int) -> str:
        return self.tokens[idx]

    def save(self, path: str | Path) -> None:
        """One corpus token per line; body line number = id - 2."""
        lines = [
            "# intent-engine vocabulary v1",
            f"# reserved: {PAD_TOKEN}=0 {UNK_TOKEN}=1",
            f"# min_count: {self.min_count}",
        ]
        lines.extend(self.tokens[_N_RESERVED:])
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "Vocabulary":
        min_count = 1
        tokens = [PAD_TOKEN, UNK_TOKEN]
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            if raw.startswith("#"):
                if raw.startswith("# min_count:"):
                    min_count = int(raw.split(":", 1)[1])
                continue
            if raw:
                tokens.append(raw)
        return cls(tokens=tokens, min_count=min_count)


def build_vocabulary(token_sequences, min_count: int = 1) -> Vocabulary:
    """Vocabulary over the train split: tokens with frequency >= min_count.

    Ordering is (-frequency, token) after the two reserved entries.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts = Counter()
    for seq in token_sequences:
        counts.update(seq)
    if not counts:
        raise DataError("cannot build a vocabulary from empty training text")
    kept = sorted(
        (tok for tok, c in counts.items() if c >= min_count),
        key=lambda tok: (-counts[tok], tok),
    )
    return Vocabulary(tokens=[PAD_TOKEN, UNK_TOKEN] + kept, min_count=min_count)


@dataclass
class EncodedSequence:
    """Fixed-length id vector; positions past true_length hold the PAD id."""

    ids: np.ndarray
    true_length: int

    def __post_init__(self):
        self.ids = np.asarray(self.ids, dtype=np.int32)


def encode(tokens: list[str], vocab: Vocabulary, padded_length: int) -> EncodedSequence:
    """Map tokens to ids, truncate the tail past L, right-pad with PAD.

    Encoding is total: unknown tokens become UNK, any input length fits.
    """
    if padded_length < 1:
        raise ValueError("padded_length must be >= 1")
    kept = tokens[:padded_length]
    ids = np.full(padded_length, PAD_ID, dtype=np.int32)
    for i, tok in enumerate(kept):
        ids[i] = vocab.id_of(tok)
    return EncodedSequence(ids=ids, true_length=len(kept))


def decode(seq: EncodedSequence, vocab: Vocabulary) -> list[str]:
    """Tokens for the non-PAD positions (UNK positions come back as UNK)."""
    return [vocab.token_of(int(i)) for i in seq.ids[: seq.true_length]]


def encode_corpus(texts, vocab: Vocabulary, padded_length: int) -> tuple[np.ndarray, np.ndarray]:
    """Encode many texts at once; returns (ids (N, L), true_lengths (N,))."""
    n = len(texts)
    ids = np.full((n, padded_length), PAD_ID, dtype=np.int32)
    lengths = np.zeros(n, dtype=np.int32)
    for row, text in enumerate(texts):
        enc = encode(tokenize(text), vocab, padded_length)
        ids[row] = enc.ids
        lengths[row] = enc.true_length
    return ids, lengths
