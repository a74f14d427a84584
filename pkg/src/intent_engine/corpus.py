"""Datasets of labeled requests: loading, stratified splits, class weights,
and the descriptive statistics reported for each corpus.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DataError
from .text import tokenize


@dataclass
class LabeledExample:
    """One request with its intent label and optional originating bot."""

    text: str
    intent: str
    source_bot: str | None = None


@dataclass
class Dataset:
    """Ordered examples plus a label <-> contiguous class-id bijection."""

    examples: list[LabeledExample]
    label_index: dict[str, int]
    dropped_empty: int = 0

    def __post_init__(self):
        ids = sorted(self.label_index.values())
        if ids != list(range(len(ids))):
            raise DataError("class ids must be contiguous from 0")
        for ex in self.examples:
            if ex.intent not in self.label_index:
                raise DataError(f"intent {ex.intent!r} missing from label_index")

    def __len__(self) -> int:
        return len(self.examples)

    @property
    def n_classes(self) -> int:
        return len(self.label_index)

    @property
    def label_names(self) -> list[str]:
        names = [None] * self.n_classes
        for lab, i in self.label_index.items():
            names[i] = lab
        return names

    def class_ids(self) -> np.ndarray:
        return np.array([self.label_index[ex.intent] for ex in self.examples], dtype=np.int64)

    def class_counts(self, indices=None) -> np.ndarray:
        """Per-class example counts, over a subset of indices if given."""
        ids = self.class_ids()
        if indices is not None:
            ids = ids[np.asarray(indices, dtype=np.int64)]
        return np.bincount(ids, minlength=self.n_classes)

    @classmethod
    def from_pairs(cls, pairs) -> "Dataset":
        """Build from (text, intent) pairs, label ids in first-appearance order."""
        examples = []
        label_index: dict[str, int] = {}
        for text, intent in pairs:
            if intent not in label_index:
                label_index[intent] = len(label_index)
            examples.append(LabeledExample(text=text, intent=intent))
        return cls(examples=examples, label_index=label_index)


def load_dataset(path: str | Path, format: str = "csv",
                 text_field: str = "text", label_field: str = "intent",
                 source_field: str | None = None) -> Dataset:
    """Load a labeled request corpus from CSV (header row) or JSONL.

    Labels are case-sensitive and indexed in first-appearance order. Records
    whose text tokenizes to nothing are dropped and counted in
    ``Dataset.dropped_empty``; a missing field is a hard error naming the line.
    """
    path = Path(path)
    if format == "csv":
        records = _read_csv(path, text_field, label_field, source_field)
    elif format == "jsonl":
        records = _read_jsonl(path, text_field, label_field, source_field)
    else:
        raise ValueError(f"unknown format {format!r}, expected 'csv' or 'jsonl'")

    examples: list[LabeledExample] = []
    label_index: dict[str, int] = {}
    dropped = 0
    for line_no, text, intent, source in records:
        if not intent.strip():
            raise DataError(f"{path.name}:{line_no}: empty {label_field!r} field")
        if not text.strip() or not tokenize(text):
            dropped += 1
            continue
        if intent not in label_index:
            label_index[intent] = len(label_index)
        examples.append(LabeledExample(text=text, intent=intent, source_bot=source))
    if not examples:
        raise DataError("empty dataset")
    return Dataset(examples=examples, label_index=label_index, dropped_empty=dropped)


def _read_csv(path, text_field, label_field, source_field):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise DataError("empty dataset")
        for name in (text_field, label_field):
            if name not in reader.fieldnames:
                raise DataError(f"{Path(path).name}: header lacks field {name!r}")
        for row in reader:
            text = row.get(text_field)
            intent = row.get(label_field)
            if text is None or intent is None:
                raise DataError(f"{Path(path).name}:{reader.line_num}: record lacks "
                                f"{text_field!r} or {label_field!r}")
            source = row.get(source_field) if source_field else None
            yield reader.line_num, text, intent, source


def _read_jsonl(path, text_field, label_field, source_field):
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{Path(path).name}:{line_no}: invalid JSON ({exc})") from exc
            if text_field not in obj or label_field not in obj:
                raise DataError(f"{Path(path).name}:{line_no}: record lacks "
                                f"{text_field!r} or {label_field!r}")
            source = obj.get(source_field) if source_field else None
            yield line_no, str(obj[text_field]), str(obj[label_field]), source


@dataclass
class SplitAssignment:
    """Disjoint train/validation/test index sets over Dataset.examples."""

    train_ids: np.ndarray
    validation_ids: np.ndarray
    test_ids: np.ndarray
    seed: int

    def __post_init__(self):
        self.train_ids = np.asarray(self.train_ids, dtype=np.int64)
        self.validation_ids = np.asarray(self.validation_ids, dtype=np.int64)
        self.test_ids = np.asarray(self.test_ids, dtype=np.int64)

    @property
    def train_pool_ids(self) -> np.ndarray:
        """Train plus validation: the 80% side of the published protocol."""
        return np.sort(np.concatenate([self.train_ids, self.validation_ids]))

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "train_ids": self.train_ids.tolist(),
            "validation_ids": self.validation_ids.tolist(),
            "test_ids": self.test_ids.tolist(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SplitAssignment":
        return cls(
            train_ids=np.array(obj["train_ids"], dtype=np.int64),
            validation_ids=np.array(obj["validation_ids"], dtype=np.int64),
            test_ids=np.array(obj["test_ids"], dtype=np.int64),
            seed=int(obj["seed"]),
        )


def stratified_split(d: Dataset, train_frac: float = 0.8,
                     val_frac_of_train: float = 0.1, seed: int = 42) -> SplitAssignment:
    """Seeded stratified split: floor(n_i * train_frac) per class to the train
    pool, remainder to test, then a per-class fraction of the train pool drawn
    uniformly at random as validation.
    """
    if not 0.0 < train_frac < 1.0:
        raise ValueError("train_frac must be in (0, 1)")
    if not 0.0 <= val_frac_of_train < 1.0:
        raise ValueError("val_frac_of_train must be in [0, 1)")

    rng = np.random.default_rng(seed)
    class_ids = d.class_ids()
    train, val, test = [], [], []
    for label, cid in sorted(d.label_index.items(), key=lambda kv: kv[1]):
        members = np.flatnonzero(class_ids == cid)
        n_i = len(members)
        n_train = math.floor(n_i * train_frac)
        if n_train == 0 or n_train == n_i:
            raise DataError(f"class too small: {label!r} has {n_i} example(s), "
                            f"cannot populate both train and test")
        perm = rng.permutation(members)
        pool, test_part = perm[:n_train], perm[n_train:]
        n_val = math.floor(n_train * val_frac_of_train)
        val.extend(pool[:n_val])
        train.extend(pool[n_val:])
        test.extend(test_part)

    return SplitAssignment(
        train_ids=np.sort(np.array(train, dtype=np.int64)),
        validation_ids=np.sort(np.array(val, dtype=np.int64)),
        test_ids=np.sort(np.array(test, dtype=np.int64)),
        seed=seed,
    )


@dataclass
class ClassWeights:
    """Per-class loss weights w_i = N / (C * n_i) over the training split."""

    weights: np.ndarray

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=np.float64)
        if np.any(~np.isfinite(self.weights)) or np.any(self.weights <= 0):
            raise DataError("class weights must be finite and positive")

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> float:
        return float(self.weights[i])


def weights_from_counts(counts, labels: list[str] | None = None) -> ClassWeights:
    """w_i = N/(C*n_i) from raw per-class training counts."""
    counts = np.asarray(counts, dtype=np.int64)
    n_total = int(counts.sum())
    n_classes = len(counts)
    if labels is None:
        labels = [str(i) for i in range(n_classes)]
    missing = [labels[i] for i in np.flatnonzero(counts == 0)]
    if missing:
        raise DataError(f"class(es) absent from the training split: {missing}")
    return ClassWeights(weights=n_total / (n_classes * counts.astype(np.float64)))


def compute_class_weights(d: Dataset, split: SplitAssignment) -> ClassWeights:
    """Eq.-style class weights from the train split of an assignment."""
    counts = d.class_counts(split.train_ids)
    return weights_from_counts(counts, labels=d.label_names)


@dataclass
class TokenLengthStats:
    """Token-count distribution over the training split."""

    lengths: np.ndarray
    histogram: dict[int, int] = field(init=False)
    mean: float = field(init=False)
    std: float = field(init=False)

    def __post_init__(self):
        self.lengths = np.sort(np.asarray(self.lengths, dtype=np.int64))
        values, counts = np.unique(self.lengths, return_counts=True)
        self.histogram = {int(v): int(c) for v, c in zip(values, counts)}
        self.mean = float(np.mean(self.lengths, dtype=np.float64))
        self.std = float(np.std(self.lengths, dtype=np.float64))

    def percentile(self, p: float) -> int:
        """Nearest-rank percentile: value at rank ceil(p/100 * n)."""
        n = len(self.lengths)
        rank = min(max(math.ceil(p / 100.0 * n), 1), n)
        return int(self.lengths[rank - 1])


def token_length_stats(d: Dataset, split: SplitAssignment, tokenizer=tokenize) -> TokenLengthStats:
    """Distribution of tokens-per-request over the training split only, so
    the padding length never sees test data."""
    if len(split.train_ids) == 0:
        raise DataError("empty training split")
    lengths = [len(tokenizer(d.examples[i].text)) for i in split.train_ids]
    return TokenLengthStats(lengths=np.array(lengths))


@dataclass
class SummaryRow:
    intent: str
    n_train: int
    n_test: int
    words_mean: float
    words_std: float
    tokens_mean: float
    tokens_std: float


@dataclass
class SummaryTable:
    rows: list[SummaryRow]
    total: SummaryRow

    def to_csv(self) -> str:
        out = ["intent,n_train,n_test,words_mean,words_std,tokens_mean,tokens_std"]
        for r in self.rows + [self.total]:
            out.append(f"{_csv_quote(r.intent)},{r.n_train},{r.n_test},"
                       f"{r.words_mean!r},{r.words_std!r},{r.tokens_mean!r},{r.tokens_std!r}")
        return "\n".join(out) + "\n"

    def to_text(self) -> str:
        header = f"{'intent':<24}{'train':>10}{'test':>10}{'words':>14}{'tokens':>14}"
        lines = [header, "-" * len(header)]
        for r in self.rows + [self.total]:
            words = f"{r.words_mean:.1f}±{r.words_std:.1f}"
            tokens = f"{r.tokens_mean:.1f}±{r.tokens_std:.1f}"
            lines.append(f"{r.intent:<24}{r.n_train:>10}{r.n_test:>10}{words:>14}{tokens:>14}")
        return "\n".join(lines) + "\n"


def _csv_quote(value: str) -> str:
    if any(ch in value for ch in
           (",", '"', "\n")):
        return '"' + value.replace('"', '""') + '"'
    return value


def dataset_summary(d: Dataset, split: SplitAssignment, tokenizer=tokenize) -> SummaryTable:
    """Per-intent table of split sizes and word/token statistics plus totals.

    n_train counts the full 80% side (train + validation), matching how the
    published tables report their train columns. Word counts split raw text
    on whitespace; token counts use the tokenizer.
    """
    class_ids = d.class_ids()
    train_counts = d.class_counts(split.train_pool_ids)
    test_counts = d.class_counts(split.test_ids)

    words = np.array([len(ex.text.split()) for ex in d.examples], dtype=np.float64)
    tokens = np.array([len(tokenizer(ex.text)) for ex in d.examples], dtype=np.float64)

    rows = []
    for label, cid in sorted(d.label_index.items(), key=lambda kv: kv[1]):
        mask = class_ids == cid
        rows.append(SummaryRow(
            intent=label,
            n_train=int(train_counts[cid]),
            n_test=int(test_counts[cid]),
            words_mean=float(words[mask].mean()),
            words_std=float(words[mask].std()),
            tokens_mean=float(tokens[mask].mean()),
            tokens_std=float(tokens[mask].std()),
        ))
    total = SummaryRow(
        intent="TOTAL",
        n_train=int(train_counts.sum()),
        n_test=int(test_counts.sum()),
        words_mean=float(words.mean()),
        words_std=float(words.std()),
        tokens_mean=float(tokens.mean()),
        tokens_std=float(tokens.std()),
    )
    return SummaryTable(rows=rows, total=total)
