"""Evaluation tooling: similarity matrices, PCA, equivalence classes,
per-language distinctiveness and concordance lines."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import PhonovecError
from .features import signature, stack
from .model import SoundVectors
from .wordlist import Wordlist, inventory


def _model(model):
    return model or SoundVectors.default()


def vectorize_tokens(sounds, model):
    """Vectorize tokens, returning ``(ok_tokens, vectors, failures)``."""
    ok, vectors, failures = [], [], {}
    for tok in sounds:
        try:
            vectors.append(model.vector(tok))
        except PhonovecError as exc:
            failures[tok] = str(exc)
        else:
            ok.append(tok)
    return ok, vectors, failures


def _writer(fh):
    return csv.writer(fh, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")


@dataclass(frozen=True)
class SimilarityMatrix:
    labels: tuple[str, ...]
    values: np.ndarray

    def __getitem__(self, pair):
        a, b = pair
        return float(self.values[self.labels.index(a), self.labels.index(b)])

    def write_csv(self, fh):
        w = _writer(fh)
        w.writerow(["", *self.labels])
        for label, row in zip(self.labels, self.values):
            w.writerow([label, *(float(x) for x in row)])

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()


def similarity_matrix(sounds, model: SoundVectors | None = None) -> SimilarityMatrix:
    """Pairwise cosine similarities; label order follows the input."""
    model = _model(model)
    labels = tuple(sounds)
    vectors = [model.vector(tok) for tok in labels]
    return SimilarityMatrix(labels, kernels.cosine_matrix(stack(vectors)))


@dataclass
class EquivalenceClasses:
    classes: dict[str, list[str]]
    failures: dict[str, str] = field(default_factory=dict)

    def __len__(self):
        return len(self.classes)

    def groups(self) -> list[list[str]]:
        return list(self.classes.values())

    def class_of(self, token: str) -> list[str]:
        for members in self.classes.values():
            if token in members:
                return members
        raise KeyError(token)

    def write_csv(self, fh):
        w = _writer(fh)
        w.writerow(["Class", "Size", "Members", "Signature"])
        for i, (sig, members) in enumerate(self.classes.items(), start=1):
            w.writerow([i, len(members), " ".join(members), sig])


def equivalence_classes(sounds, model: SoundVectors | None = None) -> EquivalenceClasses:
    """Group tokens sharing one feature vector; classes ordered by first member."""
    model = _model(model)
    unique = list(dict.fromkeys(sounds))
    ok, vectors, failures = vectorize_tokens(unique, model)
    classes: dict[str, list[str]] = {}
    for tok, vec in zip(ok, vectors):
        classes.setdefault(signature(vec), []).append(tok)
    return EquivalenceClasses(classes, failures)


@dataclass(frozen=True)
class LanguageDistinctiveness:
    language: str
    inventory_size: int
    unique_vectors: int
    unparsed: tuple[str, ...] = ()

    @property
    def confused(self) -> int:
        return self.inventory_size - self.unique_vectors


@dataclass
class DistinctivenessReport:
    rows: list[LanguageDistinctiveness]

    def row(self, language: str) -> LanguageDistinctiveness:
        for r in self.rows:
            if r.language == language:
                return r
        raise KeyError(language)

    def cumulative(self, max_n: int = 4) -> list[tuple[int, int, float]]:
        """``(n, varieties with at most n confused sounds, portion)`` for n = 0..max_n."""
        total = len(self.rows)
        out = []
        for n in range(max_n + 1):
            count = sum(1 for r in self.rows if r.confused <= n)
            out.append((n, count, count / total if total else 0.0))
        return out

    def write_csv(self, fh, max_n: int = 4):
        w = _writer(fh)
        w.writerow(["Language_ID", "Inventory", "Unique_Vectors", "Confused", "Unparsed"])
        for r in self.rows:
            w.writerow([r.language, r.inventory_size, r.unique_vectors, r.confused, " ".join(r.unparsed)])
        fh.write("\n")
        w.writerow(["Confused", "Varieties", "Portion"])
        for n, count, portion in self.cumulative(max_n):
            w.writerow([str(n) if n == 0 else f"<={n}", count, round(portion, 3)])


def distinctiveness(w: Wordlist, model: SoundVectors | None = None) -> DistinctivenessReport:
    """Confused sounds per language: inventory size minus distinct vectors.

    Tokens that cannot be parsed are excluded from the inventory and listed
    in ``unparsed``.
    """
    model = _model(model)
    rows = []
    for language in w.languages:
        tokens = sorted(inventory(w, language))
        ok, vectors, failures = vectorize_tokens(tokens, model)
        unique = len({signature(v) for v in vectors})
        rows.append(LanguageDistinctiveness(language, len(ok), unique, tuple(sorted(failures))))
    return DistinctivenessReport(rows)


def confused_groups(w: Wordlist, language: str, model: SoundVectors | None = None) -> list[list[str]]:
    """Sets of inventory sounds that share a feature vector (size > 1 only)."""
    classes = equivalence_classes(sorted(inventory(w, language)), model)
    return [members for members in classes.groups() if len(members) > 1]


@dataclass(frozen=True)
class ConcordanceLine:
    form_id: str
    left: tuple[str, ...]
    target: str
    right: tuple[str, ...]
    position: int = 0


def concordance(w: Wordlist, language: str, targets, width: int = 3) -> list[ConcordanceLine]:
    """Keyword-in-context lines for every occurrence of a target token."""
    if width < 0:
        raise ValueError("width must be non-negative")
    targets = set(targets)
    lines = []
    for form in w.forms_of(language):
        segs = form.segments
        for i, tok in enumerate(segs):
            if tok in targets:
                lines.append(ConcordanceLine(
                    form.id,
                    segs[max(0, i - width):i],
                    tok,
                    segs[i + 1:i + 1 + width],
                    i,
                ))
    return lines


def format_concordance(lines: list[ConcordanceLine]) -> str:
    """Render lines with the targets aligned in one column."""
    if not lines:
        return ""
    lefts = [" ".join(line.left) for line in lines]
    targets = [line.target for line in lines]
    ids = [line.form_id for line in lines]
    lw = max(len(s) for s in lefts)
    tw = max(len(s) for s in targets)
    iw = max(len(s) for s in ids)
    out = []
    for fid, left, line in zip(ids, lefts, lines):
        right = " ".join(line.right)
        out.append(f"{fid:<{iw}}  {left:>{lw}}  {line.target:<{tw}}  {right}".rstrip())
    return "\n".join(out) + "\n"


def write_concordance_csv(lines, fh):
    w = _writer(fh)
    w.writerow(["ID", "Left", "Target", "Right"])
    for line in lines:
        w.writerow([line.form_id, " ".join(line.left), line.target, " ".join(line.right)])


@dataclass(frozen=True)
class PCAResult:
    labels: tuple[str, ...]
    coordinates: np.ndarray  # (n, k)
    components: np.ndarray   # (k, d), orthonormal rows
    eigenvalues: np.ndarray  # all d eigenvalues, descending
    mean: np.ndarray

    @property
    def k(self):
        return self.components.shape[0]

    def explained_variance_ratio(self) -> np.ndarray:
        total = self.eigenvalues.sum()
        return self.eigenvalues[: self.k] / total

    def __iter__(self):
        return iter(zip(self.labels, (tuple(float(x) for x in row) for row in self.coordinates)))

    def write_csv(self, fh):
        w = _writer(fh)
        w.writerow(["Token", *(f"PC{i}" for i in range(1, self.k + 1))])
        for label, coords in self:
            w.writerow([label, *coords])


def pca(matrix, k: int, labels=None, tol: float = 1e-12) -> PCAResult:
    """Project the rows of ``matrix`` onto the top ``k`` principal components.

    The covariance eigenproblem is solved with cyclic Jacobi rotations.  Each
    component is signed so that its largest-magnitude loading is positive.
    """
    x = np.asarray(matrix, dtype=np.float64)
    n, d = x.shape
    if n < 2:
        raise ValueError("PCA needs at least two observations")
    if not 1 <= k <= min(n - 1, d):
        raise ValueError(f"k must lie between 1 and {min(n - 1, d)}, got {k}")
    mean = x.mean(axis=0)
    centered = x - mean
    if not centered.any():
        raise ValueError("PCA input is degenerate: all observations are identical")
    cov = centered.T @ centered / (n - 1)
    cov = (cov + cov.T) / 2
    eigvals, eigvecs = kernels.jacobi_eigh(cov, tol=tol)
    order = np.argsort(-eigvals, kind="stable")
    eigvals = eigvals[order]
    comps = eigvecs[:, order[:k]].T.copy()
    for row in comps:
        if row[np.argmax(np.abs(row))] < 0:
            row *= -1
    coords = centered @ comps.T
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
    return PCAResult(labels, coords, comps, eigvals, mean)


def pca_project(sounds, k: int = 2, model: SoundVectors | None = None) -> PCAResult:
    model = _model(model)
    labels = tuple(sounds)
    vectors = [model.vector(tok) for tok in labels]
    return pca(stack(vectors), k, labels)


def write_vectors_csv(tokens, vectors, fh):
    """One row per token: the token followed by its ternary values."""
    w = _writer(fh)
    if vectors:
        w.writerow(["Token", *vectors[0].inventory.features])
    for tok, vec in zip(tokens, vectors):
        w.writerow([tok, *vec.values])
