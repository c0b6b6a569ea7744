"""
Linear codes over GF(q^2) held in canonical reduced row-echelon form.

Two LinearCode values describe the same code exactly when their generator
matrices are identical, which makes equality, duality and containment checks
plain matrix computations.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import galois
import numpy as np

from agq.field import FieldCtx

log = logging.getLogger(__name__)


class CodeParameterError(ValueError):
    """Raised for mismatched lengths/fields or parameters outside a constructible range."""


def _to_ints(rows: galois.FieldArray | np.ndarray | Sequence[Sequence[int]], n: int) -> np.ndarray:
    if isinstance(rows, np.ndarray):
        matrix = rows.view(np.ndarray).astype(np.int64)
    else:
        matrix = np.array([np.asarray(r).view(np.ndarray) for r in rows], dtype=np.int64)
    if matrix.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    if matrix.ndim != 2 or matrix.shape[1] != n:
        raise CodeParameterError(f"rows must have length {n}, got shape {matrix.shape}")
    return matrix


def row_reduce(field: FieldCtx, matrix: galois.FieldArray | np.ndarray, n: int) -> galois.FieldArray:
    """Canonical RREF of ``matrix`` with zero rows dropped; shape (rank, n)."""
    gf = field.gf
    ints = _to_ints(matrix, n)
    if ints.shape[0] == 0:
        return gf.Zeros((0, n))
    reduced = gf(ints).row_reduce()
    nonzero = np.any(reduced.view(np.ndarray) != 0, axis=1)
    return reduced[nonzero]


def pivot_columns(gen: galois.FieldArray) -> list[int]:
    """Pivot column of each row of a matrix already in reduced row-echelon form."""
    return [int(np.argmax(row != 0)) for row in gen.view(np.ndarray)]


def weights(words: galois.FieldArray | np.ndarray) -> np.ndarray:
    """Hamming weight of every row."""
    return np.count_nonzero(np.asarray(words) != 0, axis=-1)


def weight(word: galois.FieldArray | np.ndarray) -> int:
    return int(np.count_nonzero(np.asarray(word)))


@dataclass(frozen=True, eq=False)
class LinearCode:
    """
    An [n, k] linear code over GF(q^2).

    ``gen`` is the k×n generator in reduced row-echelon form: pivot columns
    strictly increase, pivots are 1 and pivot columns are zero elsewhere.
    Construct through :meth:`from_rows` so the form is guaranteed.
    """

    field: FieldCtx
    n: int
    gen: galois.FieldArray

    @classmethod
    def from_rows(
        cls,
        field: FieldCtx,
        n: int,
        rows: galois.FieldArray | np.ndarray | Sequence[Sequence[int]],
    ) -> "LinearCode":
        """The row space of ``rows`` (zero or dependent rows allowed)."""
        return cls(field=field, n=n, gen=row_reduce(field, _to_ints(rows, n), n))

    @classmethod
    def full_space(cls, field: FieldCtx, n: int) -> "LinearCode":
        return cls(field=field, n=n, gen=field.gf.Identity(n))

    @classmethod
    def zero_code(cls, field: FieldCtx, n: int) -> "LinearCode":
        return cls(field=field, n=n, gen=field.gf.Zeros((0, n)))

    @property
    def k(self) -> int:
        return int(self.gen.shape[0])

    @property
    def pivots(self) -> list[int]:
        return pivot_columns(self.gen)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.q2}))"

    def _require_compatible(self, other: "LinearCode") -> None:
        if other.field is not self.field or other.n != self.n:
            raise CodeParameterError(f"{self!r} and {other!r} are not over the same field and length")

    # ------------------------------------------------------------------
    # Duals and Frobenius images
    # ------------------------------------------------------------------
    def dual(self) -> "LinearCode":
        """
        Euclidean dual, read off the echelon form.

        For every free column f the vector with 1 at f and -gen[i, f] at pivot i is
        orthogonal to every row; these n - k vectors are independent.
        """
        gf = self.field.gf
        pivots = self.pivots
        pivot_set = set(pivots)
        free = [j for j in range(self.n) if j not in pivot_set]
        if not free:
            return LinearCode.zero_code(self.field, self.n)

        h = gf.Zeros((len(free), self.n))
        h[:, free] = gf.Identity(len(free))
        if pivots:
            h[:, pivots] = -(self.gen[:, free].T)
        return LinearCode(field=self.field, n=self.n, gen=row_reduce(self.field, h, self.n))

    def frobenius_code(self) -> "LinearCode":
        """C^q: the entry-wise q-th powers of all codewords."""
        if self.k == 0:
            return self
        return LinearCode(
            field=self.field,
            n=self.n,
            gen=row_reduce(self.field, self.gen**self.field.q, self.n),
        )

    def hermitian_dual(self) -> "LinearCode":
        """C^{⊥_H} = {v : sum v_i c_i^q = 0 for all c in C} = (C^q)^⊥."""
        return self.frobenius_code().dual()

    # ------------------------------------------------------------------
    # Orthogonality
    # ------------------------------------------------------------------
    def is_euclidean_self_orthogonal(self) -> bool:
        if self.k == 0:
            return True
        gram = self.gen @ self.gen.T
        return not gram.view(np.ndarray).any()

    def is_hermitian_self_orthogonal(self) -> bool:
        """gen · (gen^q)^T = 0, the Hermitian Gram test."""
        if self.k == 0:
            return True
        gram = self.gen @ (self.gen**self.field.q).T
        return not gram.view(np.ndarray).any()

    # ------------------------------------------------------------------
    # Containment
    # ------------------------------------------------------------------
    def issubset(self, other: "LinearCode") -> bool:
        """Row-space containment: each row of self reduces to zero against other."""
        self._require_compatible(other)
        if self.k == 0:
            return True
        if other.k == 0:
            return False
        residual = self.gen - self.gen[:, other.pivots] @ other.gen
        return not residual.view(np.ndarray).any()

    def contains(self, word: galois.FieldArray | np.ndarray | Sequence[int]) -> bool:
        return LinearCode.from_rows(self.field, self.n, [np.asarray(word)]).issubset(self)

    def __le__(self, other: "LinearCode") -> bool:
        return self.issubset(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            other.field is self.field
            and other.n == self.n
            and np.array_equal(self.gen.view(np.ndarray), other.gen.view(np.ndarray))
        )

    __hash__ = None  # type: ignore[assignment]

    # ------------------------------------------------------------------
    # Codewords
    # ------------------------------------------------------------------
    def encode(self, messages: galois.FieldArray | np.ndarray) -> galois.FieldArray:
        """Codewords for a (count, k) array of messages."""
        return self.field.gf(np.asarray(messages)) @ self.gen

    def random_codewords(self, count: int, seed: int | None = None) -> galois.FieldArray:
        rng = np.random.default_rng(seed)
        messages = rng.integers(0, self.field.q2, size=(count, self.k))
        if self.k == 0:
            return self.field.gf.Zeros((count, self.n))
        return self.encode(messages)


def equal(c1: LinearCode, c2: LinearCode) -> bool:
    c1._require_compatible(c2)
    return c1 == c2


def subset(c1: LinearCode, c2: LinearCode) -> bool:
    return c1.issubset(c2)
