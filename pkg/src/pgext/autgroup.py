"""Matrices representing automorphisms of a finite abelian p-group.

For a group of type tau, an integer matrix M (entry (i, j) = coefficient of
generator i in the image of generator j) induces an endomorphism iff
p**max(0, tau_i - tau_j) divides M[i][j]; it is an automorphism iff det(M)
is additionally coprime to p. Entries are stored as canonical residues
modulo p**tau_i, which makes the matrix representative of a map unique.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .abelian import PGroupType, is_prime
from .errors import BoundExceededError, ValidationError
from .exactmat import IntMatrix

__all__ = [
    "DEFAULT_MAX_CANDIDATES",
    "AutMatrix",
    "aut_search_space",
    "is_valid_aut",
    "enumerate_auts",
    "aut_matrices",
    "conjugate_by_p_powers",
]

DEFAULT_MAX_CANDIDATES = 10**6


@dataclass(frozen=True)
class AutMatrix:
    """An automorphism of the p-group of type tau, as an integer matrix
    satisfying the divisibility pattern with det coprime to p.

    Enumeration always produces canonical-residue representatives (row i
    reduced mod p**tau_i, the unique matrix of each map); hand-built
    instances may carry any valid representative, and ``canonical`` reduces
    to the normalized one.
    """

    p: int
    tau: PGroupType
    matrix: IntMatrix

    def __post_init__(self):
        if not is_valid_aut(self.matrix, self.p, self.tau):
            raise ValidationError(
                "invalid_automorphism", "matrix does not satisfy the automorphism conditions"
            )

    @classmethod
    def identity(cls, p: int, tau: PGroupType) -> "AutMatrix":
        return cls(p, tau, IntMatrix.identity(len(tau)))

    def canonical(self) -> "AutMatrix":
        reduced = IntMatrix(
            [
                [x % self.p**ti for x in row]
                for row, ti in zip(self.matrix.data, self.tau.parts)
            ],
            cols=self.matrix.cols,
        )
        return AutMatrix(self.p, self.tau, reduced)


def is_valid_aut(matrix: IntMatrix, p: int, tau: PGroupType) -> bool:
    """True iff ``matrix`` represents an automorphism of the group of type
    tau: the p-power divisibility pattern holds and det is coprime to p.

    >>> is_valid_aut(IntMatrix([[1, 1], [0, 1]]), 2, PGroupType((2, 1)))
    False
    >>> is_valid_aut(IntMatrix([[1, 2], [1, 1]]), 2, PGroupType((2, 1)))
    True
    """
    t = len(tau)
    if matrix.shape != (t, t):
        raise ValidationError(
            "shape_mismatch", f"matrix shape {matrix.shape} does not match type size {t}"
        )
    parts = tau.parts
    for i in range(t):
        for j in range(t):
            if parts[i] > parts[j] and matrix[i, j] % p ** (parts[i] - parts[j]) != 0:
                return False
    return matrix.det() % p != 0


def aut_search_space(p: int, tau: PGroupType) -> int:
    """Number of canonical-residue matrices for (p, tau): p**(t * sum(tau))."""
    return p ** (len(tau) * tau.weight)


@lru_cache(maxsize=None)
def _aut_matrices(p: int, tau: PGroupType, max_candidates: int) -> tuple[AutMatrix, ...]:
    if not is_prime(p):
        raise ValidationError("not_prime", f"{p} is not a prime")
    space = aut_search_space(p, tau)
    if space > max_candidates:
        raise BoundExceededError(
            f"automorphism search space {space} exceeds bound {max_candidates}"
        )
    t = len(tau)
    parts = tau.parts
    # only multiples of the forced p-power appear in each cell, so the
    # divisibility pattern holds by construction
    cells = [
        range(0, p ** parts[i], p ** max(0, parts[i] - parts[j]))
        for i in range(t)
        for j in range(t)
    ]
    found = []
    for flat in itertools.product(*cells):
        m = IntMatrix([flat[i * t : (i + 1) * t] for i in range(t)], cols=t)
        if m.det() % p != 0:
            found.append(AutMatrix(p, tau, m))
    return tuple(found)


def aut_matrices(
    p: int, tau: PGroupType, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> tuple[AutMatrix, ...]:
    """All automorphism matrices for (p, tau), lexicographic by flattened
    entries. Cached; raises BoundExceededError if the candidate space is
    larger than ``max_candidates``."""
    return _aut_matrices(p, tau, max_candidates)


def enumerate_auts(p: int, tau: PGroupType, max_candidates: int = DEFAULT_MAX_CANDIDATES):
    """Stream the automorphism matrices of ``aut_matrices`` one by one."""
    yield from aut_matrices(p, tau, max_candidates)


def conjugate_by_p_powers(aut: AutMatrix) -> IntMatrix:
    """Conjugate by the diagonal p-power matrix of the context type: entry
    (k, j) becomes p**(tau_j - tau_k) * M[k][j]. Integral because the
    divisibility condition supplies the needed p-powers.

    >>> conjugate_by_p_powers(AutMatrix(2, PGroupType((2, 1)), IntMatrix([[1, 0], [2, 1]])))
    IntMatrix([[1, 0], [4, 1]])
    """
    parts = aut.tau.parts
    p = aut.p
    rows = []
    for k, tk in enumerate(parts):
        row = []
        for j, tj in enumerate(parts):
            x = aut.matrix[k, j]
            if tj >= tk:
                row.append(x * p ** (tj - tk))
            else:
                q, r = divmod(x, p ** (tk - tj))
                assert r == 0, "divisibility invariant violated"
                row.append(q)
        rows.append(row)
    return IntMatrix(rows, cols=len(parts))
