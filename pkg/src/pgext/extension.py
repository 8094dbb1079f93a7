"""Extension data for abelian p-groups and the block presentation matrix.

An extension of a quotient of type mu by a subgroup of type lambda is
recorded as (p, lambda, mu, A): row j of the m x l coefficient matrix A
expresses p**mu_j times the j-th lift in terms of the subgroup generators.
Entry (j, i) only matters modulo p**min(lambda_i, mu_j); ``normalize``
reduces to those canonical residues. Stacking the subgroup relations on top
of the lift relations yields a square presentation matrix for the middle
group, whose invariant factors give its isomorphism type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .abelian import PGroupType, is_prime
from .errors import ValidationError
from .exactmat import IntMatrix, p_valuation, snf

__all__ = [
    "ExtensionData",
    "modulus_matrix",
    "normalize",
    "presentation_matrix",
    "middle_type",
    "change_lift",
    "validate",
    "iter_normalized_extensions",
]


@dataclass(frozen=True)
class ExtensionData:
    """An extension datum (p, lam, mu, A) with A of shape len(mu) x len(lam)."""

    p: int
    lam: PGroupType
    mu: PGroupType
    A: IntMatrix
    normalized: bool = False

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValidationError("not_prime", f"{self.p} is not a prime")
        if self.A.shape != (len(self.mu), len(self.lam)):
            raise ValidationError(
                "shape_mismatch",
                f"A has shape {self.A.shape}, expected {(len(self.mu), len(self.lam))}",
            )

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "A": self.A.to_lists(),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ExtensionData":
        if not isinstance(obj, dict):
            raise ValidationError("bad_matrix", "extension data must be a JSON object")
        try:
            p = obj["p"]
            lam = obj["lambda"]
            mu = obj["mu"]
            a = obj["A"]
        except KeyError as exc:
            raise ValidationError("bad_matrix", f"missing extension field {exc}") from None
        if not isinstance(p, int):
            raise ValidationError("not_prime", f"p must be an integer, got {p!r}")
        mu_t = PGroupType(tuple(mu))
        return cls(
            p=p,
            lam=PGroupType(tuple(lam)),
            mu=mu_t,
            A=IntMatrix(a, cols=None if a else 0) if len(mu_t) else IntMatrix([], cols=0),
        )


def validate(ext: ExtensionData) -> None:
    """Re-check the ExtensionData contract; raises ValidationError with a
    distinct code (not_prime / bad_partition / shape_mismatch) on failure.
    """
    if not is_prime(ext.p):
        raise ValidationError("not_prime", f"{ext.p} is not a prime")
    PGroupType(ext.lam.parts)
    PGroupType(ext.mu.parts)
    if ext.A.shape != (len(ext.mu), len(ext.lam)):
        raise ValidationError(
            "shape_mismatch",
            f"A has shape {ext.A.shape}, expected {(len(ext.mu), len(ext.lam))}",
        )


def modulus_matrix(p: int, lam: PGroupType, mu: PGroupType) -> IntMatrix:
    """The m x l matrix of moduli: entry (j, i) is p**min(lam_i, mu_j)."""
    return IntMatrix(
        [[p ** min(li, mj) for li in lam.parts] for mj in mu.parts],
        cols=len(lam),
    )


def normalize(ext: ExtensionData) -> ExtensionData:
    """Reduce every coefficient into its canonical residue range
    [0, p**min(lam_i, mu_j)). Idempotent."""
    validate(ext)
    mods = modulus_matrix(ext.p, ext.lam, ext.mu)
    reduced = IntMatrix(
        [[a % m for a, m in zip(ra, rm)] for ra, rm in zip(ext.A.data, mods.data)],
        cols=ext.A.cols,
    )
    return replace(ext, A=reduced, normalized=True)


def presentation_matrix(ext: ExtensionData) -> IntMatrix:
    """The (l+m) x (l+m) relation matrix of the middle group: subgroup
    relations diag(p**lam_i) on top, lift relations (A | diag(p**mu_j))
    below. Its determinant is p**(|lam| + |mu|)."""
    p = ext.p
    l = len(ext.lam)
    m = len(ext.mu)
    rows = []
    for i, li in enumerate(ext.lam.parts):
        rows.append([p**li if k == i else 0 for k in range(l + m)])
    for j, mj in enumerate(ext.mu.parts):
        rows.append(list(ext.A.row(j)) + [p**mj if k == j else 0 for k in range(m)])
    return IntMatrix(rows, cols=l + m)


def middle_type(ext: ExtensionData) -> PGroupType:
    """Isomorphism type of the middle group: p-exponents of the nontrivial
    invariant factors of the presentation matrix, sorted decreasing."""
    if len(ext.lam) + len(ext.mu) == 0:
        return PGroupType(())
    res = snf(presentation_matrix(ext))
    exps = []
    for dk in res.diagonal():
        assert dk != 0, "presentation matrix of a finite group has no zero invariant factor"
        if dk == 1:
            continue
        v = p_valuation(dk, ext.p)
        assert ext.p**v == dk, f"invariant factor {dk} is not a power of {ext.p}"
        exps.append(v)
    return PGroupType(tuple(sorted(exps, reverse=True)))


def change_lift(ext: ExtensionData, shift: IntMatrix) -> ExtensionData:
    """Re-choose the lifts: shifting lift j by sum_i shift[j][i] * y_i adds
    p**mu_j * shift[j] to row j of A. Normalization is unaffected."""
    if shift.shape != ext.A.shape:
        raise ValidationError(
            "shape_mismatch", f"shift has shape {shift.shape}, expected {ext.A.shape}"
        )
    p = ext.p
    rows = [
        [a + p**mj * c for a, c in zip(ra, rc)]
        for mj, ra, rc in zip(ext.mu.parts, ext.A.data, shift.data)
    ]
    return replace(ext, A=IntMatrix(rows, cols=ext.A.cols), normalized=False)


def iter_normalized_extensions(p: int, lam: PGroupType, mu: PGroupType):
    """All normalized extension data for (p, lam, mu), in lexicographic order
    of the flattened coefficient matrix."""
    mods = modulus_matrix(p, lam, mu)
    l = len(lam)
    for flat in itertools.product(*(range(m) for m in mods.flatten())):
        a = IntMatrix([flat[j * l : (j + 1) * l] for j in range(len(mu))], cols=l)
        yield ExtensionData(p=p, lam=lam, mu=mu, A=a, normalized=True)
