"""Finite abelian groups: types as partitions, primary decomposition,
explicit groups as products of cyclic factors, and cokernels of integer
relation matrices.

An abelian p-group is described up to isomorphism by a weakly decreasing
partition of exponents: (2, 1) at p = 2 means Z/4 x Z/2. A group presented
by a relation matrix R acting on a column of generators is realized
concretely as the cokernel Z^n / (row lattice of R), computed by Smith
normal form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

from .errors import BoundExceededError, ValidationError
from .exactmat import IntMatrix, snf

__all__ = [
    "DEFAULT_MAX_ORDER",
    "PGroupType",
    "ExplicitGroup",
    "is_prime",
    "module_action",
    "primary_decompose",
    "cokernel_group",
    "subgroup_generated",
]

DEFAULT_MAX_ORDER = 4096


def is_prime(n: int) -> bool:
    """Primality by trial division; inputs here are desk-scale.

    >>> [k for k in range(14) if is_prime(k)]
    [2, 3, 5, 7, 11, 13]
    """
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PGroupType:
    """Weakly decreasing positive exponents (e1, e2, ...) encoding the
    p-group Z/p**e1 x Z/p**e2 x ... The empty tuple is the trivial group.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValidationError("bad_partition", f"parts {parts} are not weakly decreasing")
        if parts and parts[-1] <= 0:
            raise ValidationError("bad_partition", f"parts {parts} must all be positive")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def weight(self) -> int:
        """Sum of the exponents; the group has order p**weight."""
        return sum(self.parts)

    def group_order(self, p: int) -> int:
        return p**self.weight


@dataclass(frozen=True)
class ExplicitGroup:
    """A concrete finite abelian group: a product of cyclic factors.

    Elements are coordinate tuples with 0 <= e[k] < factor_orders[k].
    ``generator_images`` optionally records where the generators of an
    originating presentation land; see :func:`cokernel_group`.
    """

    factor_orders: tuple[int, ...]
    generator_images: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        orders = tuple(int(x) for x in self.factor_orders)
        object.__setattr__(self, "factor_orders", orders)
        if any(o <= 1 for o in orders):
            raise ValidationError("bad_order", f"factor orders {orders} must all exceed 1")
        if self.generator_images is not None:
            images = tuple(tuple(int(c) for c in img) for img in self.generator_images)
            object.__setattr__(self, "generator_images", images)
            for img in images:
                self._check_element(img)

    def _check_element(self, x) -> None:
        if len(x) != len(self.factor_orders):
            raise ValidationError(
                "shape_mismatch",
                f"element {x} has arity {len(x)}, group has {len(self.factor_orders)} factors",
            )
        for c, o in zip(x, self.factor_orders):
            if not 0 <= c < o:
                raise ValidationError("bad_matrix", f"coordinate {c} out of range for order {o}")

    @property
    def order(self) -> int:
        return prod(self.factor_orders)

    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.factor_orders)

    def add(self, x, y) -> tuple[int, ...]:
        return tuple((a + b) % o for a, b, o in zip(x, y, self.factor_orders))

    def neg(self, x) -> tuple[int, ...]:
        return tuple((-a) % o for a, o in zip(x, self.factor_orders))

    def elements(self):
        """Iterate over all elements (lexicographic order)."""
        return itertools.product(*(range(o) for o in self.factor_orders))

    def element_order(self, x) -> int:
        n = 1
        for c, o in zip(x, self.factor_orders):
            k = o // gcd(o, c)  # additive order of c in Z/o
            n = n * k // gcd(n, k)
        return n


def module_action(n: int, x, group: ExplicitGroup) -> tuple[int, ...]:
    """The integer n acting on a group element: n.x = x + x + ... (n times),
    with negative n giving the inverse of |n|.x.

    >>> module_action(-2, (1,), ExplicitGroup((4,)))
    (2,)
    """
    group._check_element(x)
    return tuple((n * c) % o for c, o in zip(x, group.factor_orders))


def _factorize(n: int) -> dict[int, int]:
    """Trial-division factorization {prime: exponent} for n > 1."""
    out: dict[int, int] = {}
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            out[f] = out.get(f, 0) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def primary_decompose(orders: list[int] | tuple[int, ...]) -> dict[int, PGroupType]:
    """Split a product of cyclic groups into its Sylow p-parts.

    For each prime p dividing some order, collects the p-exponents of all
    cyclic factors into a partition; the product of all p-parts recovers the
    input group up to isomorphism.

    >>> primary_decompose([12])
    {2: PGroupType(parts=(2,)), 3: PGroupType(parts=(1,))}
    """
    exps: dict[int, list[int]] = {}
    for o in orders:
        if o <= 1:
            raise ValidationError("bad_order", f"cyclic factor order {o} must exceed 1")
        for p, e in _factorize(o).items():
            exps.setdefault(p, []).append(e)
    return {
        p: PGroupType(tuple(sorted(es, reverse=True))) for p, es in sorted(exps.items())
    }


def cokernel_group(relations: IntMatrix, n_generators: int) -> ExplicitGroup:
    """The group presented by n_generators generators subject to the rows of
    ``relations``: Z^n modulo the row lattice.

    The result lists the nontrivial invariant factors in increasing
    (divisibility) order; ``generator_images[j]`` gives the coordinates of
    original generator j in those canonical factors.
    """
    if relations.cols != n_generators:
        raise ValidationError(
            "shape_mismatch",
            f"relation matrix has {relations.cols} columns for {n_generators} generators",
        )
    if n_generators == 0:
        return ExplicitGroup((), ())
    if relations.rows == 0:
        raise ValidationError("infinite_group", "no relations: the cokernel is infinite")
    res = snf(relations)
    diag = [res.D[k, k] if k < relations.rows else 0 for k in range(n_generators)]
    if any(dk == 0 for dk in diag):
        raise ValidationError("infinite_group", "zero invariant factor: the cokernel is infinite")
    kept = [k for k in range(n_generators) if diag[k] > 1]
    factors = tuple(diag[k] for k in kept)
    # original generators expand over the new basis via the column transform
    images = tuple(
        tuple(res.V[j, k] % diag[k] for k in kept) for j in range(n_generators)
    )
    return ExplicitGroup(factors, images)


def subgroup_generated(group: ExplicitGroup, gens, max_order: int = DEFAULT_MAX_ORDER):
    """Closure of ``gens`` under addition: the subgroup they generate.

    >>> sorted(subgroup_generated(ExplicitGroup((4,)), [(2,)]))
    [(0,), (2,)]
    """
    if group.order > max_order:
        raise BoundExceededError(f"group order {group.order} exceeds bound {max_order}")
    gens = [tuple(g) for g in gens]
    for g in gens:
        group._check_element(g)
    seen = {group.identity()}
    frontier = [group.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
