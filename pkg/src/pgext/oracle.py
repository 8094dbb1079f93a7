"""Brute-force ground truth for extension equivalence.

Instead of the matrix criterion, realize each extension as an explicit
finite group E with a marked copy of the subgroup inside it, and search
exhaustively for a group isomorphism E1 -> E2 carrying the first marked
subgroup onto the second. Such an isomorphism restricts and descends to the
subgroup and quotient isomorphisms of an equivalence of extensions, so the
two notions agree; this module exists to check that claim independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abelian import (
    DEFAULT_MAX_ORDER,
    ExplicitGroup,
    PGroupType,
    cokernel_group,
    module_action,
    subgroup_generated,
)
from .errors import BoundExceededError, ValidationError
from .extension import ExtensionData, normalize, presentation_matrix

__all__ = ["ExplicitExtension", "realize_extension", "diagram_equivalent"]


@dataclass(frozen=True)
class ExplicitExtension:
    """A realized extension: the middle group as explicit cyclic factors,
    plus the images of the subgroup generators and of the lifts."""

    p: int
    lam: PGroupType
    mu: PGroupType
    group: ExplicitGroup
    sub_gens: tuple[tuple[int, ...], ...]
    quot_gens: tuple[tuple[int, ...], ...]

    def subgroup(self, max_order: int = DEFAULT_MAX_ORDER):
        """The embedded copy of the subgroup, as a set of elements."""
        return subgroup_generated(self.group, self.sub_gens, max_order)


def realize_extension(ext: ExtensionData, max_order: int = DEFAULT_MAX_ORDER) -> ExplicitExtension:
    """Build the middle group of ext as an explicit group, keeping track of
    where the subgroup generators and the lifts land."""
    e = normalize(ext)
    exponent = e.lam.weight + e.mu.weight
    order = e.p**exponent
    if order > max_order:
        raise BoundExceededError(f"middle group order {order} exceeds bound {max_order}")
    l = len(e.lam)
    m = len(e.mu)
    if l + m == 0:
        group = ExplicitGroup((), ())
        return ExplicitExtension(e.p, e.lam, e.mu, group, (), ())
    group = cokernel_group(presentation_matrix(e), l + m)
    images = group.generator_images
    assert images is not None
    return ExplicitExtension(
        e.p, e.lam, e.mu, group, tuple(images[:l]), tuple(images[l:])
    )


def _images_by_order(group: ExplicitGroup) -> dict[int, list[tuple[int, ...]]]:
    table: dict[int, list[tuple[int, ...]]] = {}
    for x in group.elements():
        table.setdefault(group.element_order(x), []).append(x)
    return table


def diagram_equivalent(
    e1: ExplicitExtension, e2: ExplicitExtension, max_order: int = DEFAULT_MAX_ORDER
) -> bool:
    """True iff some isomorphism of the middle groups maps the first marked
    subgroup onto the second.

    Search: assign to each canonical generator of E1 an element of E2 of the
    same order (an isomorphism must preserve orders, and matching orders
    already make the assignment a homomorphism); accept when the assignment
    keeps the marked subgroup inside its counterpart and generates all of
    E2. Exhausting all assignments without a hit proves inequivalence.
    """
    if (e1.p, e1.lam, e1.mu) != (e2.p, e2.lam, e2.mu):
        raise ValidationError(
            "mismatched_context", "both realizations must share the same (p, lambda, mu)"
        )
    g1, g2 = e1.group, e2.group
    if g1.order > max_order or g2.order > max_order:
        raise BoundExceededError(
            f"middle group order {max(g1.order, g2.order)} exceeds bound {max_order}"
        )
    s1 = subgroup_generated(g1, e1.sub_gens, max_order)
    s2 = subgroup_generated(g2, e2.sub_gens, max_order)
    if len(s1) != len(s2):
        return False

    factors = g1.factor_orders
    by_order = _images_by_order(g2)
    candidates = [by_order.get(d, []) for d in factors]
    if any(not c for c in candidates):
        return False

    def image(x, targets):
        acc = g2.identity()
        for coeff, t in zip(x, targets):
            if coeff:
                acc = g2.add(acc, module_action(coeff, t, g2))
        return acc

    for targets in itertools.product(*candidates):
        if any(image(y, targets) not in s2 for y in e1.sub_gens):
            continue
        generated = subgroup_generated(g2, targets, max_order)
        if len(generated) == g2.order:
            return True
    return False
