"""Independent brute-force oracles used to freeze expected test values.

Nothing here calls the library's normal-form or equivalence code paths;
determinants are cofactor expansions, invariant factors come from gcds of
minors, closures and automorphism counts are plain exhaustive enumeration.
"""

from itertools import combinations, product
from math import gcd, prod


def det_cofactor(rows):
    """Determinant by first-row cofactor expansion (exact, O(n!))."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * a * det_cofactor(minor)
    return total


def invariant_factors_by_minors(rows):
    """d_k = gcd(k x k minors) / gcd((k-1) x (k-1) minors), zeros trailing."""
    r, c = len(rows), len(rows[0])
    limit = min(r, c)
    out = []
    prev = 1
    for k in range(1, limit + 1):
        g = 0
        for rsel in combinations(range(r), k):
            for csel in combinations(range(c), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = gcd(g, det_cofactor(sub))
        if g == 0:
            out.extend([0] * (limit - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def brute_closure(orders, gens):
    """Closure of gens under coordinatewise addition mod orders."""
    zero = tuple(0 for _ in orders)
    els = {zero} | {tuple(g) for g in gens}
    changed = True
    while changed:
        changed = False
        for a in list(els):
            for b in list(els):
                s = tuple((x + y) % o for x, y, o in zip(a, b, orders))
                if s not in els:
                    els.add(s)
                    changed = True
    return els


def element_order(x, orders):
    n = 1
    for c, o in zip(x, orders):
        k = o // gcd(o, c)
        n = n * k // gcd(n, k)
    return n


def count_automorphisms(orders):
    """Count bijective endomorphisms of prod Z/orders by exhausting all
    generator images with compatible annihilators."""
    els = list(product(*(range(o) for o in orders)))
    candidates = [
        [x for x in els if all((d * c) % o == 0 for c, o in zip(x, orders))]
        for d in orders
    ]
    count = 0
    for imgs in product(*candidates):
        seen = set()
        for x in els:
            y = tuple(
                sum(xk * img[j] for xk, img in zip(x, imgs)) % o
                for j, o in enumerate(orders)
            )
            seen.add(y)
        if len(seen) == len(els):
            count += 1
    return count


def ptype_from_element_orders(orders_multiset, p):
    """Recover the partition of an abelian p-group from the multiset of its
    element orders, by conjugate-partition counting: the number of parts
    >= k is log_p of the ratio of consecutive p^k-torsion counts."""
    total = len(orders_multiset)
    geq = []  # geq[k-1] = number of parts >= k
    prev = 1
    k = 0
    while prev < total:
        k += 1
        cur = sum(1 for o in orders_multiset if p**k % o == 0)
        ratio, rem = divmod(cur, prev)
        assert rem == 0, "torsion counts of an abelian p-group divide each other"
        e = 0
        while ratio % p == 0:
            ratio //= p
            e += 1
        assert ratio == 1, "torsion ratio must be a p-power"
        geq.append(e)
        prev = cur
    parts = []
    for k, n in enumerate(geq, start=1):
        nxt = geq[k] if k < len(geq) else 0
        parts.extend([k] * (n - nxt))
    return tuple(sorted(parts, reverse=True))


def quotient_element_orders(group, subgroup):
    """Multiset of coset orders in E/S for an explicit group E and a
    subgroup given as a set of elements."""
    seen = set()
    orders = []
    for x in group.elements():
        coset_key = min(tuple(group.add(x, s)) for s in subgroup)
        if coset_key in seen:
            continue
        seen.add(coset_key)
        n = 1
        y = x
        while tuple(y) not in subgroup:
            y = group.add(y, x)
            n += 1
        orders.append(n)
    return orders


def subgroup_type(subgroup_elements, orders, p):
    """Partition type of a subgroup of prod Z/orders, via element orders."""
    return ptype_from_element_orders(
        [element_order(x, orders) for x in subgroup_elements], p
    )


def total_order(orders):
    return prod(orders)
