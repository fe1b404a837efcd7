"""Subgroup enumeration.

`subgroup_classes` lists conjugacy-class representatives bottom-up: cyclic
subgroups from element orders, then repeated prime-index extensions inside
normalizers, deduplicated by conjugacy.  Prime-index extension reaches every
subgroup with a subnormal chain of prime steps, so the listing is complete
whenever every subgroup of G is soluble; the whole group is always included.
Output order is deterministic: ascending (order, canonical key).

`all_subgroups_in` enumerates ALL subgroups inside a given (small, soluble)
ambient subgroup without conjugacy reduction; it is the workhorse for
subgroup data of Sylow p-subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OrderCapExceeded
from .group import (Group, Subgroup, conjugate_set, normalizer_indices, p_part,
                    reduce_generators, subgroup, subgroup_from_elems,
                    trivial_subgroup, whole_subgroup)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups, held by a canonical representative."""

    rep: Subgroup
    size: int  # number of conjugates

    @property
    def order(self) -> int:
        return self.rep.order


def _class_canonical(G: Group, elems: frozenset[int],
                     gens: tuple[int, ...]) -> tuple[tuple[int, ...], frozenset[int], int]:
    """Orbit of a subgroup under conjugation; returns (min key, min set, size)."""
    start = tuple(sorted(elems))
    seen = {start: elems}
    queue = [elems]
    while queue:
        cur = queue.pop()
        for g in G.gen_idx:
            nxt = conjugate_set(G, cur, g)
            key = tuple(sorted(nxt))
            if key not in seen:
                seen[key] = nxt
                queue.append(nxt)
    best = min(seen)
    return best, seen[best], len(seen)


def _cyclic_subgroups(G: Group) -> dict[tuple[int, ...], frozenset[int]]:
    out: dict[tuple[int, ...], frozenset[int]] = {}
    for x in range(G.order):
        elems = {G.identity_idx}
        y = x
        while y != G.identity_idx:
            elems.add(y)
            y = G.mul(y, x)
        key = tuple(sorted(elems))
        out.setdefault(key, frozenset(elems))
    return out


def subgroup_classes(G: Group) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups (see module docstring for completeness)."""
    if G.order > G.caps.subgroup_cap:
        raise OrderCapExceeded(
            f"order {G.order} exceeds subgroup enumeration cap {G.caps.subgroup_cap}")
    found: dict[tuple[int, ...], SubgroupClass] = {}
    worklist: list[tuple[int, tuple[int, ...]]] = []

    def add(elems: frozenset[int], gens: tuple[int, ...]) -> None:
        key, min_set, size = _class_canonical(G, elems, gens)
        if key in found:
            return
        rep = Subgroup(G, reduce_generators(G, min_set), min_set)
        found[key] = SubgroupClass(rep, size)
        worklist.append((len(min_set), key))

    for key, elems in _cyclic_subgroups(G).items():
        cls_key, min_set, size = _class_canonical(G, elems, ())
        if cls_key not in found:
            rep = Subgroup(G, reduce_generators(G, min_set), min_set)
            found[cls_key] = SubgroupClass(rep, size)
            worklist.append((len(min_set), cls_key))

    worklist.sort()
    i = 0
    while i < len(worklist):
        _, key = worklist[i]
        i += 1
        H = found[key].rep
        index = G.order // H.order
        if index == 1:
            continue
        n_idx = normalizer_indices(G, H)
        h_arr = H.indices()
        t = G.rmul
        seen_cosets: set[int] = set()
        for x in n_idx:
            x = int(x)
            if x in H.elems:
                continue
            if t is not None:
                coset_id = int(t[x, h_arr].min())
            else:
                coset_id = int(G.rows_to_indices(G._E[x][G._E[h_arr]]).min())
            if coset_id in seen_cosets:
                continue
            seen_cosets.add(coset_id)
            for r in _prime_factors(index):
                if G.power(x, r) not in H.elems:
                    continue
                new_elems = set(H.elems)
                xj = x
                for _ in range(r - 1):
                    if t is not None:
                        new_elems.update(int(v) for v in t[xj, h_arr])
                    else:
                        new_elems.update(
                            int(v) for v in G.rows_to_indices(G._E[xj][G._E[h_arr]]))
                    xj = G.mul(xj, x)
                if len(new_elems) == H.order * r:
                    add(frozenset(new_elems), H.gens + (x,))
        # keep the worklist sorted by order so extensions proceed bottom-up
        worklist[i:] = sorted(worklist[i:])

    add(frozenset(range(G.order)), tuple(G.gen_idx))
    out = sorted(found.values(), key=lambda c: (c.order, c.rep.key))
    _sanity_check_classes(G, out)
    return out


def _sanity_check_classes(G: Group, classes: list[SubgroupClass]) -> None:
    # prime-order subgroup counts must match element counts exactly
    order_count: dict[int, int] = {}
    for c in classes:
        order_count[c.order] = order_count.get(c.order, 0) + c.size
    for r in _prime_factors(G.order):
        n_elts = sum(1 for x in range(G.order) if G.element_order(x) == r)
        expect = n_elts // (r - 1)
        if order_count.get(r, 0) != expect:
            raise AssertionError(
                f"subgroup census broken: {order_count.get(r, 0)} subgroups of "
                f"order {r}, element count demands {expect}")


def all_subgroups_in(G: Group, ambient: frozenset[int]) -> list[Subgroup]:
    """Every subgroup contained in `ambient` (ambient must be a subgroup set).

    Complete when the ambient subgroup is soluble (always true for p-groups).
    Deterministic ascending (order, key) output.
    """
    amb_sorted = sorted(ambient)
    found: dict[tuple[int, ...], frozenset[int]] = {}
    worklist: list[frozenset[int]] = []

    def add(elems: frozenset[int]):
        key = tuple(sorted(elems))
        if key not in found:
            found[key] = elems
            worklist.append(elems)

    for x in amb_sorted:
        elems = {G.identity_idx}
        y = x
        while y != G.identity_idx:
            elems.add(y)
            y = G.mul(y, x)
        add(frozenset(elems))

    i = 0
    while i < len(worklist):
        H = worklist[i]
        i += 1
        index = len(ambient) // len(H)
        if index == 1:
            continue
        # normalizer of H inside ambient, by direct scan (ambient is small)
        gens_h = reduce_generators(G, H)
        n_in = [g for g in amb_sorted
                if all(G.conj(s, g) in H for s in gens_h)]
        for x in n_in:
            if x in H:
                continue
            for r in _prime_factors(index):
                if G.power(x, r) not in H:
                    continue
                new_elems = set(H)
                xj = x
                for _ in range(r - 1):
                    new_elems.update(G.mul(h, xj) for h in H)
                    xj = G.mul(xj, x)
                if len(new_elems) == len(H) * r:
                    add(frozenset(new_elems))

    subs = [subgroup_from_elems(G, elems) for elems in found.values()]
    subs.sort(key=lambda s: (s.order, s.key))
    return subs


def p_subgroup_classes(G: Group, p: int, P: Subgroup | None = None
                       ) -> list[SubgroupClass]:
    """Conjugacy classes of p-subgroups of G, via subgroups of one Sylow.

    Every p-subgroup is conjugate into P, so G-classes of subgroups of P
    exhaust all p-subgroups.  Deterministic ascending (order, key).
    """
    from .group import exists_conjugating, sylow

    if P is None:
        P = sylow(G, p)
    subs = all_subgroups_in(G, P.elems)
    by_order: dict[int, list[Subgroup]] = {}
    for s in subs:
        by_order.setdefault(s.order, []).append(s)
    classes: list[SubgroupClass] = []
    for order in sorted(by_order):
        bucket = by_order[order]
        assigned = [False] * len(bucket)
        for i, s in enumerate(bucket):
            if assigned[i]:
                continue
            assigned[i] = True
            members = 1
            for j in range(i + 1, len(bucket)):
                if assigned[j]:
                    continue
                if exists_conjugating(G, s.elems, bucket[j].elems, s.gens) is not None:
                    assigned[j] = True
                    members += 1
            n_idx = normalizer_indices(G, s)
            classes.append(SubgroupClass(s, G.order // len(n_idx)))
    classes.sort(key=lambda c: (c.order, c.rep.key))
    return classes
