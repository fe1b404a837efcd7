"""Group isomorphism testing.

Invariant fingerprints prune fast; surviving pairs go through backtracking
over generator images.  Candidate images are bucketed by refined element
signatures (orders and class sizes along power chains), and each partial
assignment is validated by product-closure over the generated subgroup, so
a returned map is a verified bijective homomorphism.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .group import Group, Hom, subgroup_closure

_MAX_NODES = 2_000_000


def _derived_series_orders(G: Group) -> tuple[int, ...]:
    cur = frozenset(range(G.order))
    out = [G.order]
    while True:
        comms = set()
        # commutators of a generating set, then normal closure inside cur
        gen_set = _reduce(G, cur)
        for a in gen_set:
            for b in gen_set:
                comms.add(G.comm(a, b))
        der = set(subgroup_closure(G, tuple(comms)))
        # close under conjugation by cur to get the true derived subgroup
        changed = True
        while changed:
            changed = False
            for g in gen_set:
                for x in list(der):
                    y = G.conj(x, g)
                    if y not in der:
                        der = set(subgroup_closure(G, tuple(der | {y})))
                        changed = True
        der = frozenset(der)
        if len(der) == len(cur):
            break
        out.append(len(der))
        cur = der
        if len(cur) == 1:
            break
    return tuple(out)


def _reduce(G: Group, elems) -> tuple[int, ...]:
    from .group import reduce_generators

    return reduce_generators(G, frozenset(elems))


def fingerprint(G: Group) -> tuple:
    orders = Counter(G.element_order(x) for x in range(G.order))
    class_sizes = Counter(len(c) for c in G.conj_classes())
    from .group import center

    return (
        G.order,
        tuple(sorted(orders.items())),
        tuple(sorted(class_sizes.items())),
        center(G).order,
        _derived_series_orders(G),
    )


def _element_signatures(G: Group) -> list[tuple]:
    classes = G.conj_classes()
    sizes = {i: len(c) for i, c in enumerate(classes)}
    sig = [None] * G.order
    for x in range(G.order):
        o = G.element_order(x)
        chain = []
        for d in sorted({o // r for r in _prime_divisors(o)} if o > 1 else set()):
            y = G.power(x, d)
            chain.append((G.element_order(y), sizes[G.class_of(y)]))
        sig[x] = (o, sizes[G.class_of(x)], tuple(chain))
    return sig


def _prime_divisors(n: int) -> list[int]:
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


def _greedy_generating_sequence(G: Group, sig, bucket_sizes) -> list[int]:
    seq: list[int] = []
    have = frozenset({G.identity_idx})
    while len(have) < G.order:
        best = None
        for x in range(G.order):
            if x in have:
                continue
            rank = (bucket_sizes[sig[x]], x)
            if best is None or rank < best[0]:
                best = (rank, x)
        seq.append(best[1])
        have = subgroup_closure(G, tuple(seq))
    return seq


def _try_extend(A: Group, B: Group, gens: list[int], images: list[int],
                budget: list[int]) -> np.ndarray | None:
    """Closure of the partial map; None on any conflict."""
    amap = np.full(A.order, -1, dtype=np.int64)
    used = np.zeros(B.order, dtype=bool)
    amap[A.identity_idx] = B.identity_idx
    used[B.identity_idx] = True
    queue = [A.identity_idx]
    pairs = list(zip(gens, images))
    while queue:
        a = queue.pop()
        fa = int(amap[a])
        for g, fg in pairs:
            budget[0] -= 1
            if budget[0] < 0:
                raise RuntimeError("isomorphism search budget exhausted")
            b = A.mul(a, g)
            fb = B.mul(fa, fg)
            cur = int(amap[b])
            if cur < 0:
                if used[fb]:
                    return None
                amap[b] = fb
                used[fb] = True
                queue.append(b)
            elif cur != fb:
                return None
    return amap


def is_isomorphic(A: Group, B: Group) -> Hom | None:
    """An isomorphism A -> B if one exists, else None.  Deterministic."""
    if A.order != B.order:
        return None
    if fingerprint(A) != fingerprint(B):
        return None
    sig_a = _element_signatures(A)
    sig_b = _element_signatures(B)
    buckets_b: dict[tuple, list[int]] = {}
    for y in range(B.order):
        buckets_b.setdefault(sig_b[y], []).append(y)
    counts_a = Counter(sig_a)
    counts_b = {k: len(v) for k, v in buckets_b.items()}
    if dict(counts_a) != counts_b:
        return None
    bucket_sizes = {k: counts_b.get(k, 0) for k in counts_a}
    gens = _greedy_generating_sequence(A, sig_a, bucket_sizes)
    budget = [_MAX_NODES]

    def search(k: int, images: list[int], partial_sub: frozenset[int]) -> np.ndarray | None:
        if k == len(gens):
            return _try_extend(A, B, gens, images, budget)
        g = gens[k]
        for y in buckets_b.get(sig_a[g], ()):
            images.append(y)
            # quick consistency: the generated subgroup so far must map consistently
            trial = _try_extend(A, B, gens[: k + 1], images, budget)
            if trial is not None:
                sub_now = subgroup_closure(A, tuple(gens[: k + 1]))
                if k + 1 == len(gens):
                    images.pop()
                    return trial
                res = search(k + 1, images, sub_now)
                if res is not None:
                    images.pop()
                    return res
            images.pop()
        return None

    amap = search(0, [], frozenset({A.identity_idx}))
    if amap is None:
        return None
    hom = Hom(A, B, amap)
    assert hom.is_injective() and hom.verify()
    return hom
