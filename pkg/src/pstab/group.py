"""Exact finite permutation groups with full element enumeration.

A Group stores its complete element set as a numpy matrix of permutation
rows (uint16 point images), sorted lexicographically, so element indices
are canonical.  Groups small enough (order <= table cap) additionally get
a dense right-multiplication table; larger groups fall back to vectorized
row arithmetic.  All objects are immutable after construction; lazy caches
are built behind a lock so concurrent readers are safe.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from .config import Caps, DEFAULT_CAPS
from .errors import BadParameters, NotNormal, NotNormalized, OrderCapExceeded
from .perm import Perm, format_cycles, identity as perm_identity, inverse as perm_inverse

_DTYPE = np.uint16


def _rows_to_keys(rows: np.ndarray) -> np.ndarray:
    """Encode permutation rows as fixed-width byte strings whose byte order
    equals lexicographic tuple order (big-endian uint16)."""
    be = np.ascontiguousarray(rows.astype(">u2"))
    return be.view(f"S{2 * rows.shape[1]}").ravel()


def _key_of(row: np.ndarray) -> bytes:
    return row.astype(">u2").tobytes()


class Group:
    """A finite permutation group with cached element data."""

    def __init__(self, rows: np.ndarray, generators: list[Perm], label: str = "",
                 caps: Caps = DEFAULT_CAPS):
        # rows must be the complete, duplicate-free element set
        rows = np.asarray(rows, dtype=_DTYPE)
        keys = _rows_to_keys(rows)
        order = np.argsort(keys, kind="stable")
        self._E = np.ascontiguousarray(rows[order])
        self._keys = keys[order]
        self.degree = int(rows.shape[1])
        self.order = int(rows.shape[0])
        self.label = label
        self.caps = caps
        self.generators = list(generators) if generators else [perm_identity(self.degree)]
        self._lock = threading.Lock()
        self._inv: np.ndarray | None = None
        self._rmul: np.ndarray | None = None  # _rmul[b, a] = index of a*b
        self._orders: np.ndarray | None = None
        self._classes: list[np.ndarray] | None = None
        self._class_of: np.ndarray | None = None
        self._key_dict: dict[bytes, int] | None = None
        self.gen_idx = [self.index_of_row(np.asarray(g, dtype=_DTYPE)) for g in self.generators]

    # -- basic element access -------------------------------------------------

    def perm(self, i: int) -> Perm:
        return tuple(int(v) for v in self._E[i])

    def index_of_row(self, row: np.ndarray) -> int:
        i = int(np.searchsorted(self._keys, _key_of(row)))
        if i >= self.order or not np.array_equal(self._E[i], row):
            raise KeyError("permutation not in group")
        return i

    def index_of(self, p: Perm) -> int:
        return self.index_of_row(np.asarray(p, dtype=_DTYPE))

    def contains_perm(self, p) -> bool:
        row = np.asarray(p, dtype=_DTYPE)
        if row.shape != (self.degree,):
            return False
        i = int(np.searchsorted(self._keys, _key_of(row)))
        return i < self.order and bool(np.array_equal(self._E[i], row))

    @property
    def identity_idx(self) -> int:
        return 0  # identity is lexicographically least in any subgroup containing it

    def rows_to_indices(self, rows: np.ndarray) -> np.ndarray:
        keys = _rows_to_keys(rows)
        idx = np.searchsorted(self._keys, keys)
        if np.any(idx >= self.order):
            raise KeyError("row not in group")
        if not np.array_equal(self._E[idx], np.asarray(rows, dtype=_DTYPE)):
            raise KeyError("row not in group")
        return idx.astype(np.int64)

    # -- lazy caches ----------------------------------------------------------

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            with self._lock:
                if self._inv is None:
                    inv_rows = np.argsort(self._E, axis=1).astype(_DTYPE)
                    self._inv = self.rows_to_indices(inv_rows)
        return self._inv

    @property
    def rmul(self) -> np.ndarray | None:
        """Dense right-multiplication table: rmul[b, a] = idx(a * b), or None."""
        if self.order > self.caps.table_cap:
            return None
        if self._rmul is None:
            with self._lock:
                if self._rmul is None:
                    self._rmul = self._build_rmul()
        return self._rmul

    def _sigma(self, g: int) -> np.ndarray:
        """Right multiplication by element g as an index map (no table needed)."""
        grow = self._E[g]
        prod = grow[self._E]  # row a -> a*g since (a*g)[i] = g[a[i]]
        return self.rows_to_indices(prod)

    def _build_rmul(self) -> np.ndarray:
        n = self.order
        sigma = np.empty((n, n), dtype=np.int32)
        sigma[0] = np.arange(n, dtype=np.int32)
        gen_sigma = {g: self._sigma(g).astype(np.int32) for g in set(self.gen_idx)}
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        queue = [0]
        while queue:
            b = queue.pop()
            for g, sg in gen_sigma.items():
                c = int(sg[b])  # c = b*g
                if not seen[c]:
                    sigma[c] = sg[sigma[b]]
                    seen[c] = True
                    queue.append(c)
        if not seen.all():
            raise AssertionError("generators do not reach all elements")
        return sigma

    def mul(self, a: int, b: int) -> int:
        t = self.rmul
        if t is not None:
            return int(t[b, a])
        row = self._E[b][self._E[a]]
        return self.index_of_row(row)

    def inv_idx(self, a: int) -> int:
        return int(self.inv[a])

    def conj(self, a: int, g: int) -> int:
        """a^g = g^-1 a g."""
        return self.mul(self.mul(self.inv_idx(g), a), g)

    def comm(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b = a^-1 * a^b."""
        return self.mul(self.inv_idx(a), self.conj(a, b))

    def element_order(self, a: int) -> int:
        if self._orders is None:
            with self._lock:
                if self._orders is None:
                    self._orders = np.zeros(self.order, dtype=np.int32)
        if self._orders[a] == 0:
            row = self._E[a]
            n = row.shape[0]
            seen = np.zeros(n, dtype=bool)
            o = 1
            for start in range(n):
                if seen[start]:
                    continue
                length = 0
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = int(row[j])
                    length += 1
                o = lcm(o, length)
            self._orders[a] = o
        return int(self._orders[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv_idx(a), -k)
        out = self.identity_idx
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    # -- conjugacy classes of elements ---------------------------------------

    def conj_classes(self) -> list[np.ndarray]:
        if self._classes is None:
            with self._lock:
                if self._classes is None:
                    self._classes, self._class_of = self._build_classes()
        return self._classes

    def class_of(self, a: int) -> int:
        self.conj_classes()
        return int(self._class_of[a])

    def _conj_by_gen_column(self, g: int) -> np.ndarray:
        """Array c with c[x] = idx(x^g) for every element x."""
        ginv_row = self._E[self.inv_idx(g)]
        grow = self._E[g]
        step1 = self._E[:, ginv_row]  # rows of ginv * x
        prod = grow[step1]  # rows of ginv * x * g
        return self.rows_to_indices(prod)

    def _build_classes(self) -> tuple[list[np.ndarray], np.ndarray]:
        cols = [self._conj_by_gen_column(g) for g in set(self.gen_idx)]
        class_of = np.full(self.order, -1, dtype=np.int64)
        classes: list[np.ndarray] = []
        for start in range(self.order):
            if class_of[start] >= 0:
                continue
            cid = len(classes)
            stack = [start]
            class_of[start] = cid
            members = [start]
            while stack:
                x = stack.pop()
                for col in cols:
                    y = int(col[x])
                    if class_of[y] < 0:
                        class_of[y] = cid
                        members.append(y)
                        stack.append(y)
            classes.append(np.array(sorted(members), dtype=np.int64))
        return classes, class_of

    # -- misc -----------------------------------------------------------------

    def exponent(self) -> int:
        out = 1
        for cls in self.conj_classes():
            out = lcm(out, self.element_order(int(cls[0])))
        return out

    def __repr__(self):
        name = self.label or "Group"
        return f"<{name}: order {self.order}, degree {self.degree}>"


# ---------------------------------------------------------------------------
# construction


def _closure_rows(gen_rows: np.ndarray, order_cap: int) -> np.ndarray:
    degree = gen_rows.shape[1]
    ident = np.arange(degree, dtype=_DTYPE)
    rows: list[np.ndarray] = [ident]
    seen = {_key_of(ident): 0}
    for g in gen_rows:
        g = np.asarray(g, dtype=_DTYPE)
        k = _key_of(g)
        if k not in seen:
            seen[k] = len(rows)
            rows.append(g)
    frontier = list(range(len(rows)))
    gens = [np.asarray(g, dtype=_DTYPE) for g in gen_rows]
    while frontier:
        F = np.stack([rows[i] for i in frontier])
        new_frontier: list[int] = []
        for g in gens:
            prods = g[F]
            prods_be = np.ascontiguousarray(prods.astype(">u2"))
            for r in range(prods.shape[0]):
                k = prods_be[r].tobytes()
                if k not in seen:
                    seen[k] = len(rows)
                    rows.append(prods[r])
                    new_frontier.append(len(rows) - 1)
            if len(rows) > order_cap:
                raise OrderCapExceeded(
                    f"closure exceeded order cap {order_cap}")
        frontier = new_frontier
    return np.stack(rows)


def generate(gens: list[Perm], degree: int | None = None, label: str = "",
             caps: Caps = DEFAULT_CAPS) -> Group:
    """Group generated by permutations, with the full element set computed
    by inductive closure.  Empty generator list gives the trivial group."""
    if gens:
        degrees = {len(g) for g in gens}
        if len(degrees) != 1:
            raise BadParameters(f"generators of mixed degree {sorted(degrees)}")
        degree = degrees.pop()
    elif degree is None:
        degree = 1
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise BadParameters(f"not a permutation of 0..{degree - 1}: {g}")
    if degree > caps.degree_cap:
        raise OrderCapExceeded(f"degree {degree} exceeds degree cap {caps.degree_cap}")
    gen_rows = (np.array([list(g) for g in gens], dtype=_DTYPE)
                if gens else np.zeros((0, degree), dtype=_DTYPE))
    rows = _closure_rows(gen_rows, caps.order_cap) if gens else \
        np.arange(degree, dtype=_DTYPE).reshape(1, degree)
    return Group(rows, gens, label=label, caps=caps)


def trivial_group(degree: int = 1, caps: Caps = DEFAULT_CAPS) -> Group:
    return generate([], degree=degree, caps=caps)


def group_from_rows(rows: np.ndarray, label: str = "",
                    caps: Caps = DEFAULT_CAPS) -> Group:
    """Group from a complete element-row matrix; generators chosen greedily."""
    G = Group(np.asarray(rows, dtype=_DTYPE), [], label=label, caps=caps)
    red = reduce_generators(G, frozenset(range(G.order)))
    G.generators = [G.perm(i) for i in red] or [perm_identity(G.degree)]
    G.gen_idx = list(red) or [G.identity_idx]
    return G


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a parent Group, stored as a frozen index set."""

    parent: Group
    gens: tuple[int, ...]
    elems: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.elems)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.elems))

    def indices(self) -> np.ndarray:
        return np.fromiter(sorted(self.elems), dtype=np.int64)

    def gen_perms(self) -> list[Perm]:
        return [self.parent.perm(i) for i in self.gens]

    def contains(self, other: "Subgroup") -> bool:
        return other.elems <= self.elems

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent \
            and self.elems == other.elems

    def __hash__(self):
        return hash((id(self.parent), self.elems))

    def __repr__(self):
        return f"<Subgroup order {self.order} of {self.parent.label or 'G'}>"


def subgroup_closure(G: Group, gens: list[int] | tuple[int, ...]) -> frozenset[int]:
    elems = {G.identity_idx}
    frontier = [G.identity_idx]
    gens = [g for g in gens if g != G.identity_idx]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


def subgroup(G: Group, gens, elems: frozenset[int] | None = None) -> Subgroup:
    gens = tuple(dict.fromkeys(int(g) for g in gens))
    if elems is None:
        elems = subgroup_closure(G, gens)
    return Subgroup(G, gens, elems)


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, (), frozenset({G.identity_idx}))


def whole_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, tuple(G.gen_idx), frozenset(range(G.order)))


def reduce_generators(G: Group, elems: frozenset[int]) -> tuple[int, ...]:
    """Small deterministic generating set for a known subgroup element set."""
    gens: list[int] = []
    have = {G.identity_idx}
    for x in sorted(elems):
        if x not in have:
            gens.append(x)
            have = set(subgroup_closure(G, gens))
            if len(have) == len(elems):
                break
    return tuple(gens)


def subgroup_from_elems(G: Group, elems: frozenset[int]) -> Subgroup:
    return Subgroup(G, reduce_generators(G, elems), frozenset(elems))


def conjugate_set(G: Group, elems, g: int) -> frozenset[int]:
    arr = np.fromiter(elems, dtype=np.int64)
    t = G.rmul
    ginv = G.inv_idx(g)
    if t is not None:
        out = t[g, t[arr, ginv]]
    else:
        step1 = G._E[arr][:, G._E[ginv]]
        out = G.rows_to_indices(G._E[g][step1])
    return frozenset(int(v) for v in out)


def _membership_mask(G: Group, elems) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[np.fromiter(elems, dtype=np.int64)] = True
    return mask


def _conj_column_of_element(G: Group, s: int) -> np.ndarray:
    """c[g] = idx(s^g) over all g in G."""
    t = G.rmul
    if t is not None:
        m1 = t[s][G.inv]  # m1[g] = inv(g)*s
        return t[np.arange(G.order), m1]  # (inv(g)*s)*g
    srow = G._E[s]
    inv_rows = G._E[G.inv]
    step1 = srow[inv_rows]
    prod = np.take_along_axis(G._E, step1, axis=1)
    return G.rows_to_indices(prod)


def normalizer_indices(G: Group, H: Subgroup) -> np.ndarray:
    mask = np.ones(G.order, dtype=bool)
    member = _membership_mask(G, H.elems)
    for s in (H.gens or (G.identity_idx,)):
        mask &= member[_conj_column_of_element(G, s)]
    return np.nonzero(mask)[0]


def centralizer_indices(G: Group, H: Subgroup) -> np.ndarray:
    mask = np.ones(G.order, dtype=bool)
    for s in (H.gens or (G.identity_idx,)):
        mask &= _conj_column_of_element(G, s) == s
    return np.nonzero(mask)[0]


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    return subgroup_from_elems(G, frozenset(int(i) for i in normalizer_indices(G, H)))


def centralizer(G: Group, H: Subgroup) -> Subgroup:
    return subgroup_from_elems(G, frozenset(int(i) for i in centralizer_indices(G, H)))


def center(G: Group) -> Subgroup:
    return centralizer(G, whole_subgroup(G))


def transporter_indices(G: Group, Q: Subgroup, R: Subgroup) -> np.ndarray:
    """All g with Q^g <= R."""
    if Q.order > R.order:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(G.order, dtype=bool)
    member = _membership_mask(G, R.elems)
    for s in (Q.gens or (G.identity_idx,)):
        mask &= member[_conj_column_of_element(G, s)]
    return np.nonzero(mask)[0]


def exists_conjugating(G: Group, A: frozenset[int], B: frozenset[int],
                       gens_a: tuple[int, ...]) -> int | None:
    """Least g with A^g = B, or None."""
    if len(A) != len(B):
        return None
    mask = np.ones(G.order, dtype=bool)
    member = _membership_mask(G, B)
    for s in (gens_a or (G.identity_idx,)):
        mask &= member[_conj_column_of_element(G, s)]
    hits = np.nonzero(mask)[0]
    return int(hits[0]) if hits.size else None


def is_abelian_set(G: Group, elems_or_sub) -> bool:
    gens = elems_or_sub.gens if isinstance(elems_or_sub, Subgroup) else tuple(elems_or_sub)
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if G.mul(a, b) != G.mul(b, a):
                return False
    return True


def subgroup_exponent(G: Group, H: Subgroup) -> int:
    out = 1
    for x in H.elems:
        out = lcm(out, G.element_order(x))
    return out


def is_normal(G: Group, H: Subgroup) -> bool:
    for g in G.gen_idx:
        for s in H.gens:
            if G.conj(s, g) not in H.elems:
                return False
    return True


# ---------------------------------------------------------------------------
# Sylow subgroups and cores


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def sylow(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, deterministic for a fixed group.

    Returns the trivial subgroup when p does not divide the order.
    """
    from .fields import is_prime

    if not is_prime(p):
        raise BadParameters(f"{p} is not prime")
    target = p_part(G.order, p)
    P = trivial_subgroup(G)
    while P.order < target:
        n_idx = normalizer_indices(G, P)
        found = None
        for g in n_idx:
            g = int(g)
            if g in P.elems:
                continue
            o = G.element_order(g)
            if o != 1 and p_part(o, p) == o:
                found = g
                break
        if found is None:
            raise AssertionError("Sylow growth stalled; group data corrupt")
        P = subgroup(G, P.gens + (found,))
    return P


def normal_closure(G: Group, seed: int, size_cap: int) -> frozenset[int] | None:
    """<seed^G>, or None as soon as its size would exceed size_cap."""
    cls = G.conj_classes()[G.class_of(seed)]
    if cls.size > size_cap:
        return None
    elems = {G.identity_idx}
    frontier = [G.identity_idx]
    gens = [int(x) for x in cls]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in elems:
                if len(elems) >= size_cap:
                    return None
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


def p_core(G: Group, p: int, mode: str = "p") -> Subgroup:
    """O_p(G) (mode 'p') or O_{p'}(G) (mode "p'").

    Join of normal closures of p-elements (resp. p'-elements) whose normal
    closure is a p-group (resp. p'-group), iterated via the join closure.
    """
    from .fields import is_prime

    if not is_prime(p):
        raise BadParameters(f"{p} is not prime")
    if mode not in ("p", "p'"):
        raise BadParameters(f"mode must be 'p' or \"p'\", got {mode!r}")
    pp = p_part(G.order, p)
    bound = pp if mode == "p" else G.order // pp

    def right_kind(y: int) -> bool:
        o = G.element_order(y)
        return p_part(o, p) == o if mode == "p" else p_part(o, p) == 1

    joined: set[int] = {G.identity_idx}
    for cls in G.conj_classes():
        x = int(cls[0])
        if x == G.identity_idx or not right_kind(x):
            continue
        nc = normal_closure(G, x, bound)
        if nc is None:
            continue
        if all(right_kind(y) for y in nc):
            joined |= nc
    elems = subgroup_closure(G, tuple(sorted(joined)))
    if len(elems) > bound:
        raise AssertionError("core join exceeded its arithmetic bound")
    return subgroup_from_elems(G, elems)


# ---------------------------------------------------------------------------
# homomorphisms, quotients, coset actions


class Hom:
    """Homomorphism between two engine groups, stored as a full index map."""

    def __init__(self, source: Group, target: Group, mapping: np.ndarray):
        self.source = source
        self.target = target
        self.mapping = mapping
        self.gen_images = [int(mapping[g]) for g in source.gen_idx]

    def apply(self, i: int) -> int:
        return int(self.mapping[i])

    def kernel(self) -> Subgroup:
        ker = np.nonzero(self.mapping == self.target.identity_idx)[0]
        return subgroup_from_elems(self.source, frozenset(int(v) for v in ker))

    def image(self) -> Subgroup:
        return subgroup_from_elems(
            self.target, frozenset(int(v) for v in np.unique(self.mapping)))

    def is_injective(self) -> bool:
        return np.unique(self.mapping).size == self.source.order

    def verify(self) -> bool:
        """Full element-level check that the map is multiplicative."""
        for g in set(self.source.gen_idx):
            sg = self.source._sigma(g)
            img_g = int(self.mapping[g])
            lhs = self.mapping[sg]
            if self.target.rmul is not None:
                rhs = self.target.rmul[img_g][self.mapping]
            else:
                rhs = np.array([self.target.mul(int(self.mapping[a]), img_g)
                                for a in range(self.source.order)])
            if not np.array_equal(lhs, rhs):
                return False
        return True


def hom_from_gen_images(source: Group, target: Group,
                        images: dict[int, int]) -> Hom | None:
    """Extend generator images to a homomorphism, or None if inconsistent."""
    mapping = np.full(source.order, -1, dtype=np.int64)
    mapping[source.identity_idx] = target.identity_idx
    queue = [source.identity_idx]
    gens = [(g, images[g]) for g in dict.fromkeys(source.gen_idx)]
    while queue:
        a = queue.pop()
        fa = int(mapping[a])
        for g, fg in gens:
            b = source.mul(a, g)
            fb = target.mul(fa, fg)
            if mapping[b] < 0:
                mapping[b] = fb
                queue.append(b)
            elif mapping[b] != fb:
                return None
    return Hom(source, target, mapping)


def _coset_partition(G: Group, H: Subgroup) -> tuple[np.ndarray, list[int]]:
    """Right cosets H*x: returns (coset_of array, list of coset min-reps),
    cosets numbered by ascending minimal element."""
    arr = H.indices()
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    t = G.rmul
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        if t is not None:
            members = t[x, arr]
        else:
            prods = G._E[x][G._E[arr]]
            members = G.rows_to_indices(prods)
        coset_of[members] = len(reps)
        reps.append(x)
    return coset_of, reps


def coset_action(G: Group, H: Subgroup, label: str = "") -> tuple[Group, Hom]:
    """Permutation action of G on the right cosets of H."""
    coset_of, reps = _coset_partition(G, H)
    n_cosets = len(reps)
    rep_arr = np.array(reps, dtype=np.int64)

    def action_perm(g: int) -> Perm:
        t = G.rmul
        if t is not None:
            moved = t[g, rep_arr]
        else:
            prods = G._E[g][G._E[rep_arr]]
            moved = G.rows_to_indices(prods)
        return tuple(int(coset_of[m]) for m in moved)

    images = [action_perm(g) for g in G.gen_idx]
    Q = generate(images, degree=n_cosets, label=label, caps=G.caps)
    img_idx = {g: Q.index_of(p) for g, p in zip(G.gen_idx, images)}
    hom = hom_from_gen_images(G, Q, img_idx)
    if hom is None:
        raise AssertionError("coset action failed to define a homomorphism")
    return Q, hom


def quotient(G: Group, N: Subgroup, label: str = "") -> tuple[Group, Hom]:
    """G/N as a permutation group on the right cosets of N, plus projection."""
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal, cannot form quotient")
    Q, hom = coset_action(G, N, label=label or f"{G.label}/N")
    if Q.order * N.order != G.order:
        raise AssertionError("quotient order mismatch")
    return Q, hom


def as_group(H: Subgroup, label: str = "") -> tuple[Group, np.ndarray]:
    """Realize a subgroup as a standalone Group on the same points.

    Returns (group, embed) where embed[i] is the parent index of element i.
    """
    G = H.parent
    embed = H.indices()
    rows = G._E[embed]
    gens = [G.perm(g) for g in H.gens] or [perm_identity(G.degree)]
    K = Group(rows, gens, label=label or f"sub{H.order}", caps=G.caps)
    return K, embed


def direct_product(A: Group, B: Group, label: str = "") -> Group:
    """A x B acting on the disjoint union of the two point sets."""
    da, db = A.degree, B.degree
    gens: list[Perm] = []
    for g in A.generators:
        gens.append(tuple(g) + tuple(range(da, da + db)))
    for g in B.generators:
        gens.append(tuple(range(da)) + tuple(v + da for v in g))
    return generate(gens, degree=da + db, label=label or f"{A.label}x{B.label}",
                    caps=A.caps)


# ---------------------------------------------------------------------------
# commutator conditions and automizers


def triple_commutator_in(G: Group, Q: Subgroup, x: int, R: Subgroup | None) -> bool:
    """True iff [a, x, x] lies in R for every a in Q (R=None means trivial)."""
    for s in Q.gens:
        if G.conj(s, x) not in Q.elems:
            raise NotNormalized("element does not normalize the subgroup")
    target = R.elems if R is not None else {G.identity_idx}
    for a in Q.elems:
        c1 = G.comm(a, x)
        c2 = G.comm(c1, x)
        if c2 not in target:
            return False
    return True


def commutator_in(G: Group, Q: Subgroup, x: int, R: Subgroup) -> bool:
    """[Q, x] <= R, assuming R normal in Q (generator check suffices then)."""
    return all(G.comm(s, x) in R.elems for s in Q.gens)


class ActionMap:
    """Map from a subset of G (by index) onto a small quotient-action group."""

    def __init__(self, G: Group, domain: np.ndarray, target: Group,
                 images: dict[int, int]):
        self.G = G
        self.domain = domain
        self.target = target
        self._images = images

    def apply(self, g: int) -> int:
        return self._images[g]


def action_on_subgroup(G: Group, actors: np.ndarray, Q: Subgroup,
                       label: str = "") -> tuple[Group, ActionMap]:
    """Permutation images of `actors` acting by conjugation on Q's elements.

    The image group is the automizer when actors = N_G(Q).
    """
    q_list = sorted(Q.elems)
    pos = {q: i for i, q in enumerate(q_list)}
    images: dict[int, int] = {}
    perms: dict[int, Perm] = {}
    rows: dict[Perm, None] = {}
    for n in actors:
        n = int(n)
        pm = tuple(pos[G.conj(q, n)] for q in q_list)
        rows.setdefault(pm, None)
        perms[n] = pm
    A = group_from_rows(np.array(list(rows), dtype=_DTYPE), label=label, caps=G.caps)
    for n, pm in perms.items():
        images[n] = A.index_of(pm)
    return A, ActionMap(G, actors, A, images)


def induced_automizer(G: Group, Q: Subgroup) -> tuple[Group, ActionMap]:
    """N_G(Q)/C_G(Q) acting faithfully on the elements of Q."""
    n_idx = normalizer_indices(G, Q)
    A, amap = action_on_subgroup(G, n_idx, Q, label=f"automizer{Q.order}")
    return A, amap


def action_on_cosets_of_pair(G: Group, actors: np.ndarray, Q: Subgroup,
                             R: Subgroup) -> tuple[Group, ActionMap]:
    """Images of `actors` acting on the coset space Q/R (R normal in Q)."""
    q_arr = Q.indices()
    r_arr = R.indices()
    coset_of = {}
    reps = []
    t = G.rmul
    for x in sorted(Q.elems):
        if x in coset_of:
            continue
        if t is not None:
            members = t[x, r_arr]
        else:
            members = G.rows_to_indices(G._E[x][G._E[r_arr]])
        cid = len(reps)
        for m in members:
            coset_of[int(m)] = cid
        reps.append(x)
    images: dict[int, int] = {}
    rows: dict[Perm, None] = {}
    perms: dict[int, Perm] = {}
    for n in actors:
        n = int(n)
        pm = tuple(coset_of[G.conj(r, n)] for r in reps)
        rows.setdefault(pm, None)
        perms[n] = pm
    A = group_from_rows(np.array(list(rows), dtype=_DTYPE),
                        label=f"aut({Q.order}/{R.order})", caps=G.caps)
    for n, pm in perms.items():
        images[n] = A.index_of(pm)
    return A, ActionMap(G, actors, A, images)


def describe_subgroup(H: Subgroup) -> dict:
    G = H.parent
    return {
        "order": H.order,
        "generators": [format_cycles(G.perm(g)) for g in H.gens],
    }
