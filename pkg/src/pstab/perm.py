"""Permutations as tuples of point images, 0-based.

Composition convention: ``compose(a, b)`` applies ``a`` first, then ``b``,
so ``compose(a, b)[i] == b[a[i]]`` and conjugation ``a^g = g^-1 a g`` moves
the support of ``a`` by ``g``.  This matches writing actions on the right.
"""

from __future__ import annotations

from math import lcm

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_perm(seq) -> bool:
    n = len(seq)
    seen = [False] * n
    for v in seq:
        if not isinstance(v, int) or v < 0 or v >= n or seen[v]:
            return False
        seen[v] = True
    return True


def compose(a: Perm, b: Perm) -> Perm:
    """Apply a, then b."""
    return tuple(b[i] for i in a)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def conjugate(a: Perm, g: Perm) -> Perm:
    """g^-1 * a * g."""
    ginv = inverse(g)
    return tuple(g[a[ginv[i]]] for i in range(len(a)))


def perm_order(a: Perm) -> int:
    cs = cycles(a)
    return lcm(*(len(c) for c in cs)) if cs else 1


def cycles(a: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its least point, sorted."""
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start] or a[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        j = a[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = a[j]
        out.append(tuple(cyc))
    return out


def format_cycles(a: Perm) -> str:
    cs = cycles(a)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cs)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation like ``(0 1 2)(3 4)``; ``()`` is the identity.

    Raises ValueError with a positioned message on malformed input.
    """
    images = list(range(degree))
    touched = set()
    i = 0
    n = len(text)
    saw_any = False
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ValueError(f"col {i}: expected '(' in cycle string {text!r}")
        j = text.find(")", i)
        if j < 0:
            raise ValueError(f"col {i}: unclosed cycle in {text!r}")
        body = text[i + 1 : j].replace(",", " ").split()
        pts = []
        for tok in body:
            try:
                p = int(tok)
            except ValueError:
                raise ValueError(f"col {i}: non-integer point {tok!r} in {text!r}")
            if p < 0 or p >= degree:
                raise ValueError(f"col {i}: point {p} out of range for degree {degree}")
            if p in touched:
                raise ValueError(f"col {i}: point {p} repeated across cycles")
            touched.add(p)
            pts.append(p)
        saw_any = True
        for k, p in enumerate(pts):
            images[p] = pts[(k + 1) % len(pts)]
        i = j + 1
    if not saw_any and text.strip() not in ("", "()"):
        raise ValueError(f"cannot parse permutation {text!r}")
    return tuple(images)
