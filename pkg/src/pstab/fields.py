"""Small finite fields F_q (q = p^s) and exact matrix arithmetic over them.

Field elements are integers 0..q-1.  For s > 1 the integer encodes the
coefficient vector of a polynomial over F_p in base p (constant term =
least significant digit), reduced modulo the lexicographically least monic
irreducible polynomial of degree s.  Everything is table-driven, so q is
expected to stay small (hundreds).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BadParameters

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, s) with q = p^s, or raise BadParameters."""
    if q < 2:
        raise BadParameters(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            s = 0
            m = q
            while m % p == 0:
                m //= p
                s += 1
            if m != 1:
                raise BadParameters(f"{q} is not a prime power")
            return p, s
    raise BadParameters(f"{q} is not a prime power")


def _poly_mul_mod(a: list[int], b: list[int], mod_poly: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo monic mod_poly of degree s
    s = len(mod_poly) - 1
    for i in range(len(out) - 1, s - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(s):
                out[i - s + j] = (out[i - s + j] - c * mod_poly[j]) % p
    return out[:s]


def _irreducible_poly(p: int, s: int) -> list[int]:
    """Least monic irreducible polynomial of degree s over F_p.

    Coefficients little-endian, leading 1 included; 'least' in the base-p
    integer encoding of the non-leading coefficients.
    """
    from itertools import product

    def has_root_free_factor(coeffs):
        # brute force: irreducible iff no monic factor of degree 1..s//2
        def poly_from_int(k, d):
            return [(k // p**i) % p for i in range(d)] + [1]

        def divides(g, f):
            # trial division of f by monic g over F_p
            f = f[:]
            dg = len(g) - 1
            for i in range(len(f) - 1, dg - 1, -1):
                c = f[i]
                if c:
                    for j in range(dg + 1):
                        f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
            return all(c == 0 for c in f)

        for d in range(1, s // 2 + 1):
            for k in range(p**d):
                if divides(poly_from_int(k, d), list(coeffs) + [1]):
                    return False
        return True

    for k in range(p**s):
        coeffs = [(k // p**i) % p for i in range(s)]
        if has_root_free_factor(coeffs):
            return coeffs + [1]
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class FqField:
    """The finite field with q = p^s elements."""

    q: int
    p: int
    s: int
    modulus: tuple[int, ...]  # little-endian coefficients, monic
    _mul: tuple[tuple[int, ...], ...] = field(repr=False)
    _inv: tuple[int, ...] = field(repr=False)

    @staticmethod
    def of(q: int) -> "FqField":
        return _field_cache(q)

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        out = 0
        mult = 1
        for _ in range(self.s):
            out += ((a % self.p + b % self.p) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.s == 1:
            return (-a) % self.p
        out = 0
        mult = 1
        for _ in range(self.s):
            out += ((-(a % self.p)) % self.p) * mult
            a //= self.p
            mult *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def frobenius(self, a: int) -> int:
        """a^p (the field automorphism x -> x^p)."""
        return self.pow(a, self.p)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise BadParameters("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def element_of_order(self, k: int) -> int:
        """Least element of multiplicative order exactly k."""
        if (self.q - 1) % k != 0:
            raise BadParameters(f"F_{self.q}^* has no element of order {k}")
        for a in range(1, self.q):
            if self.mult_order(a) == k:
                return a
        raise AssertionError("unreachable: cyclic group must contain the element")

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=None)
def _field_cache(q: int) -> FqField:
    p, s = factor_prime_power(q)
    if q > 1024:
        raise BadParameters(f"field size {q} beyond table-driven limit 1024")
    if s == 1:
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
        inv = tuple(0 if a == 0 else pow(a, p - 2, p) for a in range(p))
        return FqField(q, p, s, (0, 1), mul, inv)
    mod_poly = _irreducible_poly(p, s)

    def to_poly(a):
        return [(a // p**i) % p for i in range(s)]

    def from_poly(cs):
        return sum(c * p**i for i, c in enumerate(cs))

    mul_rows = []
    for a in range(q):
        pa = to_poly(a)
        row = [from_poly(_poly_mul_mod(pa, to_poly(b), mod_poly, p)) for b in range(q)]
        mul_rows.append(tuple(row))
    mul = tuple(mul_rows)
    inv_list = [0] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul[a][b] == 1:
                inv_list[a] = b
                break
    return FqField(q, p, s, tuple(mod_poly), mul, tuple(inv_list))


# ---------------------------------------------------------------------------
# matrices (tuples of row tuples); vectors are row vectors acting as v @ M


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(F: FqField, A: Matrix, B: Matrix) -> Matrix:
    n, m, k = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for t in range(k):
                acc = F.add(acc, F.mul(A[i][t], B[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scalar(F: FqField, c: int, n: int) -> Matrix:
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


def mat_scale(F: FqField, c: int, A: Matrix) -> Matrix:
    return tuple(tuple(F.mul(c, x) for x in row) for row in A)


def vec_mat(F: FqField, v: Vector, M: Matrix) -> Vector:
    n = len(M[0])
    out = []
    for j in range(n):
        acc = 0
        for i in range(len(v)):
            acc = F.add(acc, F.mul(v[i], M[i][j]))
        out.append(acc)
    return tuple(out)


def mat_det(F: FqField, A: Matrix) -> int:
    n = len(A)
    M = [list(row) for row in A]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = F.neg(det)
        det = F.mul(det, M[col][col])
        inv = F.inv(M[col][col])
        for r in range(col + 1, n):
            factor = F.mul(M[r][col], inv)
            if factor:
                for c in range(col, n):
                    M[r][c] = F.sub(M[r][c], F.mul(factor, M[col][c]))
    return det


def mat_inv(F: FqField, A: Matrix) -> Matrix:
    n = len(A)
    M = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise BadParameters("singular matrix has no inverse")
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
        inv = F.inv(M[col][col])
        M[col] = [F.mul(inv, x) for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[col])]
    return tuple(tuple(row[n:]) for row in M)


def mat_conj_transpose(F: FqField, A: Matrix, power: int) -> Matrix:
    """Transpose with entrywise x -> x^power (power = q for Hermitian forms)."""
    n, m = len(A), len(A[0])
    return tuple(tuple(F.pow(A[i][j], power) for i in range(n)) for j in range(m))


def vec_to_index(v: Vector, q: int) -> int:
    out = 0
    for c in reversed(v):
        out = out * q + c
    return out


def index_to_vec(idx: int, q: int, n: int) -> Vector:
    out = []
    for _ in range(n):
        out.append(idx % q)
        idx //= q
    return tuple(out)
