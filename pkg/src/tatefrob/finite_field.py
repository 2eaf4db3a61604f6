"""Finite fields F_{p^r}, univariate polynomials over them, embeddings, roots.

Elements of a prime field are stored as plain ints. Elements of F_{p^r} with
r > 1 carry a numpy coefficient vector (constant term first) reduced modulo
the field modulus. Polynomials store a 2-D array of shape (len, r) so that
their arithmetic vectorizes over both the polynomial and the field variable.
"""

from __future__ import annotations

import functools
import random
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InternalInconsistency, NonPrime, NotIrreducible

# Fields at most this large are searched exhaustively in poly_roots.
EXHAUSTIVE_ROOT_LIMIT = 10**4

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24."""
    n = int(n)
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    n = abs(int(n))
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- dense F_p[x] helpers on python lists (constant term first) -------------

def _lp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _lp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return _lp_trim(q), _lp_trim(a[:db])


def _lp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _lp_trim([c % p for c in out])


def _lp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _lp_trim([(x - y) % p for x, y in zip(a, b)])


class FiniteField:
    """The field F_p[t]/(modulus) of size p**r.

    ``modulus`` is a monic coefficient sequence, constant term first. Primality
    of ``p`` and irreducibility of the modulus are checked on construction.
    """

    def __init__(self, p: int, modulus: Sequence[int] = (0, 1)):
        p = int(p)
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        m = tuple(int(c) % p for c in modulus)
        if len(m) < 2 or m[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.p = p
        self.modulus = m
        self.r = len(m) - 1
        self.order = p**self.r
        self._dtype = object if 2 * max(self.r, 64) * p * p >= 2**62 else np.int64
        self._frob_cache: dict[int, np.ndarray] = {}
        if self.r > 1:
            r = self.r
            red = np.zeros((r, r - 1), dtype=self._dtype)
            v = [(-c) % p for c in m[:r]]
            for k in range(r - 1):
                red[:, k] = v
                top = v[-1]
                v = [0] + v[:-1]
                v = [(v[i] - top * m[i]) % p for i in range(r)]
            self._red = red
            k = np.arange(2 * r - 1)[:, None] - np.arange(r)[None, :]
            self._tmask = ((k >= 0) & (k < r)).astype(self._dtype)
            self._tidx = np.clip(k, 0, r - 1)
            if not _is_irreducible_mod_p(p, m):
                raise NotIrreducible(f"modulus {m} is reducible over F_{p}")

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r})"

    def __len__(self):
        return self.order

    # -- raw arithmetic (ints for r == 1, vectors otherwise) ------------------
    def _raw(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} used in {self}")
            return value._v
        p = self.p
        if self.r == 1:
            if isinstance(value, (int, np.integer)):
                return int(value) % p
            seq = list(value)
            if len(seq) != 1:
                raise ValueError("prime field element needs one coefficient")
            return int(seq[0]) % p
        v = np.zeros(self.r, dtype=self._dtype)
        if isinstance(value, (int, np.integer)):
            v[0] = int(value) % p
            return v
        seq = [int(c) % p for c in value]
        if len(seq) > self.r:
            raise ValueError(f"too many coefficients for {self}")
        v[: len(seq)] = seq
        return v

    def _mul(self, u, v):
        p = self.p
        if self.r == 1:
            return u * v % p
        c = np.convolve(u, v) % p
        r = self.r
        return (c[:r] + self._red @ c[r:]) % p

    def _inv(self, u):
        p = self.p
        if self.r == 1:
            if u == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(u, -1, p)
        a = _lp_trim([int(c) for c in u])
        if not a:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = list(self.modulus), a
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, rem = _lp_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _lp_sub(s0, _lp_mul(q, s1, p), p)
        c = pow(r1[0], -1, p)
        return self._raw([x * c % p for x in s1])

    def _is_zero(self, u) -> bool:
        if self.r == 1:
            return u == 0
        return not u.any()

    def _key(self, u):
        if self.r == 1:
            return u
        if self._dtype is object:
            return tuple(int(c) for c in u)
        return u.tobytes()

    # batch ops on arrays whose last axis has length r
    def _bmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        if self.r == 1:
            return a * b % p
        r = self.r
        a, b = np.broadcast_arrays(a, b)
        c = np.zeros(a.shape[:-1] + (2 * r - 1,), dtype=self._dtype)
        for i in range(r):
            c[..., i : i + r] += a[..., i : i + 1] * b
            if self._dtype is not object and i % 64 == 63:
                c %= p
        return self._reduce(c % p)

    def _reduce(self, c: np.ndarray) -> np.ndarray:
        r = self.r
        return (c[..., :r] + (c[..., r:] % self.p) @ self._red.T) % self.p

    # -- public constructors ---------------------------------------------------
    def __call__(self, value=0) -> "FieldElement":
        return FieldElement(self, self._raw(value))

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def gen(self) -> "FieldElement":
        """The class of t in F_p[t]/(modulus)."""
        if self.r == 1:
            return self(-self.modulus[0])
        return self([0, 1])

    def from_index(self, i: int) -> "FieldElement":
        """Element whose base-p digits (constant term least significant) are i."""
        if self.r == 1:
            return self(i)
        digits = []
        for _ in range(self.r):
            i, d = divmod(i, self.p)
            digits.append(d)
        return self(digits)

    def elements(self) -> Iterator["FieldElement"]:
        for i in range(self.order):
            yield self.from_index(i)

    def _all_raw(self) -> np.ndarray:
        """Every element as an (order, r) array in index order."""
        idx = np.arange(self.order, dtype=np.int64)
        cols = []
        for _ in range(self.r):
            cols.append(idx % self.p)
            idx = idx // self.p
        return np.stack(cols, axis=1).astype(self._dtype)

    def random_element(self, rng: random.Random) -> "FieldElement":
        return self.from_index(rng.randrange(self.order))

    # -- Frobenius -------------------------------------------------------------
    def _frob_matrix(self, s: int) -> np.ndarray:
        s %= self.r
        mat = self._frob_cache.get(s)
        if mat is None:
            if s == 0:
                mat = np.eye(self.r, dtype=self._dtype)
            elif s == 1:
                x_p = self.gen() ** self.p
                cols = [self.one()]
                for _ in range(self.r - 1):
                    cols.append(cols[-1] * x_p)
                mat = np.stack([c._v for c in cols], axis=1)
            else:
                mat = self._frob_matrix(1)
                acc = self._frob_matrix(1)
                for _ in range(s - 1):
                    acc = (mat @ acc) % self.p
                mat = acc
            self._frob_cache[s] = mat
        return mat

    def _frob(self, u, s: int):
        if self.r == 1 or s % self.r == 0:
            return u
        return (self._frob_matrix(s) @ u) % self.p


class FieldElement:
    __slots__ = ("field", "_v")

    def __init__(self, field: FiniteField, raw):
        self.field = field
        self._v = raw

    @property
    def coeffs(self) -> tuple[int, ...]:
        if self.field.r == 1:
            return (self._v,)
        return tuple(int(c) for c in self._v)

    def index(self) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.field.p + c
        return out

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                return None
            return other._v
        if isinstance(other, (int, np.integer)):
            return self.field._raw(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, (self._v + o) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, (self._v - o) % self.field.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, (o - self._v) % self.field.p)

    def __neg__(self):
        return FieldElement(self.field, (-self._v) % self.field.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self._v, o))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self._v))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self._v, self.field._inv(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(o, self.field._inv(self._v)))

    def __pow__(self, e: int):
        e = int(e)
        F = self.field
        if e < 0:
            return self.inverse() ** (-e)
        if F.r == 1:
            return FieldElement(F, pow(self._v, e, F.p))
        result = F._raw(1)
        base = self._v
        while e:
            if e & 1:
                result = F._mul(result, base)
            e >>= 1
            if e:
                base = F._mul(base, base)
        return FieldElement(F, result)

    def frobenius(self, s: int = 1) -> "FieldElement":
        """self ** (p ** s), computed through the linear Frobenius map."""
        return FieldElement(self.field, self.field._frob(self._v, s))

    def is_zero(self) -> bool:
        return self.field._is_zero(self._v)

    def __bool__(self):
        return not self.is_zero()

    def key(self):
        return self.field._key(self._v)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.r == 1:
            return self._v == o
        return bool(np.array_equal(self._v, o))

    def __hash__(self):
        return hash((self.field.p, self.field.r, self.key()))

    def __repr__(self):
        if self.field.r == 1:
            return str(self._v)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else (f"{c}*t" if i == 1 else f"{c}*t^{i}"))
        return "+".join(reversed(terms)) or "0"


def frobenius_power(e: FieldElement, q: int) -> FieldElement:
    """Return e**q for q a positive power of the characteristic."""
    p = e.field.p
    s, qq = 0, int(q)
    while qq > 1 and qq % p == 0:
        qq //= p
        s += 1
    if qq != 1 or s < 1:
        raise ValueError(f"{q} is not a positive power of {p}")
    return e.frobenius(s)


# -- polynomials --------------------------------------------------------------

class Poly:
    """Univariate polynomial over a FiniteField, coefficients constant first."""

    __slots__ = ("field", "c")

    def __init__(self, field: FiniteField, coeffs: Iterable = ()):
        rows = [field._raw(c) for c in coeffs]
        if field.r == 1:
            arr = np.array(rows, dtype=field._dtype).reshape(len(rows), 1)
        elif rows:
            arr = np.stack(rows)
        else:
            arr = np.zeros((0, field.r), dtype=field._dtype)
        self.field = field
        self.c = _trim(arr)

    @classmethod
    def _make(cls, field: FiniteField, arr: np.ndarray) -> "Poly":
        out = cls.__new__(cls)
        out.field = field
        out.c = _trim(arr)
        return out

    @classmethod
    def x(cls, field: FiniteField) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field: FiniteField, c) -> "Poly":
        return cls(field, [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return len(self.c) == 0

    def __len__(self):
        return len(self.c)

    def coeff(self, i: int) -> FieldElement:
        if i < len(self.c):
            return self._elt(self.c[i])
        return self.field.zero()

    def _elt(self, row) -> FieldElement:
        if self.field.r == 1:
            return FieldElement(self.field, int(row[0]))
        return FieldElement(self.field, row.copy())

    @property
    def coeffs(self) -> list[FieldElement]:
        return [self._elt(row) for row in self.c]

    def lc(self) -> FieldElement:
        if self.is_zero():
            return self.field.zero()
        return self._elt(self.c[-1])

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (FieldElement, int, np.integer)):
            return Poly(self.field, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = _pad(self.c, o.c)
        return Poly._make(self.field, (a + b) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = _pad(self.c, o.c)
        return Poly._make(self.field, (a - b) % self.field.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Poly._make(self.field, (-self.c) % self.field.p)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, (FieldElement, int, np.integer)):
            s = F._raw(other)
            if F.r == 1:
                return Poly._make(F, self.c * s % F.p)
            return Poly._make(F, F._bmul(self.c, s[None, :]))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._make(F, _pmul(F, self.c, o.c))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = _pdivmod(self.field, self.c, o.c)
        return Poly._make(self.field, q), Poly._make(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Poly) else other
        if o is None:
            return NotImplemented
        return o.field == self.field and np.array_equal(self.c, o.c)

    def __hash__(self):
        return hash((self.field, self.c.tobytes() if self.c.dtype != object else tuple(map(tuple, self.c.tolist()))))

    def __pow__(self, e: int):
        result = Poly(self.field, [1])
        base = self
        e = int(e)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        e = int(e)
        result = Poly(self.field, [1]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.lc().inverse()

    def derivative(self) -> "Poly":
        if len(self.c) <= 1:
            return Poly(self.field, [])
        k = np.arange(1, len(self.c), dtype=self.field._dtype)[:, None] % self.field.p
        return Poly._make(self.field, self.c[1:] * k % self.field.p)

    def __call__(self, x) -> FieldElement:
        F = self.field
        x = F(x) if not isinstance(x, FieldElement) else x
        acc = F.zero()
        for row in self.c[::-1]:
            acc = acc * x + self._elt(row)
        return acc

    def _eval_batch(self, xs: np.ndarray) -> np.ndarray:
        """Evaluate at every row of an (n, r) raw array; returns raw (n, r)."""
        F = self.field
        acc = np.zeros_like(xs)
        for row in self.c[::-1]:
            acc = (F._bmul(acc, xs) + row[None, :]) % F.p
        return acc

    def map_coeffs(self, emb: "Embedding") -> "Poly":
        return Poly(emb.big, [emb(c) for c in self.coeffs])

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                cs = f"({c})" if self.field.r > 1 else str(c)
                terms.append(cs if i == 0 else (f"{cs}*x" if i == 1 else f"{cs}*x^{i}"))
        return " + ".join(reversed(terms))


def _trim(arr: np.ndarray) -> np.ndarray:
    n = len(arr)
    while n and not arr[n - 1].any():
        n -= 1
    return arr[:n]


def _pad(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = max(len(a), len(b))
    if len(a) < n:
        a = np.concatenate([a, np.zeros((n - len(a), a.shape[1]), dtype=a.dtype)])
    if len(b) < n:
        b = np.concatenate([b, np.zeros((n - len(b), b.shape[1]), dtype=b.dtype)])
    return a, b


def _pmul(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, F.r), dtype=F._dtype)
    p = F.p
    if F.r == 1:
        x, y = a[:, 0], b[:, 0]
        if F._dtype is not object and min(len(x), len(y)) * p * p >= 2**62:
            x, y = x.astype(object), y.astype(object)
        return (np.convolve(x, y) % p).astype(F._dtype).reshape(-1, 1)
    if len(a) < len(b):
        a, b = b, a
    t = b[:, F._tidx] * F._tmask  # (lb, 2r-1, r)
    prod = np.einsum("jkb,ib->ijk", t, a) % p  # (la, lb, 2r-1)
    la, lb = len(a), len(b)
    out = np.zeros((la + lb - 1, 2 * F.r - 1), dtype=F._dtype)
    for j in range(lb):
        out[j : j + la] += prod[:, j]
    return F._reduce(out % p)


def _pdivmod(F: FiniteField, a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = F.p
    db = len(b) - 1
    if len(a) <= db:
        return np.zeros((0, F.r), dtype=F._dtype), a.copy()
    inv = F._inv(int(b[-1, 0]) if F.r == 1 else b[-1])
    rem = a.copy()
    q = np.zeros((len(a) - db, F.r), dtype=F._dtype)
    if F.r == 1:
        bb = b[:, 0]
        rr = rem[:, 0]
        for k in range(len(a) - 1, db - 1, -1):
            c = int(rr[k]) * inv % p
            if c:
                q[k - db, 0] = c
                rr[k - db : k + 1] = (rr[k - db : k + 1] - c * bb) % p
        return q, rem[:db]
    monic_b = b if _is_one(F, b[-1]) else F._bmul(b, inv[None, :])
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c.any():
            q[k - db] = c
            rem[k - db : k + 1] = (rem[k - db : k + 1] - F._bmul(c[None, :], monic_b)) % p
    if not _is_one(F, b[-1]):
        q = F._bmul(q, inv[None, :])
    return q, rem[:db]


def _is_one(F: FiniteField, row) -> bool:
    return int(row[0]) == 1 and not row[1:].any()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly(F, [1]), Poly(F, [])
    t0, t1 = Poly(F, []), Poly(F, [1])
    while not r1.is_zero():
        q, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0.lc().inverse()
    return r0 * inv, s0 * inv, t0 * inv


def _lp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    return _lp_divmod(_lp_mul(a, b, p), m, p)[1]


def _lp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _lp_divmod(a, b, p)[1]
    return a


def _has_root_mod_p(p: int, modulus: Sequence[int]) -> bool:
    if p > 2**20:
        return False
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(modulus):
        acc = (acc * xs + c) % p
    return not acc.all()


def _is_irreducible_mod_p(p: int, modulus: Sequence[int]) -> bool:
    """Ben-Or test over the prime field on plain integer lists."""
    m = _lp_trim([int(c) % p for c in modulus])
    d = len(m) - 1
    if d > 1 and _has_root_mod_p(p, m):
        return False
    x = [0, 1]
    h = x
    for _ in range(d // 2):
        # h <- h^p mod m
        acc, base, e = [1], h, p
        while e:
            if e & 1:
                acc = _lp_mulmod(acc, base, m, p)
            e >>= 1
            if e:
                base = _lp_mulmod(base, base, m, p)
        h = acc
        if len(_lp_gcd(m, _lp_sub(h, x, p), p)) > 1:
            return False
    return True


def is_irreducible(f: Poly) -> bool:
    """Ben-Or irreducibility test over f's field."""
    if f.degree <= 0:
        return False
    F = f.field
    f = f.monic()
    x = Poly.x(F)
    h = x
    for _ in range(f.degree // 2):
        h = h.powmod(F.order, f)
        if poly_gcd(h - x, f).degree > 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def make_field(p: int, r: int = 1) -> FiniteField:
    """F_{p^r} with the lowest monic irreducible modulus.

    Candidates x^r + c_{r-1} x^{r-1} + ... + c_0 are ordered by the integer
    sum(c_i p^i), i.e. lexicographically from c_{r-1} down to c_0. The prime
    field uses the modulus x, so its generator is 0.
    """
    p, r = int(p), int(r)
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be >= 1")
    if r == 1:
        return FiniteField(p, (0, 1))
    for idx in range(1, p**r):
        tail = []
        i = idx
        for _ in range(r):
            i, d = divmod(i, p)
            tail.append(d)
        if tail[0] == 0:
            continue
        if _is_irreducible_mod_p(p, tail + [1]):
            return FiniteField(p, tail + [1])
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- embeddings -----------------------------------------------------------------

class Embedding:
    """Field homomorphism small -> big fixed by the image of small's generator."""

    def __init__(self, small: FiniteField, big: FiniteField, image: FieldElement | None):
        self.small = small
        self.big = big
        self.image = image
        if small.r > 1:
            cols = [big.one()]
            for _ in range(small.r - 1):
                cols.append(cols[-1] * image)
            self._m = np.stack([c._v for c in cols], axis=1) if big.r > 1 else None

    def __call__(self, e: FieldElement) -> FieldElement:
        if isinstance(e, (int, np.integer)):
            return self.big(int(e))
        if self.small.r == 1:
            return self.big(e._v)
        if self.small == self.big:
            return e
        v = (self._m @ e._v) % self.big.p
        return FieldElement(self.big, v)


@functools.lru_cache(maxsize=None)
def embedding(small: FiniteField, big: FiniteField) -> Embedding:
    if small.p != big.p or big.r % small.r:
        raise ValueError(f"{small} does not embed in {big}")
    if small.r == 1:
        return Embedding(small, big, None)
    if small == big:
        return Embedding(small, big, small.gen())
    Fp = make_field(small.p, 1)
    roots = poly_roots(Poly(Fp, small.modulus), big)
    image = min(roots, key=lambda e: e.index())
    return Embedding(small, big, image)


# -- square roots ---------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _nonresidue(F: FiniteField) -> FieldElement:
    half = (F.order - 1) // 2
    rng = random.Random(F.order)
    while True:
        u = F.random_element(rng)
        if u and u ** half != 1:
            return u


def sqrt(u: FieldElement) -> FieldElement | None:
    """A square root of u, or None when u is not a square (Tonelli-Shanks)."""
    F = u.field
    if u.is_zero():
        return u
    if F.p == 2:
        return u.frobenius(F.r - 1)
    t, s = F.order - 1, 0
    while t % 2 == 0:
        t //= 2
        s += 1
    if u ** ((F.order - 1) // 2) != 1:
        return None
    z = _nonresidue(F) ** t
    x = u ** ((t + 1) // 2)
    b = u ** t
    m = s
    while b != 1:
        i, b2 = 0, b
        while b2 != 1:
            b2 = b2 * b2
            i += 1
        g = z
        for _ in range(m - i - 1):
            g = g * g
        x, z = x * g, g * g
        b, m = b * z, i
    return x


def solve_artin_schreier(c: FieldElement) -> FieldElement | None:
    """A solution of z^2 + z = c in characteristic 2, or None."""
    F = c.field
    if F.p != 2:
        raise ValueError("Artin-Schreier equations are solved in characteristic 2 only")
    r = F.r
    if r == 1:
        return F.zero() if c.is_zero() else None
    M = (F._frob_matrix(1).astype(np.int64) + np.eye(r, dtype=np.int64)) % 2
    aug = np.concatenate([M, np.array(c.coeffs, dtype=np.int64)[:, None]], axis=1)
    pivots = []
    row = 0
    for col in range(r):
        hit = np.nonzero(aug[row:, col])[0]
        if not len(hit):
            continue
        k = row + hit[0]
        aug[[row, k]] = aug[[k, row]]
        mask = aug[:, col].astype(bool)
        mask[row] = False
        aug[mask] ^= aug[row]
        pivots.append(col)
        row += 1
        if row == r:
            break
    if aug[row:, -1].any():
        return None
    z = [0] * r
    for i, col in enumerate(pivots):
        z[col] = int(aug[i, -1])
    return F(z)


# -- root finding and factorization ------------------------------------------------

def poly_roots(f: Poly, ext: FiniteField | None = None) -> list[FieldElement]:
    """All distinct roots of f in ext (default: f's own field), sorted by index."""
    base = f.field
    ext = base if ext is None else ext
    if base != ext:
        f = f.map_coeffs(embedding(base, ext))
    if f.is_zero():
        raise ValueError("every element is a root of the zero polynomial")
    if f.degree <= 0:
        return []
    f = f.monic()
    if f.degree == 1:
        return [-f.coeff(0)]
    if ext.order <= EXHAUSTIVE_ROOT_LIMIT:
        vals = f._eval_batch(ext._all_raw())
        hits = np.nonzero(~vals.any(axis=1))[0]
        return [ext.from_index(int(i)) for i in hits]
    x = Poly.x(ext)
    g = poly_gcd(f, x.powmod(ext.order, f) - x)
    roots = _split_linear(g, random.Random(0))
    return sorted(roots, key=lambda e: e.index())


def one_root(g: Poly, rng: random.Random | None = None) -> FieldElement:
    """One root of g, which must split into distinct linear factors."""
    rng = rng or random.Random(0)
    g = g.monic()
    while g.degree > 1:
        d = _random_split(g, rng)
        other = g // d
        g = d if d.degree <= other.degree else other
    if g.degree != 1:
        raise ValueError("polynomial has no roots")
    return -g.coeff(0)


def root_in_extension(g: Poly, ext: FiniteField) -> FieldElement:
    """A root in ext of g, irreducible over its own field F.

    The root is found in the subfield of degree deg(g) over F and pushed into
    ext through the cached embedding, which is much cheaper than splitting g
    over ext itself.
    """
    F = g.field
    e = g.degree
    if e == 1:
        return embedding(F, ext)(-g.monic().coeff(0))
    L = make_field(F.p, F.r * e)
    alpha = one_root(g.map_coeffs(embedding(F, L))) if L.order > EXHAUSTIVE_ROOT_LIMIT \
        else poly_roots(g, L)[0]
    alpha = embedding(L, ext)(alpha)
    # F -> L -> ext may differ from F -> ext by a power of Frobenius
    gx = g.map_coeffs(embedding(F, ext))
    for k in range(ext.r):
        beta = alpha.frobenius(k)
        if gx(beta).is_zero():
            return beta
    raise InternalInconsistency(f"no conjugate of the root of {g} is a root in {ext}")


def _split_linear(g: Poly, rng: random.Random) -> list[FieldElement]:
    if g.degree <= 0:
        return []
    if g.degree == 1:
        return [-g.monic().coeff(0)]
    d = _random_split(g, rng)
    return _split_linear(d, rng) + _split_linear(g // d, rng)


def _random_split(g: Poly, rng: random.Random, k: int = 1) -> Poly:
    """A proper monic factor of g, a product of distinct degree-k irreducibles."""
    F = g.field
    n = g.degree
    for _ in range(200):
        a = Poly(F, [F.random_element(rng) for _ in range(n)])
        if a.degree <= 0:
            continue
        if F.p == 2:
            t = a % g
            acc = t
            for _ in range(k * F.r - 1):
                t = (t * t) % g
                acc = acc + t
            d = poly_gcd(g, acc)
        else:
            h = a.powmod((F.order**k - 1) // 2, g) - 1
            d = poly_gcd(g, h)
        if 0 < d.degree < n:
            return d
    raise RuntimeError("equal-degree splitting failed repeatedly")


def distinct_degree_factorization(f: Poly) -> list[tuple[int, Poly]]:
    """[(k, g_k)] where g_k is the product of the degree-k irreducible factors of squarefree monic f."""
    F = f.field
    f = f.monic()
    x = Poly.x(F)
    h = x
    out = []
    k = 0
    while f.degree >= 2 * (k + 1):
        k += 1
        h = h.powmod(F.order, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((k, g))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.degree, f))
    return out


def factor_squarefree(f: Poly, rng: random.Random | None = None) -> list[Poly]:
    """Monic irreducible factors of a squarefree polynomial, sorted by (degree, coefficients)."""
    rng = rng or random.Random(0)
    factors = []
    for k, g in distinct_degree_factorization(f):
        stack = [g]
        while stack:
            h = stack.pop()
            if h.degree == k:
                factors.append(h)
                continue
            d = _random_split(h, rng, k)
            stack += [d, h // d]
    return sorted(factors, key=lambda g: (g.degree, [c.index() for c in reversed(g.coeffs)]))
