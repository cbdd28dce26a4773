"""Finite field tower F_p < F_q < F_{q^2} < F_{q^4} with exact arithmetic.

The whole tower lives in one ambient field F_{p^{4e}} represented as
F_p[x]/(f) where f is the lexicographically least monic irreducible
polynomial of degree 4e over F_p.  Subfields are the fixed sets of the
q-power Frobenius, so no embedding bookkeeping is ever needed.

Elements are encoded as integers: the coefficient vector (c_0, ..., c_{4e-1})
in the power basis maps to sum c_i * p^i.  Multiplication uses lazily built
discrete log/exp tables (the ambient field is capped at 2^16 elements).
"""

from __future__ import annotations

from functools import lru_cache

MAX_FIELD_SIZE = 1 << 16


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


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


# ---------------------------------------------------------------------------
# dense univariate arithmetic over F_p, used only for tower construction

def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k]
        if c:
            a[k] = 0
            for i in range(df):
                a[k - df + i] = (a[k - df + i] - c * f[i]) % p
    return _ptrim(a[:df])


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p) if a and b else []


def _ppowmod(a, n, f, p):
    r = [1]
    while n:
        if n & 1:
            r = _pmulmod(r, a, f, p)
        a = _pmulmod(a, a, f, p)
        n >>= 1
    return r


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # reduce a mod b (b made monic on the fly)
        inv = pow(b[-1], p - 2, p)
        bm = [(x * inv) % p for x in b]
        a = _pmod(a, bm, p)
        a, b = b, a
    return a


def _is_irreducible(f, p):
    d = len(f) - 1
    if d == 0:
        return False
    x = [0, 1]
    g = x
    powers = {}
    for k in range(1, d + 1):
        g = _ppowmod(g, p, f, p)
        powers[k] = g
    if powers[d] != _pmod(x, f, p):
        return False
    for r in _prime_factors(d):
        h = list(powers[d // r])
        # h - x
        while len(h) < 2:
            h.append(0)
        h[1] = (h[1] - 1) % p
        _ptrim(h)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def least_irreducible(p: int, d: int) -> list[int]:
    """Lexicographically least monic irreducible of degree d over F_p.

    Ordering is on the tuple (a_{d-1}, ..., a_1, a_0) of non-leading
    coefficients, read from the highest degree down.
    """
    for m in range(p ** d):
        digits = []
        r = m
        for _ in range(d):
            digits.append(r % p)
            r //= p
        # digits[0] is a_0, ..., digits[d-1] is a_{d-1}
        f = digits + [1]
        if _is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible of degree {d} over F_{p}")  # unreachable


class TowerField:
    """The ambient field F_{p^{4e}} containing F_p, F_q, F_{q^2}, F_{q^4}."""

    def __init__(self, p: int, e: int, max_size: int = MAX_FIELD_SIZE):
        if not _is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if e < 1:
            raise FieldError(f"e = {e} must be positive")
        if p ** (4 * e) > max_size:
            raise FieldError(f"field size {p}^{4 * e} exceeds budget {max_size}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.deg = 4 * e
        self.size = p ** self.deg
        self.defining_polynomial = least_irreducible(p, self.deg)
        self._red = self._reduction_rows()
        self._exp = None
        self._log = None
        self._fiber_cache = {}
        self._subfield_cache = {}

    def __repr__(self):
        return f"TowerField(p={self.p}, e={self.e}, size={self.size})"

    @property
    def element_count(self):
        return self.size

    # -- encode / decode ----------------------------------------------------

    def coeffs_of(self, idx: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.deg):
            out.append(idx % p)
            idx //= p
        return tuple(out)

    def idx_of(self, coeffs) -> int:
        p = self.p
        idx = 0
        for c in reversed(list(coeffs)):
            idx = idx * p + (c % p)
        return idx

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.fld is not self:
                raise FieldError("element from a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.idx_of(value))

    def from_index(self, idx: int) -> "FieldElement":
        if not 0 <= idx < self.size:
            raise FieldError(f"index {idx} out of range")
        return FieldElement(self, idx)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def generator(self) -> "FieldElement":
        """The power-basis generator x of F_p[x]/(f)."""
        return FieldElement(self, self.p)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.size)]

    # -- raw index arithmetic -----------------------------------------------

    def _reduction_rows(self):
        # x^k mod f for k = deg .. 2*deg-2, as coefficient tuples
        p, d = self.p, self.deg
        f = self.defining_polynomial
        rows = {}
        cur = [(-f[i]) % p for i in range(d)]  # x^d mod f
        rows[d] = tuple(cur)
        for k in range(d + 1, 2 * d - 1):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(d):
                    nxt[i] = (nxt[i] - top * f[i]) % p
            cur = nxt
            rows[k] = tuple(cur)
        return rows

    def _raw_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        p, d = self.p, self.deg
        if p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
            fmask = self.idx_of(self.defining_polynomial[:d])
            for k in range(2 * d - 2, d - 1, -1):
                if r >> k & 1:
                    r ^= (1 << k) | (fmask << (k - d))
            return r
        va, vb = self.coeffs_of(a), self.coeffs_of(b)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(va):
            if ai:
                for j, bj in enumerate(vb):
                    if bj:
                        prod[i + j] += ai * bj
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                row = self._red[k]
                for i in range(d):
                    if row[i]:
                        prod[i] += c * row[i]
        return self.idx_of(prod[:d])

    def _raw_pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            n >>= 1
        return r

    def _ensure_tables(self):
        if self._exp is not None:
            return
        n = self.size
        order = n - 1
        primes = _prime_factors(order)
        g = None
        for cand in range(2, n):
            if all(self._raw_pow(cand, order // r) != 1 for r in primes):
                g = cand
                break
        assert g is not None
        exp = [0] * (2 * order)
        log = [0] * n
        cur = 1
        for i in range(order):
            exp[i] = cur
            exp[i + order] = cur
            log[cur] = i
            cur = self._raw_mul(cur, g)
        assert cur == 1
        self._exp = exp
        self._log = log

    def add_idx(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        r, m = 0, 1
        while a or b:
            r += ((a + b) % p) * m
            a //= p
            b //= p
            m *= p
        return r

    def neg_idx(self, a: int) -> int:
        p = self.p
        if p == 2 or a == 0:
            return a
        r, m = 0, 1
        while a:
            d = a % p
            if d:
                r += (p - d) * m
            a //= p
            m *= p
        return r

    def mul_idx(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        self._ensure_tables()
        return self._exp[self._log[a] + self._log[b]]

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if a == 1:
            return 1
        self._ensure_tables()
        return self._exp[self.size - 1 - self._log[a]]

    def pow_idx(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow_idx(self.inv_idx(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        if a == 1 or n == 0:
            return 1
        self._ensure_tables()
        return self._exp[(self._log[a] * n) % (self.size - 1)]

    # -- tower structure ----------------------------------------------------

    def frobenius_idx(self, a: int, k: int = 1) -> int:
        """a^(q^k)."""
        return self.pow_idx(a, self.q ** (k % 4))

    def subfield_elements(self, level: int) -> list["FieldElement"]:
        """All elements of F_{q^level}, level in {1, 2, 4}, sorted by coeffs.

        level=1 means F_q; the prime field F_p is reachable as the image of
        range(p) under element().
        """
        if level not in (1, 2, 4):
            raise FieldError(f"subfield level must be 1, 2 or 4, got {level}")
        if level not in self._subfield_cache:
            self._ensure_tables()
            sub = self.q ** level
            step = (self.size - 1) // (sub - 1)
            idxs = [0] + [self._exp[l] for l in range(0, self.size - 1, step)]
            idxs.sort(key=self.coeffs_of)
            self._subfield_cache[level] = idxs
        return [FieldElement(self, i) for i in self._subfield_cache[level]]

    def trace_fibers(self, level: int) -> dict[int, list[int]]:
        """Index map w -> [x in F_{q^level} : x^q + x = w], cached."""
        key = ("fiber", level)
        if key not in self._fiber_cache:
            fibers = {}
            for x in self.subfield_elements(level):
                w = self.add_idx(self.frobenius_idx(x.i), x.i)
                fibers.setdefault(w, []).append(x.i)
            self._fiber_cache[key] = fibers
        return self._fiber_cache[key]


class FieldElement:
    """An element of a TowerField; immutable, canonical, hashable."""

    __slots__ = ("fld", "i")

    def __init__(self, fld: TowerField, idx: int):
        self.fld = fld
        self.i = idx

    @property
    def coefficients(self):
        return self.fld.coeffs_of(self.i)

    def __repr__(self):
        return f"<{self.i}:{list(self.coefficients)}>"

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.fld is other.fld and self.i == other.i
        if isinstance(other, int):
            return self.i == other % self.fld.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.fld), self.i))

    def __bool__(self):
        return self.i != 0

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return self.fld.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.fld, self.fld.add_idx(self.i, o.i))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.fld, self.fld.neg_idx(self.i))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.fld, self.fld.add_idx(self.i, self.fld.neg_idx(o.i)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.fld, self.fld.mul_idx(self.i, o.i))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.fld, self.fld.mul_idx(self.i, self.fld.inv_idx(o.i)))

    def __rtruediv__(self, other):
        return self.fld.element(other).__truediv__(self)

    def __pow__(self, n):
        return FieldElement(self.fld, self.fld.pow_idx(self.i, n))

    def inverse(self):
        return FieldElement(self.fld, self.fld.inv_idx(self.i))

    def frobenius(self, k: int = 1):
        """Raise to the q^k power."""
        return FieldElement(self.fld, self.fld.frobenius_idx(self.i, k))


# ---------------------------------------------------------------------------
# tower-level operations

@lru_cache(maxsize=None)
def build_tower(p: int, e: int) -> TowerField:
    """Deterministic tower F_p < F_q < F_{q^2} < F_{q^4}, q = p^e."""
    return TowerField(p, e)


def trace_q(x: FieldElement) -> FieldElement:
    """The relative trace x^q + x (maps F_{q^2} onto F_q)."""
    return x.frobenius() + x


def trace_zero_set(fld: TowerField, level: int = 2) -> list[FieldElement]:
    """All x in F_{q^level} with x^q + x = 0; exactly q of them for level 2."""
    return [x for x in fld.subfield_elements(level) if trace_q(x).i == 0]


def subfield_member(x: FieldElement, level: int) -> bool:
    """True iff x lies in F_{q^level}, i.e. x^(q^level) = x."""
    return x.frobenius(level).i == x.i


def q_root(x: FieldElement) -> FieldElement:
    """The unique y with y^q = x (Frobenius is bijective on F_{q^4})."""
    return x.frobenius(3)


def absolute_trace(x: FieldElement) -> FieldElement:
    """Trace down to the prime field F_p: sum of x^(p^k) over the full tower."""
    fld = x.fld
    acc = 0
    cur = x.i
    for _ in range(fld.deg):
        acc = fld.add_idx(acc, cur)
        cur = fld.pow_idx(cur, fld.p)
    return FieldElement(fld, acc)


class QuadExtDescriptor:
    """Data (s, i_gen) presenting F_{q^2} = F_q(i) in the classical way.

    Odd p: s is a non-square of F_q, i_gen^2 = s, so i_gen^q = -i_gen.
    p = 2: s in F_q has absolute trace 1 over F_2 and i_gen^2 = i_gen + s;
    then i_gen^q = i_gen + 1 (the Frobenius adds the absolute trace of s,
    which equals s itself only when s = 1).
    """

    def __init__(self, s: FieldElement, i_gen: FieldElement):
        self.s = s
        self.i_gen = i_gen

    def __repr__(self):
        return f"QuadExtDescriptor(s={self.s!r}, i={self.i_gen!r})"


def quadratic_descriptor(fld: TowerField) -> QuadExtDescriptor:
    fq = fld.subfield_elements(1)
    fq2 = fld.subfield_elements(2)
    if fld.p != 2:
        squares = {(x * x).i for x in fq}
        s = next(x for x in fq if x.i != 0 and x.i not in squares)
        i_gen = next(y for y in fq2 if (y * y).i == s.i)
        assert i_gen.frobenius() == -i_gen
    else:
        s = next(x for x in fq if absolute_trace_over_f2(x) == 1)
        i_gen = next(y for y in fq2 if (y * y + y).i == s.i)
        assert i_gen.frobenius() == i_gen + fld.one
    return QuadExtDescriptor(s, i_gen)


def absolute_trace_over_f2(x: FieldElement) -> int:
    """Absolute trace of x in F_q = F_{2^e} down to F_2, as 0 or 1."""
    fld = x.fld
    assert fld.p == 2 and subfield_member(x, 1)
    acc = 0
    cur = x.i
    for _ in range(fld.e):
        acc = fld.add_idx(acc, cur)
        cur = fld.mul_idx(cur, cur)
    return acc
