"""Exact symbolic machinery: sparse multivariate polynomials over a tower
field, truncated univariate power series, branch lifting, and the pivot
algorithm that extracts an order sequence from a tuple of series.
"""

from __future__ import annotations

from .ff import FieldElement, TowerField, trace_q


class PrecisionError(RuntimeError):
    """Signals that the working precision is too low; retry with more terms."""


# ---------------------------------------------------------------------------
# sparse multivariate polynomials

class MultiPoly:
    """Sparse polynomial over a TowerField with a fixed variable tuple.

    Terms are a dict {exponent tuple: nonzero FieldElement}.  Canonical
    ordering for display and comparison is graded lexicographic.
    """

    __slots__ = ("fld", "vars", "terms")

    def __init__(self, fld: TowerField, variables, terms=None):
        self.fld = fld
        self.vars = tuple(variables)
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                c = fld.element(c)
                if c.i != 0:
                    self.terms[tuple(exps)] = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, fld, variables):
        return cls(fld, variables)

    @classmethod
    def constant(cls, fld, variables, c):
        return cls(fld, variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def variable(cls, fld, variables, name):
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(fld, variables, {tuple(exps): fld.one})

    # -- queries ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def coefficient(self, exps) -> FieldElement:
        return self.terms.get(tuple(exps), self.fld.zero)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_degree(self):
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def terms_sorted(self):
        # graded lex: lower total degree first, then lexicographic on exponents
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self.terms_sorted():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.vars, exps) if k
            )
            bits.append(f"{c.i}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.fld is other.fld and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.fld), self.vars,
                     frozenset((e, c.i) for e, c in self.terms.items())))

    # -- arithmetic ---------------------------------------------------------

    def _blank(self):
        return MultiPoly(self.fld, self.vars)

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = MultiPoly.constant(self.fld, self.vars, other)
        out = self._blank()
        terms = dict(self.terms)
        fld = self.fld
        for e, c in other.terms.items():
            cur = terms.get(e)
            s = fld.add_idx(cur.i, c.i) if cur is not None else c.i
            if s:
                terms[e] = FieldElement(fld, s)
            elif cur is not None:
                del terms[e]
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = self._blank()
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = MultiPoly.constant(self.fld, self.vars, other)
        return self.__add__(-other)

    def __mul__(self, other):
        fld = self.fld
        if isinstance(other, (int, FieldElement)):
            c = fld.element(other)
            out = self._blank()
            if c.i:
                out.terms = {e: a * c for e, a in self.terms.items()}
            return out
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = fld.mul_idx(c1.i, c2.i)
                cur = out.get(e)
                s = fld.add_idx(cur, v) if cur is not None else v
                out[e] = s
        res = self._blank()
        res.terms = {e: FieldElement(fld, v) for e, v in out.items() if v}
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        p = self.fld.p
        result = MultiPoly.constant(self.fld, self.vars, 1)
        base = self
        # peel off p-power factors with the Frobenius shortcut
        while n:
            if n % p == 0:
                base = base._frobenius_power()
                n //= p
                continue
            result = result * base
            n -= 1
        return result

    def _frobenius_power(self):
        # f^p in characteristic p: raise coefficients, stretch exponents
        out = self._blank()
        p = self.fld.p
        out.terms = {tuple(k * p for k in e): c ** p
                     for e, c in self.terms.items()}
        return out

    def derivative(self, name):
        i = self.vars.index(name)
        fld = self.fld
        out = self._blank()
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k % fld.p == 0:
                continue
            v = fld.mul_idx(c.i, k % fld.p)
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = FieldElement(fld, v)
        out.terms = terms
        return out

    def evaluate(self, values) -> FieldElement:
        fld = self.fld
        vals = [fld.element(v) for v in values]
        acc = 0
        for e, c in self.terms.items():
            t = c.i
            for v, k in zip(vals, e):
                if k:
                    t = fld.mul_idx(t, fld.pow_idx(v.i, k))
                    if t == 0:
                        break
            acc = fld.add_idx(acc, t)
        return FieldElement(fld, acc)

    def substitute(self, mapping: dict) -> "MultiPoly":
        """Substitute polynomials for variables (missing names stay fixed)."""
        subs = {}
        some = None
        for name, poly in mapping.items():
            subs[name] = poly
            some = poly
        target_vars = some.vars if some is not None else self.vars
        out = MultiPoly.zero(self.fld, target_vars)
        for name in self.vars:
            if name not in subs and name in target_vars:
                subs[name] = MultiPoly.variable(self.fld, target_vars, name)
        for e, c in self.terms.items():
            term = MultiPoly.constant(self.fld, target_vars, c)
            for name, k in zip(self.vars, e):
                if k:
                    term = term * (subs[name] ** k)
            out = out + term
        return out


# ---------------------------------------------------------------------------
# truncated power series

class TruncatedSeries:
    """Series sum c_j t^j known exactly for 0 <= j <= precision."""

    __slots__ = ("fld", "coeffs", "precision")

    def __init__(self, fld: TowerField, coeffs, precision=None):
        self.fld = fld
        coeffs = [fld.element(c) for c in coeffs]
        if precision is None:
            precision = len(coeffs) - 1
        if len(coeffs) < precision + 1:
            coeffs += [fld.zero] * (precision + 1 - len(coeffs))
        self.coeffs = coeffs[: precision + 1]
        self.precision = precision

    @classmethod
    def constant(cls, fld, c, precision):
        return cls(fld, [c], precision)

    @classmethod
    def t(cls, fld, precision):
        return cls(fld, [0, 1], precision)

    def __repr__(self):
        bits = [f"{c.i}*t^{j}" for j, c in enumerate(self.coeffs) if c.i]
        return (" + ".join(bits) or "0") + f" + O(t^{self.precision + 1})"

    def __getitem__(self, j) -> FieldElement:
        if j > self.precision:
            raise PrecisionError(f"coefficient t^{j} beyond precision {self.precision}")
        return self.coeffs[j]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return all(self.coeffs[j] == other.coeffs[j] for j in range(n + 1))

    def truncate(self, precision):
        return TruncatedSeries(self.fld, self.coeffs[: precision + 1], precision)

    def valuation(self):
        """Least j with c_j != 0, or None if zero to the known precision."""
        for j, c in enumerate(self.coeffs):
            if c.i:
                return j
        return None

    def _prec_with(self, other):
        return min(self.precision, other.precision)

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = TruncatedSeries.constant(self.fld, other, self.precision)
        n = self._prec_with(other)
        return TruncatedSeries(
            self.fld,
            [self.coeffs[j] + other.coeffs[j] for j in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.fld, [-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = TruncatedSeries.constant(self.fld, other, self.precision)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        fld = self.fld
        if isinstance(other, (int, FieldElement)):
            c = fld.element(other)
            return TruncatedSeries(fld, [a * c for a in self.coeffs], self.precision)
        n = self._prec_with(other)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.i:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b.i:
                        out[i + j] = fld.add_idx(out[i + j], fld.mul_idx(a.i, b.i))
        return TruncatedSeries(fld, [FieldElement(fld, v) for v in out], n)

    __rmul__ = __mul__

    def invert(self):
        fld = self.fld
        a0 = self.coeffs[0]
        if a0.i == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        n = self.precision
        inv0 = fld.inv_idx(a0.i)
        out = [inv0] + [0] * n
        for j in range(1, n + 1):
            acc = 0
            for i in range(1, j + 1):
                ai = self.coeffs[i].i
                if ai:
                    acc = fld.add_idx(acc, fld.mul_idx(ai, out[j - i]))
            out[j] = fld.mul_idx(fld.neg_idx(acc), inv0)
        return TruncatedSeries(fld, [FieldElement(fld, v) for v in out], n)

    def compose(self, inner: "TruncatedSeries"):
        """self(inner(t)); inner must have zero constant term."""
        if inner.coeffs[0].i != 0:
            raise ValueError("compose requires inner series with zero constant term")
        n = min(self.precision, inner.precision)
        acc = TruncatedSeries.constant(self.fld, self.coeffs[n], n)
        for j in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[j]
        return acc

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative series power")
        p = self.fld.p
        result = TruncatedSeries.constant(self.fld, 1, self.precision)
        base = self
        while n:
            if n % p == 0:
                base = base._frobenius_power()
                n //= p
                continue
            result = result * base
            n -= 1
        return result

    def _frobenius_power(self):
        p = self.fld.p
        n = self.precision
        out = [self.fld.zero] * (n + 1)
        for j, c in enumerate(self.coeffs):
            if j * p > n:
                break
            out[j * p] = c ** p
        return TruncatedSeries(self.fld, out, n)

    def shift_down(self, k: int):
        """Divide by t^k; the low coefficients must vanish."""
        assert all(c.i == 0 for c in self.coeffs[:k])
        return TruncatedSeries(self.fld, self.coeffs[k:], self.precision - k)


def series_arith(a: TruncatedSeries, b, kind: str) -> TruncatedSeries:
    """Uniform entry point for series arithmetic: add | mul | invert | compose."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "invert":
        return a.invert()
    if kind == "compose":
        return a.compose(b)
    raise ValueError(f"unknown series operation {kind!r}")


# ---------------------------------------------------------------------------
# branch lifting and order sequences

def hensel_branch(params, u: FieldElement, v: FieldElement, N: int) -> TruncatedSeries:
    """The unique series Y(t) with Y(0) = v solving the curve equation along
    X = u + t, exact through t^N.

    Along X = u + t the factor X^q + X is the unit series
    Tr(u) + t + t^q (q is a power of p, so (u+t)^q = u^q + t^q), hence
    Y^q + Y = c / (Tr(u) + t + t^q) and the coefficients of Y peel off
    triangularly: v_j = s_j - v_{j/q}^q when q | j, else v_j = s_j.
    """
    fld = params.tower
    q = params.q
    tru = trace_q(u)
    if tru.i == 0:
        raise ValueError("branch lift needs Tr(u) != 0")
    if (tru * trace_q(v)) != params.c:
        raise ValueError("point is not on the curve")
    unit = [fld.zero] * (N + 1)
    unit[0] = tru
    if N >= 1:
        unit[1] = fld.one
    if N >= q:
        unit[q] = unit[q] + fld.one
    s = (TruncatedSeries(fld, unit, N).invert()) * params.c
    vs = [v]
    for j in range(1, N + 1):
        c = s[j]
        if j % q == 0:
            c = c - vs[j // q] ** q
        vs.append(c)
    return TruncatedSeries(fld, vs, N)


def substitute_branch(poly: MultiPoly, branch) -> TruncatedSeries:
    """Evaluate a polynomial along a branch (one series per variable)."""
    if len(branch) != len(poly.vars):
        raise ValueError("need one series per polynomial variable")
    fld = poly.fld
    n = min(s.precision for s in branch)
    acc = TruncatedSeries.constant(fld, 0, n)
    for e, c in poly.terms.items():
        term = TruncatedSeries.constant(fld, c, n)
        for s, k in zip(branch, e):
            if k:
                term = term * (s.truncate(n) ** k)
        acc = acc + term
    return acc


def row_reduce(rows):
    """In-place row echelon over the field; returns the pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for k in range(r, len(rows)):
            if rows[k][col].i:
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col].i:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def pivot_order_sequence(series_tuple, N=None):
    """Orders of a tuple of series: pivot columns after Gaussian elimination
    on the coefficient matrix.  Invariant under invertible recombination.
    """
    k = len(series_tuple)
    n = min(s.precision for s in series_tuple)
    if N is not None:
        n = min(n, N)
    rows = [list(s.coeffs[: n + 1]) for s in series_tuple]
    pivots = row_reduce(rows)
    if len(pivots) < k:
        raise PrecisionError(
            f"only {len(pivots)} of {k} pivots to precision {n}; raise precision")
    return pivots
