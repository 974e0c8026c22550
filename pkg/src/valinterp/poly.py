"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients.  ``MPoly`` wraps that map, is immutable once built, and
supports ``+ - * **`` with other polynomials and with rational scalars.

Rationals are ``fractions.Fraction``.  Values that may be infinite
(skewness, curve-valuation values, intersection numbers) use ``INF``,
which is ``math.inf``: it compares above every Fraction and absorbs
addition, which is all the extended-rational arithmetic we need.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from valinterp.linalg import det

Exponent = Tuple[int, ...]
Rat = Fraction
ExtRat = Union[Fraction, float]
Scalar = Union[int, Fraction]

INF = math.inf

# Exponents and total degrees must fit a signed machine word.
MAX_DEGREE = 2**63 - 1


class DegreeOverflowError(ValueError):
    pass


def is_inf(v) -> bool:
    return isinstance(v, float) and v == INF


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction (no floats, no spaces inside)."""
    s = str(text).strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(s)


def parse_extrat(text: str) -> ExtRat:
    if str(text).strip() in ("inf", "+inf", "oo", "+oo"):
        return INF
    return parse_rat(text)


def format_rat(v: ExtRat) -> str:
    """``"p/q"``, or ``"p"`` for integers, or ``"inf"``; inverse of parse_extrat."""
    if is_inf(v):
        return "inf"
    if isinstance(v, float):
        raise TypeError(f"refusing to format a float as a rational: {v!r}")
    return str(Fraction(v))


class MPoly:
    """Sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for nvars={nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if sum(exp) > MAX_DEGREE:
                raise DegreeOverflowError(f"total degree of {exp} exceeds word size")
            c = Fraction(c)
            if c != 0:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for nvars={nvars}")
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Scalar = 1) -> "MPoly":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "MPoly":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self._terms)

    def order(self) -> int:
        """Multiplicity at the origin: least total degree in the support."""
        if not self._terms:
            raise ValueError("order of the zero polynomial")
        return min(sum(e) for e in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    # arithmetic

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        out = {e: c for e, c in out.items() if c}
        if out and max(sum(e) for e in out) > MAX_DEGREE:
            raise DegreeOverflowError("product degree exceeds word size")
        return MPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "MPoly":
        c = Fraction(c)
        if c == 0:
            return MPoly(self.nvars)
        return MPoly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if self._terms and k * self.total_degree() > MAX_DEGREE:
            raise DegreeOverflowError("power degree exceeds word size")
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MPoly({self.nvars}, {dict(sorted(self._terms.items()))})"

    def __str__(self):
        return format_poly(self, default_vars(self.nvars))

    def to_str(self, vars: Sequence[str] | None = None) -> str:
        return format_poly(self, vars or default_vars(self.nvars))


def default_vars(nvars: int) -> list[str]:
    if nvars == 2:
        return ["x", "y"]
    return [f"z{i + 1}" for i in range(nvars)]


def poly_add(f: MPoly, g: MPoly) -> MPoly:
    return f + g


def poly_mul(f: MPoly, g: MPoly) -> MPoly:
    return f * g


def poly_pow(f: MPoly, k: int) -> MPoly:
    return f**k


def order(f: MPoly) -> int:
    return f.order()


# --- printing ---------------------------------------------------------------


def _term_key(exp: Exponent):
    # ascending total degree, then lexicographically descending exponents
    return (sum(exp), tuple(-e for e in exp))


def format_poly(f: MPoly, vars: Sequence[str]) -> str:
    """Render ``f`` in the grammar accepted by :func:`parse_poly`."""
    if len(vars) != f.nvars:
        raise ValueError("variable list length does not match nvars")
    if f.is_zero():
        return "0"
    pieces = []
    for exp in sorted(f.terms, key=_term_key):
        c = f.terms[exp]
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(vars, exp) if e
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


# --- parsing ----------------------------------------------------------------


class PolyParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos
        self.text = text


_TOKEN_RE = re.compile(r"\s*(?:(\d+\.\d*|\.\d+)|(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            toks.append(("dec", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("int", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            toks.append(("name", m.group(3), m.start(3)))
        elif m.group(4) is not None:
            ch = m.group(4)
            if ch not in "+-*/^()":
                raise PolyParseError(f"unexpected character {ch!r}", m.start(4), text)
            toks.append(("op", ch, m.start(4)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    """Recursive descent over

        expr   := term (('+'|'-') term)*
        term   := factor (('*'|'/') factor)*        divisor must be constant
        factor := atom ('^' uint)?
        atom   := int ('/' uint)? | var | '(' expr ')' | '-' factor | '+' factor

    ``p/q`` between two integer literals is one rational literal, so
    ``2/3^2`` is ``4/9``.
    """

    def __init__(self, text: str, vars: Sequence[str]):
        self.text = text
        self.vars = {name: i for i, name in enumerate(vars)}
        if len(self.vars) != len(vars):
            raise ValueError(f"duplicate variable names in {list(vars)}")
        self.n = len(vars)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolyParseError(msg, tok[2], self.text)

    def parse(self) -> MPoly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("name", "int") or tok[1] == "(":
                self.fail(f"unexpected {tok[1]!r} (implicit multiplication is not allowed)")
            self.fail(f"unexpected {tok[1]!r}")
        return result

    def expr(self) -> MPoly:
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> MPoly:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            rhs = self.factor()
            if op_tok[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant():
                    self.fail("division by a non-constant", op_tok)
                c = rhs.constant_term()
                if c == 0:
                    self.fail("division by zero", op_tok)
                acc = acc.scale(1 / c)
        return acc

    def factor(self) -> MPoly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "-":
                self.fail("negative exponent")
            if tok[0] == "dec":
                self.fail("non-integer exponent")
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer literal")
            self.take()
            k = int(tok[1])
            if k > MAX_DEGREE:
                raise DegreeOverflowError(f"exponent {k} exceeds word size")
            return base**k
        return base

    def atom(self) -> MPoly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            nxt, after = self.toks[self.i], self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
            if nxt[0] == "op" and nxt[1] == "/" and after is not None and after[0] == "int":
                self.i += 2
                if int(after[1]) == 0:
                    self.fail("division by zero", nxt)
                return MPoly.const(self.n, Fraction(int(val), int(after[1])))
            return MPoly.const(self.n, int(val))
        if kind == "dec":
            self.fail("decimal literals are not allowed; write p/q", tok)
        if kind == "name":
            if val not in self.vars:
                self.fail(f"unknown variable {val!r}", tok)
            return MPoly.var(self.n, self.vars[val])
        if kind == "op" and val == "(":
            inner = self.expr()
            close = self.take()
            if close[1] != ")" or close[0] != "op":
                self.fail("expected ')'", close)
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        if kind == "op" and val == "+":
            return self.factor()
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {val!r}", tok)


def parse_poly(text: str, vars: Sequence[str] = ("x", "y")) -> MPoly:
    """Parse and fully expand a polynomial expression.

    >>> parse_poly("y - x - 2*x^2").terms == {(0, 1): 1, (1, 0): -1, (2, 0): -2}
    True
    """
    if not vars:
        raise ValueError("need at least one variable")
    return _Parser(text, list(vars)).parse()


# --- substitution -----------------------------------------------------------


def poly_subst_linear(f: MPoly, M: Sequence[Sequence[Scalar]]) -> MPoly:
    """Return ``f(M z)``: variable ``i`` becomes ``sum_j M[i][j] * z_j``."""
    n = f.nvars
    if len(M) != n or any(len(row) != n for row in M):
        raise ValueError(f"substitution matrix must be {n}x{n}")
    if det(M) == 0:
        raise ValueError("substitution matrix is singular")
    images = [
        MPoly(n, {tuple(int(k == j) for k in range(n)): M[i][j] for j in range(n)})
        for i in range(n)
    ]
    powers: list[dict[int, MPoly]] = [{0: MPoly.const(n, 1)} for _ in range(n)]

    def power(i: int, e: int) -> MPoly:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = MPoly(n)
    for exp, c in f:
        term = MPoly.const(n, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


# --- univariate helpers over Q (dense coefficient lists, index = degree) ----

UPoly = list  # list[Fraction], no trailing zeros; [] is zero


def _utrim(p: UPoly) -> UPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _usub(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return _utrim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def _umul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _utrim(out)


def _udivmod(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    if not q:
        raise ZeroDivisionError("univariate division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and r:
        k = len(r) - len(q)
        c = r[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        _utrim(r)
    return _utrim(quo), r


def _ugcd(p: UPoly, q: UPoly) -> UPoly:
    a, b = list(p), list(q)
    while b:
        a, b = b, _udivmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


# --- bivariate gcd ----------------------------------------------------------


def _to_yx(f: MPoly) -> list[UPoly]:
    """Coefficients in y, each a dense polynomial in x."""
    dy = max(e[1] for e in f.terms)
    rows: list[UPoly] = [[] for _ in range(dy + 1)]
    for (ex, ey), c in f:
        row = rows[ey]
        if len(row) <= ex:
            row.extend([Fraction(0)] * (ex + 1 - len(row)))
        row[ex] += c
    return [_utrim(r) for r in rows]


def _from_yx(rows: list[UPoly]) -> MPoly:
    terms = {}
    for ey, row in enumerate(rows):
        for ex, c in enumerate(row):
            if c:
                terms[(ex, ey)] = c
    return MPoly(2, terms)


def _ycontent(rows: list[UPoly]) -> UPoly:
    g: UPoly = []
    for r in rows:
        if r:
            g = _ugcd(g, r) if g else _ugcd(r, [])
            if len(g) == 1:
                break
    return g


def _ydivide(rows: list[UPoly], c: UPoly) -> list[UPoly]:
    out = []
    for r in rows:
        q, rem = _udivmod(r, c)
        assert not rem
        out.append(q)
    return out


def _prem(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    r = [list(x) for x in a]
    lb = b[-1]
    while len(r) >= len(b):
        k = len(r) - len(b)
        lr = r[-1]
        r = [_umul(lb, x) for x in r]
        for i, bx in enumerate(b):
            r[i + k] = _usub(r[i + k], _umul(lr, bx))
        while r and not r[-1]:
            r.pop()
    return r


def normalize_primitive(f: MPoly) -> MPoly:
    """Scale to coprime integer coefficients with positive grlex-leading coefficient."""
    if f.is_zero():
        return f
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    nums = [int(c * den) for c in f.terms.values()]
    g = 0
    for v in nums:
        g = math.gcd(g, v)
    lead_exp = max(f.terms, key=lambda e: (sum(e), e))
    sign = 1 if f.terms[lead_exp] > 0 else -1
    return f.scale(Fraction(sign * den, g))


def gcd_bivariate(f: MPoly, g: MPoly) -> MPoly:
    """Greatest common divisor in Q[x, y], normalized by :func:`normalize_primitive`."""
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("gcd_bivariate needs bivariate polynomials")
    if f.is_zero() or g.is_zero():
        raise ValueError("gcd of a zero polynomial")
    a, b = _to_yx(f), _to_yx(g)
    ca, cb = _ycontent(a), _ycontent(b)
    a, b = _ydivide(a, ca), _ydivide(b, cb)
    content = _ugcd(ca, cb)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            a = b
            break
        a, b = b, _ydivide(r, _ycontent(r))
    else:
        # b has y-degree 0: primitive parts are coprime
        a = [[Fraction(1)]]
    result = _from_yx([_umul(content, x) for x in a])
    return normalize_primitive(result)
