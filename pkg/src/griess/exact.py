"""Exact arithmetic over Q in the fixed variables c, d, h.

``Poly`` is a sparse map from exponent triples ``(e_c, e_d, e_h)`` to
``Fraction`` coefficients; ``RatFunc`` is a reduced quotient of two
polys.  Values never mutate after construction.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import NotDivisible, ParseError, SingularMatrix, ZeroDenominator

VARS = ("c", "d", "h")
_ZERO_EXP = (0, 0, 0)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a rational: {x!r}")


def fmt_rational(q) -> str:
    q = as_fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _grlex_key(exp):
    return (sum(exp), exp)


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coef in terms.items():
                coef = as_fraction(coef)
                if coef:
                    clean[tuple(exp)] = coef
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, q):
        return cls({_ZERO_EXP: q})

    @classmethod
    def var(cls, name: str):
        exp = [0, 0, 0]
        exp[VARS.index(name)] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return _Parser(text).parse()

    # -- queries ------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(e == _ZERO_EXP for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(_ZERO_EXP, Fraction(0))

    def degree(self, var=None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = VARS.index(var)
        return max(e[i] for e in self.terms)

    def leading(self):
        """(exponent, coefficient) of the grlex-leading term, c > d > h."""
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def variables(self):
        return {VARS[i] for e in self.terms for i in range(3) if e[i]}

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Rational)):
                other = Poly.const(other)
            else:
                return NotImplemented
        out = dict(self.terms)
        for e, v in other.terms.items():
            out[e] = out.get(e, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Rational)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            other = as_fraction(other)
            return Poly({e: v * other for e, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + v1 * v2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDenominator("division by zero")
            return self * (Fraction(1) / as_fraction(other))
        return RatFunc(self, other)

    def __rtruediv__(self, other):
        return RatFunc(Poly.coerce(other), self)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == Poly.const(other).terms
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- substitution -------------------------------------------------
    def eval(self, at) -> Fraction:
        """Exact value; every variable that occurs must be bound."""
        missing = self.variables() - set(at)
        if missing:
            raise KeyError(f"no value for {', '.join(sorted(missing))}")
        vals = [as_fraction(at[v]) if v in at else Fraction(0) for v in VARS]
        total = Fraction(0)
        for (a, b, k), coef in self.terms.items():
            total += coef * vals[0] ** a * vals[1] ** b * vals[2] ** k
        return total

    def subs(self, **values) -> "Poly":
        """Partial substitution; values may be rationals or polys."""
        out = Poly()
        powers = {}
        for exp, coef in self.terms.items():
            term = Poly({tuple(0 if VARS[i] in values else exp[i] for i in range(3)): coef})
            for i, name in enumerate(VARS):
                if name in values and exp[i]:
                    key = (name, exp[i])
                    if key not in powers:
                        powers[key] = Poly.coerce(values[name]) ** exp[i]
                    term = term * powers[key]
            out = out + term
        return out

    # -- division -----------------------------------------------------
    def divmod(self, divisor: "Poly"):
        """Multivariate division by a single divisor in grlex order."""
        divisor = Poly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDenominator("division by the zero polynomial")
        lexp, lcoef = divisor.leading()
        quot, rem = {}, {}
        work = dict(self.terms)
        while work:
            exp = max(work, key=_grlex_key)
            coef = work[exp]
            shift = tuple(exp[i] - lexp[i] for i in range(3))
            if min(shift) >= 0:
                factor = coef / lcoef
                quot[shift] = quot.get(shift, 0) + factor
                for e, v in divisor.terms.items():
                    t = (e[0] + shift[0], e[1] + shift[1], e[2] + shift[2])
                    nv = work.get(t, 0) - factor * v
                    if nv:
                        work[t] = nv
                    else:
                        work.pop(t, None)
            else:
                rem[exp] = coef
                del work[exp]
        return Poly(quot), Poly(rem)

    def divexact(self, divisor) -> "Poly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise NotDivisible(f"({self}) is not divisible by ({divisor})")
        return q

    def divides(self, other: "Poly") -> bool:
        return other.divmod(self)[1].is_zero()

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive over Z."""
        from math import gcd
        if not self.terms:
            return Fraction(0)
        num = den = 0
        for v in self.terms.values():
            num = gcd(num, v.numerator)
            den = den * v.denominator // gcd(den, v.denominator) if den else v.denominator
        return Fraction(num, den)

    # -- printing -----------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            coef = self.terms[exp]
            mono = "*".join(
                VARS[i] if exp[i] == 1 else f"{VARS[i]}^{exp[i]}"
                for i in range(3) if exp[i]
            )
            sign = "-" if coef < 0 else "+"
            a = abs(coef)
            if a.denominator != 1:
                cs = f"({a.numerator}/{a.denominator})"
            else:
                cs = str(a.numerator)
            if mono:
                body = mono if a == 1 else f"{cs}*{mono}"
            else:
                body = cs
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


C = Poly.var("c")
D = Poly.var("d")
H = Poly.var("h")
ONE = Poly.const(1)
ZERO = Poly()


class _Parser:
    _token = re.compile(r"\s*(?:(\d+)|([cdh])|(.))")

    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._token.match(text, pos)
            if m is None:
                break
            num, var, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif var is not None:
                self.tokens.append(("var", var))
            elif op.strip():
                if op not in "+-*/^()":
                    raise ParseError(f"unexpected character {op!r} in {self.text!r}")
                self.tokens.append(("op", op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
            total = total + self.term() * sign
        return total

    def term(self):
        val = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                val = val * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError(f"division by non-constant in {self.text!r}")
                val = val * (1 / rhs.constant_value())
        return val

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise ParseError(f"bad exponent in {self.text!r}")
            base = base ** n
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Poly.const(val)
        if kind == "var":
            return Poly.var(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.take(")")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.factor()
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


# -- rational functions -------------------------------------------------

def _to_sympy(p: Poly):
    import sympy
    gens = sympy.symbols(VARS)
    return sympy.Poly.from_dict(
        {e: sympy.Rational(v.numerator, v.denominator) for e, v in p.terms.items()} or {(0, 0, 0): 0},
        *gens, domain=sympy.QQ)


def _from_sympy(sp) -> Poly:
    out = {}
    for exp, coef in sp.terms():
        exp = tuple(exp) + (0,) * (3 - len(exp))
        out[exp] = Fraction(int(coef.numerator), int(coef.denominator))
    return Poly(out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (grlex-leading coefficient 1); zero only if both are zero."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    elif a.is_constant() or b.is_constant():
        return ONE
    else:
        g = _from_sympy(_to_sympy(a).gcd(_to_sympy(b)))
    if g.is_zero():
        return g
    return g * (1 / g.leading()[1])


class RatFunc:
    """Reduced quotient num/den with den monic in grlex order."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = Poly.coerce(num)
        den = ONE if den is None else Poly.coerce(den)
        if den.is_zero():
            raise ZeroDenominator(f"zero denominator for numerator {num}")
        if num.is_zero():
            num, den = ZERO, ONE
        elif not _reduced:
            if not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = num.divexact(g), den.divexact(g)
            lc = den.leading()[1]
            if lc != 1:
                num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        return x if isinstance(x, RatFunc) else cls(Poly.coerce(x))

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den == ONE

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other.is_zero():
            raise ZeroDenominator(f"division of {self} by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(1) / (self ** -n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (Poly, int, Rational)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def eval(self, at) -> Fraction:
        den = self.den.eval(at)
        if den == 0:
            raise ZeroDenominator(f"denominator {self.den} vanishes at {at}")
        return self.num.eval(at) / den

    def subs(self, **values) -> "RatFunc":
        num = RatFunc.coerce(_subs_any(self.num, values))
        den = RatFunc.coerce(_subs_any(self.den, values))
        return num / den

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _subs_any(p: Poly, values):
    """Substitute values that may themselves be rational functions."""
    if all(not isinstance(v, RatFunc) for v in values.values()):
        return p.subs(**values)
    total = RatFunc(0)
    for exp, coef in p.terms.items():
        term = RatFunc(Poly({tuple(0 if VARS[i] in values else exp[i] for i in range(3)): coef}))
        for i, name in enumerate(VARS):
            if name in values and exp[i]:
                term = term * RatFunc.coerce(values[name]) ** exp[i]
        total = total + term
    return total


# -- linear algebra -----------------------------------------------------

def bareiss_solve(matrix, rhs):
    """Fraction-free Gauss-Jordan over Q[c,d,h].

    Returns ``(numerators, det)`` with ``matrix @ numerators == det * rhs``
    checked exactly; ``x = numerators / det``.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("matrix must be square and match rhs")
    a = [[Poly.coerce(x) for x in row] + [Poly.coerce(rhs[i])] for i, row in enumerate(matrix)]
    prev = ONE
    for k in range(n):
        piv = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if piv is None:
            raise SingularMatrix("determinant is identically zero")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        pk = a[k][k]
        for i in range(n):
            if i == k:
                continue
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            new = [None] * (n + 1)
            for j in range(n + 1):
                if j == k:
                    new[j] = ZERO
                    continue
                val = pk * row_i[j] - aik * row_k[j]
                new[j] = val if prev == ONE else val.divexact(prev)
            a[i] = new
        prev = pk
    # every diagonal entry now equals the determinant of the permuted matrix
    det = a[n - 1][n - 1]
    nums = [a[i][n] for i in range(n)]
    for i, row in enumerate(matrix):
        lhs = ZERO
        for j, m in enumerate(row):
            lhs = lhs + Poly.coerce(m) * nums[j]
        if lhs != det * Poly.coerce(rhs[i]):
            raise ArithmeticError("back-substitution check failed")
    return nums, det


def linsolve(matrix, rhs):
    """Exact solution of a square system over Q(c,d,h)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("matrix must be square and match rhs")
    pm, pr = [], []
    for row, b in zip(matrix, rhs):
        row = [RatFunc.coerce(x) for x in row]
        b = RatFunc.coerce(b)
        scale = ONE
        seen = set()
        for x in row + [b]:
            if x.den != ONE and x.den not in seen:
                seen.add(x.den)
                scale = scale * x.den
        pm.append([(x.num * scale).divexact(x.den) for x in row])
        pr.append((b.num * scale).divexact(b.den))
    nums, det = bareiss_solve(pm, pr)
    sol = [RatFunc(num, det) for num in nums]
    for row, b in zip(matrix, rhs):
        acc = RatFunc(0)
        for m, x in zip(row, sol):
            acc = acc + RatFunc.coerce(m) * x
        if acc != RatFunc.coerce(b):
            raise ArithmeticError("back-substitution check failed")
    return sol


def determinant(matrix) -> Poly:
    """Bareiss determinant of a square Poly matrix."""
    n = len(matrix)
    if n == 0:
        return ONE
    a = [[Poly.coerce(x) for x in row] for row in matrix]
    prev, sign = ONE, 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divexact(prev)
            a[i][k] = ZERO
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def rational_roots(p: Poly, var: str = "c"):
    """Rational roots of a univariate poly by the rational root test."""
    if p.variables() - {var}:
        raise ValueError("rational_roots needs a univariate polynomial")
    i = VARS.index(var)
    coeffs = {}
    for e, v in p.terms.items():
        coeffs[e[i]] = v
    low = min(coeffs)
    coeffs = {k - low: v for k, v in coeffs.items()}
    roots = {Fraction(0)} if low > 0 else set()
    deg = max(coeffs)
    if deg == 0:
        return sorted(roots)
    from math import lcm
    scale = lcm(*(v.denominator for v in coeffs.values()))
    ints = {k: int(v * scale) for k, v in coeffs.items()}
    lead, const = abs(ints[deg]), abs(ints[0])

    def divisors(n):
        out = set()
        k = 1
        while k * k <= n:
            if n % k == 0:
                out.update((k, n // k))
            k += 1
        return out

    for num in divisors(const):
        for den in divisors(lead):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if sum(v * r ** k for k, v in ints.items()) == 0:
                    roots.add(r)
    return sorted(roots)
