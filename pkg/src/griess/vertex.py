"""Mode-word rewriting for Griess algebras of OZ-type vertex algebras.

A word is a tuple of letters ``(x, n)`` meaning ``x_(n)``; the word acts on
the vacuum with its rightmost letter first.  ``vc(word)`` returns the
vacuum coefficient as an ``Inv``: a polynomial in invariant atoms with
coefficients in Q[c,d,h].

Elements are base ids (strings), the conformal vector ``OMEGA``, or
commutative product trees ``("*", x, y)``.  The rules used are

    x_(1)y = xy,  x_(2)y = 0,  x_(3)y = (x|y)|0>,  x_(n)y = 0 for n >= 4,
    x_(-k-1)|0> = L(-1)^k x / k!,  omega_(n) = L(n-1),

the bracket [L(m), y_(q)] = (m-q+1) y_(m+q) + C(m+1,3) (omega|y) d_{m+q,1}
and, for the commutation of two Griess modes,

    x_(m) y_(q) = y_(q) x_(m) + x_(1) y_(m+q-1) - y_(m+q-1) x_(1)
                  + (m-1) (xy)_(m+q-1) + C(m,3) (x|y) d_{m+q,2}.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import IrreducibleTerm
from .exact import C, ONE, Poly, ZERO

OMEGA = "ω"

# degree-5 words recurse a few thousand frames deep
if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)


# -- elements --------------------------------------------------------------

def elem_key(x):
    if isinstance(x, str):
        return (0, x)
    return (1, elem_key(x[1]), elem_key(x[2]))


def leaves(x):
    if isinstance(x, str):
        return (x,)
    return leaves(x[1]) + leaves(x[2])


def product(x, y):
    """Canonical product tree; returns (coefficient, element)."""
    if x == OMEGA:
        return 2, y
    if y == OMEGA:
        return 2, x
    a, b = sorted((x, y), key=elem_key)
    return 1, ("*", a, b)


def fmt_elem(x) -> str:
    if isinstance(x, str):
        return x
    return f"({fmt_elem(x[1])}{fmt_elem(x[2])})"


# -- invariant atoms and their polynomial ring -------------------------------

def _pair(x, y):
    return tuple(sorted((x, y), key=elem_key))


def _pairs(p, q):
    return tuple(sorted((p, q), key=lambda t: (elem_key(t[0]), elem_key(t[1]))))


def atom_w(x):
    return ("w", x)


def atom_B(x, y):
    return ("B",) + _pair(x, y)


def atom_T(x, y, z):
    return ("T",) + tuple(sorted((x, y, z), key=elem_key))


def atom_Q(p, q):
    return ("Q",) + _pairs(_pair(*p), _pair(*q))


def atom_P(p, w, q):
    p, q = _pairs(_pair(*p), _pair(*q))
    return ("P", p, w, q)


def atom_Q5(*args):
    return ("Q5",) + tuple(args)


def atom_key(a):
    def k(v):
        if isinstance(v, str):
            return (0, v)
        if v and v[0] == "*":
            return (1, elem_key(v))
        return (2, tuple(k(t) for t in v))
    return k(a)


def fmt_atom(a) -> str:
    kind = a[0]
    f = fmt_elem
    if kind == "w":
        return f"({f(a[1])}|ω)"
    if kind == "B":
        return f"({f(a[1])}|{f(a[2])})"
    if kind == "T":
        return f"({f(a[1])}|{f(a[2])}|{f(a[3])})"
    if kind == "Q":
        (u, v), (x, y) = a[1], a[2]
        return f"({f(u)}{f(v)}|{f(x)}{f(y)})"
    if kind == "P":
        (u, v), w, (x, y) = a[1], a[2], a[3]
        return f"({f(u)}{f(v)}|{f(w)}|{f(x)}{f(y)})"
    if kind == "Q5":
        return "(" + "".join(f(x) for x in a[1:]) + ")"
    return str(a)


def _mono(atoms):
    return tuple(sorted(atoms, key=atom_key))


class Inv:
    """Polynomial in invariant atoms with Poly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, v in terms.items():
                v = Poly.coerce(v)
                if not v.is_zero():
                    self.terms[m] = v

    @classmethod
    def const(cls, v):
        return cls({(): Poly.coerce(v)})

    @classmethod
    def atom(cls, a, coef=ONE):
        return cls({(a,): coef})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, v in other.terms.items():
            nv = out.get(m, ZERO) + v
            if nv.is_zero():
                out.pop(m, None)
            else:
                out[m] = nv
        r = Inv()
        r.terms = out
        return r

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        if isinstance(k, Poly):
            if k.is_zero():
                return Inv()
        elif k == 0:
            return Inv()
        r = Inv()
        r.terms = {m: v * k for m, v in self.terms.items()}
        return r

    def __mul__(self, other):
        if not isinstance(other, Inv):
            return self.scale(other)
        out = Inv()
        for m1, v1 in self.terms.items():
            for m2, v2 in other.terms.items():
                out = out + Inv({_mono(m1 + m2): v1 * v2})
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Inv):
            return NotImplemented
        return self.terms == other.terms

    def map_atoms(self, fn):
        """Substitute every atom by the Inv ``fn(atom)``."""
        out = Inv()
        for m, v in self.terms.items():
            term = Inv.const(v)
            for a in m:
                term = term * fn(a)
            out = out + term
        return out

    def atoms(self):
        return {a for m in self.terms for a in m}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: [atom_key(a) for a in m]):
            mono = "".join(fmt_atom(a) for a in m) or "1"
            parts.append(f"({self.terms[m]})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


# -- the invariant form on product trees --------------------------------------

def form(x, y) -> Inv:
    """(x|y) for element trees, rewritten into canonical atoms."""
    if x == OMEGA and y == OMEGA:
        return Inv.const(C * Fraction(1, 2))
    if y == OMEGA:
        x, y = y, x
    if x == OMEGA:
        if isinstance(y, str):
            return Inv.atom(atom_w(y))
        return form(y[1], y[2]).scale(2)
    if len(leaves(x)) > len(leaves(y)):
        x, y = y, x
    nx, ny = len(leaves(x)), len(leaves(y))
    if nx == 1 and ny == 1:
        return Inv.atom(atom_B(x, y))
    if nx == 1 and ny == 2:
        return Inv.atom(atom_T(x, y[1], y[2]))
    if nx == 2 and ny == 2:
        return Inv.atom(atom_Q((x[1], x[2]), (y[1], y[2])))
    if nx == 1 and ny == 3:
        pair, single = (y[1], y[2]) if not isinstance(y[1], str) else (y[2], y[1])
        return Inv.atom(atom_Q((pair[1], pair[2]), (single, x)))
    if nx == 2 and ny == 3:
        pair, single = (y[1], y[2]) if not isinstance(y[1], str) else (y[2], y[1])
        return Inv.atom(atom_P((x[1], x[2]), single, (pair[1], pair[2])))
    if nx == 1 and ny == 4:
        l, r = y[1], y[2]
        if len(leaves(l)) == 2 and len(leaves(r)) == 2:
            return Inv.atom(atom_P((l[1], l[2]), x, (r[1], r[2])))
        three, s3 = (l, r) if len(leaves(l)) == 3 else (r, l)
        pair, s2 = (three[1], three[2]) if not isinstance(three[1], str) else (three[2], three[1])
        return Inv.atom(atom_P((x, s3), s2, (pair[1], pair[2])))
    raise IrreducibleTerm(f"form of {fmt_elem(x)} and {fmt_elem(y)} exceeds five arguments")


def omega_pair(y) -> Inv:
    return form(OMEGA, y)


# -- the rewriting engine ---------------------------------------------------

def _weight(letter):
    return 1 - letter[1]


def _suffix_weights(word):
    out = [0] * (len(word) + 1)
    for i in range(len(word) - 1, -1, -1):
        out[i] = out[i + 1] + _weight(word[i])
    return out


def vc(word) -> Inv:
    """Vacuum coefficient of a mode word applied to the vacuum."""
    return _vc(tuple(word))


@lru_cache(maxsize=None)
def _vc(word) -> Inv:
    if not word:
        return Inv.const(1)
    sw = _suffix_weights(word)
    if sw[0] != 0:
        return Inv()
    if any(w < 0 or w == 1 for w in sw[1:]):
        return Inv()
    if any(x == OMEGA for x, _ in word):
        return _vc_omega(word, sw)
    return _vc_griess(word, sw)


def _bracket_L(m, y, q):
    """[L(m), y_(q)] as a list of (coefficient Poly, letters or None) terms.

    ``None`` letters stand for the identity operator."""
    out = []
    k = m - q + 1
    if k:
        out.append((Poly.const(k), ((y, m + q),)))
    if m + q == 1:
        central = Fraction((m + 1) * m * (m - 1), 6)
        if central:
            out.append((central, None))
    return out


def _expand(word, i, j, terms, sign, y):
    """Replace word[i:j] by each commutator term; central terms carry (omega|y)."""
    total = Inv()
    for coef, letters in terms:
        if letters is None:
            piece = _vc(word[:i] + word[j:]) * omega_pair(y)
        else:
            piece = _vc(word[:i] + letters + word[j:])
        total = total + piece.scale(Poly.coerce(coef) * sign)
    return total


def _vc_omega(word, sw):
    # L(0) letters become the weight of the state they act on
    for i, (x, n) in enumerate(word):
        if x == OMEGA and n == 1:
            if sw[i + 1] == 0:
                return Inv()
            return _vc(word[:i] + word[i + 1:]).scale(sw[i + 1])
    raising = [i for i, (x, n) in enumerate(word) if x == OMEGA and n >= 2]
    if raising:
        i = raising[-1]
        if i == len(word) - 1:
            return Inv()
        m = word[i][1] - 1
        y, q = word[i + 1]
        swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
        return _vc(swapped) + _expand(word, i, i + 2, _bracket_L(m, y, q), 1, y)
    # only lowering omega letters remain: move the leftmost one to the left end
    i = next(i for i, (x, _) in enumerate(word) if x == OMEGA)
    if i == 0:
        return Inv()
    m = word[i][1] - 1
    y, q = word[i - 1]
    swapped = word[:i - 1] + (word[i], word[i - 1]) + word[i + 1:]
    return _vc(swapped) + _expand(word, i - 1, i + 1, _bracket_L(m, y, q), -1, y)


def _vc_griess(word, sw):
    r = len(word)
    x_last, n_last = word[-1]
    if n_last >= 0:
        return Inv()
    if n_last < -1:
        k = -n_last - 1
        new = word[:-1] + ((OMEGA, 0),) * k + ((x_last, -1),)
        return _vc(new).scale(Fraction(1, factorial(k)))
    for j in range(1, r):
        if sw[j] == 0:
            return _vc(word[:j]) * _vc(word[j:])
    x0, n0 = word[0]
    if n0 <= 2:
        return Inv()
    if n0 > 3:
        new = ((x0, 3),) + ((OMEGA, 2),) * (n0 - 3) + word[1:]
        return _vc(new).scale(Fraction(1, factorial(n0 - 3)))
    if r == 2:
        return form(x0, word[1][0])
    y1, n1 = word[1]
    if n1 == 1:
        k, xy = product(x0, y1)
        return _vc(((xy, 3),) + word[2:]).scale(k)
    # trailing pair x_(n) y_(-1)|0>
    xp, np_ = word[-2]
    if np_ == 1:
        k, xy = product(xp, x_last)
        return _vc(word[:-2] + ((xy, -1),)).scale(k)
    if np_ == 2 or np_ >= 4:
        return Inv()
    lowering = [i for i in range(1, r) if word[i][1] >= 2]
    if not lowering:
        raise IrreducibleTerm(f"no reducible letter in {fmt_word(word)}")
    i = lowering[-1]
    x, m = word[i]
    y, q = word[i + 1]
    if q >= 1:
        if r == 5 and [n for _, n in word] == [3, 2, 1, 0, -1]:
            return Inv.atom(atom_Q5(*(e for e, _ in word)))
        raise IrreducibleTerm(f"cannot reduce {fmt_word(word)}")
    s = m + q - 1
    head, tail = word[:i], word[i + 2:]
    total = _vc(head + ((y, q), (x, m)) + tail)
    total = total + _vc(head + ((x, 1), (y, s)) + tail)
    total = total - _vc(head + ((y, s), (x, 1)) + tail)
    if m - 1:
        k, xy = product(x, y)
        total = total + _vc(head + ((xy, s),) + tail).scale((m - 1) * k)
    if m + q == 2 and comb(m, 3):
        total = total + (_vc(head + tail) * form(x, y)).scale(comb(m, 3))
    return total


def fmt_word(word) -> str:
    parts = []
    for x, n in word:
        if x == OMEGA:
            parts.append(f"L({n - 1})")
        else:
            parts.append(f"{fmt_elem(x)}_({n})")
    return "".join(parts) + "|0>"


# -- convenience words for the atoms ----------------------------------------

def atom_word(a):
    """A mode word whose vacuum coefficient equals the atom."""
    kind = a[0]
    if kind == "w":
        return ((OMEGA, 3), (a[1], -1))
    if kind == "B":
        return ((a[1], 3), (a[2], -1))
    if kind == "T":
        return ((a[1], 3), (a[2], 1), (a[3], -1))
    if kind == "Q":
        (u, v), (x, y) = a[1], a[2]
        return ((v, 3), (u, 1), (x, 1), (y, -1))
    if kind == "P":
        (u, v), w, (x, y) = a[1], a[2], a[3]
        return ((v, 3), (u, 1), (w, 1), (x, 1), (y, -1))
    if kind == "Q5":
        return tuple(zip(a[1:], (3, 2, 1, 0, -1)))
    raise ValueError(f"unknown atom {a!r}")


def virasoro_letter(n: int):
    """L(n) as a letter."""
    return (OMEGA, n + 1)
