"""Exact univariate polynomial arithmetic over the rationals.

A polynomial in the variable t is represented by an immutable tuple of
Fraction coefficients indexed by degree, with no trailing zeros.  The zero
polynomial is the empty tuple; its degree is the sentinel NEG_INF.  All
arithmetic is exact: coefficients are arbitrary-precision rationals and no
floating point is used anywhere.

Places of the projective line over the rationals are represented by the
Place class: either a finite place carrying a monic polynomial of degree
at least one, or the place at infinity.  The valuation at infinity of a
section of degree bound n is n - deg f, so it depends on the ambient
bound, which is always passed explicitly.

The module also provides a recursive-descent parser for the polynomial
expression grammar

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 't' | '(' expr ')'
    rational := int ('/' uint)?

and a multiplicity-refined GCD-free basis: pairwise-coprime monic
polynomials such that every input is a constant times a product of powers
of basis elements, refined until each basis element divides each input
with a single well-defined multiplicity.  This replaces irreducible
factorization: all data consumed downstream depends only on valuations,
which are constant across the irreducible factors of one refined basis
element.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class _InfValuation:
    """Valuation of the zero polynomial: larger than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


class _NegInfDegree:
    """Degree of the zero polynomial: smaller than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


INF = _InfValuation()
NEG_INF = _NegInfDegree()


class PolyError(ValueError):
    """Raised for invalid polynomial operations (e.g. division by zero)."""


class ParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Poly:
    """Dense univariate polynomial over the rationals, in the variable t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(coeff: Scalar, power: int) -> "Poly":
        if power < 0:
            raise PolyError("negative power")
        return Poly((0,) * power + (coeff,))

    @property
    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise PolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative exponent")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise PolyError("division by zero polynomial")
        rem = list(self.coeffs)
        dn = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(0, len(rem) - dn)
        for k in range(len(rem) - 1, dn - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - dn] = q
            for i, oc in enumerate(other.coeffs):
                rem[k - dn + i] -= q * oc
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly(c / lead for c in self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def evaluate(self, x: Scalar) -> Fraction:
        """Value at a rational point, by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


T = Poly((0, 1))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, g) is monic g."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_divrem(f: Poly, g: Poly):
    """Quotient and remainder with deg r < deg g."""
    return divmod(f, g)


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f (f nonzero)."""
    if f.is_zero():
        raise PolyError("squarefree part of the zero polynomial")
    d = f.derivative()
    if d.is_zero():
        return Poly.const(1)
    return (f // poly_gcd(f, d)).monic()


def eval_mod(f: Poly, p: Poly) -> Poly:
    """Remainder of f modulo monic p: the residue of f at the place of p."""
    if p.is_zero() or p.degree < 1:
        raise PolyError("modulus must have degree >= 1")
    return f % p


def invert_mod(f: Poly, p: Poly) -> Poly:
    """Inverse of f in the residue ring modulo p, by the extended Euclid."""
    r0, r1 = p, f % p
    s0, s1 = Poly.zero(), Poly.const(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise PolyError("element is not invertible modulo the given place")
    return (s0 * Poly.const(1 / r0.leading_coefficient())) % p


class Place:
    """A closed point of the projective line: monic finite place or infinity."""

    __slots__ = ("poly",)

    def __init__(self, poly=None):
        # poly None means the place at infinity
        if poly is not None:
            if poly.is_zero() or poly.degree < 1:
                raise PolyError("finite place needs a polynomial of degree >= 1")
            poly = poly.monic()
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("Place is immutable")

    @staticmethod
    def finite(p: Poly) -> "Place":
        return Place(p)

    @staticmethod
    def infinity() -> "Place":
        return Place(None)

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else len(self.poly.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(("Place", self.poly))

    def __str__(self):
        return "infinity" if self.poly is None else format_poly(self.poly)

    def __repr__(self):
        return f"Place({self})"


def valuation(f: Poly, place: Place, level=None):
    """Order of vanishing of f at a place.

    At a finite place with monic p this is the exact multiplicity of p in
    f.  At infinity, f is read as a section of the degree-`level` space
    and the valuation is level - deg f; `level` is then required and
    deg f must not exceed it.  The zero polynomial has valuation INF
    everywhere.
    """
    if f.is_zero():
        return INF
    if place.is_infinity:
        if level is None:
            raise PolyError("valuation at infinity needs the ambient degree bound")
        d = len(f.coeffs) - 1
        if d > level:
            raise PolyError(f"degree {d} exceeds the ambient bound {level}")
        return level - d
    p = place.poly
    count = 0
    while True:
        q, r = divmod(f, p)
        if not r.is_zero():
            return count
        f = q
        count += 1
        if f.degree == 0:
            return count


def gcd_free_basis(polys: Sequence[Poly]) -> list:
    """Multiplicity-refined GCD-free basis of the nonzero inputs.

    Returns pairwise-coprime monic squarefree polynomials of degree >= 1
    such that every input is a constant times a product of basis-element
    powers, and each basis element divides each input with one
    well-defined multiplicity (no two irreducible factors of a basis
    element have different multiplicities in any input).
    """
    for f in polys:
        if f.is_zero():
            raise PolyError("gcd_free_basis requires nonzero inputs")
    work = [squarefree_part(f) for f in polys]
    work = [w for w in work if w.degree >= 1]

    basis: list[Poly] = []
    while work:
        f = work.pop().monic()
        if f.degree < 1:
            continue
        for i, g in enumerate(basis):
            h = poly_gcd(f, g)
            if h.degree >= 1:
                del basis[i]
                gh = (g // h).monic()
                fh = (f // h).monic()
                work.append(h)
                if gh.degree >= 1:
                    work.append(gh)
                if fh.degree >= 1:
                    work.append(fh)
                break
        else:
            basis.append(f)

    # refine until each basis element has a single multiplicity in each input
    changed = True
    while changed:
        changed = False
        for g in list(basis):
            for f in polys:
                residual = f
                while True:
                    q, r = divmod(residual, g)
                    if not r.is_zero():
                        break
                    residual = q
                h = poly_gcd(residual, g)
                if 1 <= h.degree < g.degree:
                    basis.remove(g)
                    basis.append(h)
                    basis.append((g // h).monic())
                    changed = True
                    break
            if changed:
                break

    basis.sort(key=lambda p: (len(p.coeffs), p.coeffs))
    return basis


# ---------------------------------------------------------------------------
# parsing and printing


def parse_poly(text: str) -> Poly:
    """Parse an arithmetic expression in t into an expanded polynomial."""
    return _Parser(text).parse()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> Poly:
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        return value

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> Poly:
        value = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.pos += 1
                value = value + self.term()
            elif c == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> Poly:
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self) -> Poly:
        value = self.base()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                raise ParseError("exponent must be a nonnegative integer", self.pos)
            return value ** self.uint()
        return value

    def base(self) -> Poly:
        c = self.peek()
        if c == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if c == "t":
            self.pos += 1
            return T
        if c.isdigit() or c == "-":
            return Poly.const(self.rational())
        raise ParseError("expected a rational, 't' or '('", self.pos)

    def rational(self) -> Fraction:
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                raise ParseError("expected digits after '-'", self.pos)
        num = self.uint()
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                raise ParseError("expected an unsigned denominator", self.pos)
            den = self.uint()
            if den == 0:
                raise ParseError("zero denominator", self.pos)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected digits", self.pos)
        return int(self.text[start:self.pos])


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Poly) -> str:
    """Canonical text form, re-parseable by parse_poly."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        first = not parts
        mag = abs(c)
        if k == 0:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "t" if k == 1 else f"t^{k}"
        else:
            body = f"{_format_coeff(mag)}*" + ("t" if k == 1 else f"t^{k}")
        if first:
            # a leading negative term is printed with a signed literal so the
            # output stays inside the grammar, which has no unary minus
            if c < 0:
                if k == 0:
                    body = _format_coeff(c)
                elif mag == 1:
                    body = "-1*" + ("t" if k == 1 else f"t^{k}")
                else:
                    body = f"{_format_coeff(c)}*" + ("t" if k == 1 else f"t^{k}")
            parts.append(body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
