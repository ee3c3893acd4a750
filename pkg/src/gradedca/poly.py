"""Exact coefficient arithmetic and sparse multivariate polynomials.

All rings are standard graded: every variable has degree 1.  Coefficients
live either in a prime field F_p (default p = 32003, large enough that
random linear forms behave generically) or in the rationals.
"""

from __future__ import annotations

from fractions import Fraction


class PolyError(Exception):
    pass


class RingMismatch(PolyError):
    pass


class PolyParseError(PolyError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


class CoeffField:
    """Prime field F_p or the rationals, with exact arithmetic."""

    def __init__(self, p: int | None = 32003):
        if p is not None and not _is_prime(p):
            raise PolyError(f"{p} is not prime")
        if p == 2:
            raise PolyError("characteristic 2 is not supported (p >= 3 required)")
        self.p = p

    @property
    def kind(self):
        return "rationals" if self.p is None else "prime-field"

    def coerce(self, c):
        if self.p is None:
            return Fraction(c)
        return int(c) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / a
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def random(self, rng):
        if self.p is None:
            return Fraction(rng.randrange(-20, 21))
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        if self.p is None:
            return Fraction(rng.choice([c for c in range(-20, 21) if c]))
        return rng.randrange(1, self.p)

    def __eq__(self, other):
        return isinstance(other, CoeffField) and self.p == other.p

    def __hash__(self):
        return hash(("CoeffField", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


# -- monomials: exponent tuples -------------------------------------------

def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_div(a, b):
    """a / b, or None when b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    return q if all(e >= 0 for e in q) else None


def mon_divides(b, a):
    return all(x >= y for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_deg(a):
    return sum(a)


def grevlex_key(mon):
    """Sort key: larger key = larger monomial in graded reverse lex."""
    return (sum(mon), tuple(-e for e in reversed(mon)))


def monomials_of_degree(num_vars, deg):
    """All exponent tuples in num_vars variables of total degree deg."""
    if deg < 0:
        return
    if num_vars == 0:
        if deg == 0:
            yield ()
        return
    if num_vars == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(num_vars - 1, deg - first):
            yield (first,) + rest


class PolyRing:
    """Standard-graded polynomial ring over a CoeffField."""

    def __init__(self, field: CoeffField, var_names):
        names = tuple(var_names)
        if len(set(names)) != len(names):
            raise PolyError("variable names must be unique")
        if not names:
            raise PolyError("at least one variable required")
        self.field = field
        self.var_names = names
        self.num_vars = len(names)
        self._var_index = {n: i for i, n in enumerate(names)}
        self.zero_mon = (0,) * self.num_vars

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {self.zero_mon: self.field.one()})

    def const(self, c):
        c = self.field.coerce(c)
        return Poly(self, {self.zero_mon: c} if c != 0 else {})

    def var(self, i_or_name):
        i = self._var_index[i_or_name] if isinstance(i_or_name, str) else i_or_name
        mon = tuple(1 if j == i else 0 for j in range(self.num_vars))
        return Poly(self, {mon: self.field.one()})

    def gens(self):
        return [self.var(i) for i in range(self.num_vars)]

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.num_vars or any(e < 0 for e in exps):
            raise PolyError(f"bad exponent vector {exps}")
        c = self.field.coerce(coeff)
        return Poly(self, {exps: c} if c != 0 else {})

    def random_form(self, degree, rng, homogeneous=True):
        """Random homogeneous form of the given degree, coefficients uniform."""
        assert homogeneous
        terms = {}
        for mon in monomials_of_degree(self.num_vars, degree):
            c = self.field.random(rng)
            if c != 0:
                terms[mon] = c
        return Poly(self, terms)

    def poly(self, text: str):
        return parse_poly(self, text)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.var_names == other.var_names)

    def __hash__(self):
        return hash((self.field, self.var_names))

    def __repr__(self):
        return f"{self.field}[{', '.join(self.var_names)}]"


class Poly:
    """Sparse polynomial: dict exponent-tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        fld = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.add(out.get(m, fld.zero()), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.ring, out)

    def __neg__(self):
        fld = self.ring.field
        return Poly(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        fld = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mon_mul(m1, m2)
                s = fld.add(out.get(m, fld.zero()), fld.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        fld = self.ring.field
        c = fld.coerce(c)
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, {m: fld.mul(cc, c) for m, cc in self.terms.items()})

    def __pow__(self, n):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def mul_monomial(self, mon, coeff=None):
        fld = self.ring.field
        if coeff is None:
            coeff = fld.one()
        return Poly(self.ring, {mon_mul(m, mon): fld.mul(c, coeff)
                                for m, c in self.terms.items()})

    def total_degree(self):
        """Max total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(mon_deg(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mon_deg(m) for m in self.terms}
        return len(degs) <= 1

    def leading(self):
        """(monomial, coeff) of the grevlex leading term."""
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        m = max(self.terms, key=grevlex_key)
        return m, self.terms[m]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.leading()
        return self.scale(self.ring.field.inv(c))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mon, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.var_names, mon):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            cs = str(c)
            if factors and c == self.ring.field.one():
                body = "*".join(factors)
            elif factors:
                body = f"{cs}*" + "*".join(factors)
            else:
                body = cs
            parts.append(body)
        return " + ".join(parts)


# -- parsing ---------------------------------------------------------------

def parse_poly(ring: PolyRing, text: str) -> Poly:
    """Parse `3*x^2*y - y^3` style syntax into a Poly."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_int():
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise PolyParseError("expected integer", pos)
        return int(text[start:pos])

    def parse_name():
        nonlocal pos
        start = pos
        while pos < n and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        return text[start:pos]

    def parse_factor():
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise PolyParseError("unexpected end of input", pos)
        ch = text[pos]
        if ch.isdigit():
            return ring.const(parse_int())
        if ch.isalpha() or ch == "_":
            name = parse_name()
            if name not in ring._var_index:
                raise PolyParseError(f"unknown variable '{name}'", pos - len(name))
            exp = 1
            skip_ws()
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                exp = parse_int()
            return ring.var(name) ** exp
        raise PolyParseError(f"unexpected character '{ch}'", pos)

    def parse_term():
        result = parse_factor()
        while True:
            skip_ws()
            if pos < n and text[pos] == "*":
                advance()
                result = result * parse_factor()
            else:
                return result

    def advance():
        nonlocal pos
        pos += 1

    skip_ws()
    sign = 1
    if pos < n and text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        advance()
    result = parse_term().scale(sign)
    while True:
        skip_ws()
        if pos >= n:
            return result
        if text[pos] not in "+-":
            raise PolyParseError(f"unexpected character '{text[pos]}'", pos)
        sign = -1 if text[pos] == "-" else 1
        advance()
        result = result + parse_term().scale(sign)
