"""Exact coefficient arithmetic for both target theories.

Three rings appear:

* ``GaussRational`` -- Q(i), numbers re + im*i with rational parts.
* ``GroundPoly2``   -- Q(i)[t], the sl(2) ground ring.  q(t) = 4.
* ``GroundPoly3``   -- Q(i)[a,b,c], the sl(3) ground ring with
  q(a) = 2, q(b) = 4, q(c) = 6.  (All values produced by the relations
  have coefficients in Q, but keeping Q(i) costs nothing and lets the
  two theories share one scalar type.)

``LaurentPoly`` is the integer Laurent ring Z[q, q^-1] used by the
graded-dimension oracles.

All values are immutable and hashable; arithmetic returns new objects.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

from foamcat.errors import InhomogeneousError, RingMismatchError, UndefinedDegreeError


class GaussRational:
    """A Gaussian rational re + im*i, always in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise RingMismatchError(f"cannot coerce {value!r} into Q(i)")

    def __add__(self, other):
        other = GaussRational.coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRational.coerce(other))

    def __rsub__(self, other):
        return GaussRational.coerce(other) + (-self)

    def __mul__(self, other):
        other = GaussRational.coerce(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def __truediv__(self, other):
        other = GaussRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * other.conjugate()
        return GaussRational(num.re / norm, num.im / norm)

    def __eq__(self, other):
        try:
            other = GaussRational.coerce(other)
        except RingMismatchError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gauss(self)


ONE = GaussRational(1)
I = GaussRational(0, 1)
MINUS_ONE = GaussRational(-1)
MINUS_I = GaussRational(0, -1)
ZERO = GaussRational(0)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_gauss(z: GaussRational) -> str:
    """Canonical text form: ``3/2 + 1/2i``, ``-i``, ``0``."""
    if z.re == 0 and z.im == 0:
        return "0"
    parts = []
    if z.re != 0:
        parts.append(_frac_str(z.re))
    if z.im != 0:
        mag = abs(z.im)
        body = "i" if mag == 1 else _frac_str(mag) + "i"
        if not parts:
            parts.append(body if z.im > 0 else "-" + body)
        else:
            parts.append(("+ " if z.im > 0 else "- ") + body)
    return " ".join(parts)


_GAUSS_TERM = _re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(i)?\s*")


def parse_gauss(text: str) -> GaussRational:
    """Parse the canonical text form of a Gaussian rational."""
    pos = 0
    total = GaussRational(0)
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    seen = False
    while pos < len(text):
        m = _GAUSS_TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad scalar syntax near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            total = total + GaussRational(0, sign * mag)
        else:
            total = total + GaussRational(sign * mag)
        pos = m.end()
        seen = True
    if not seen:
        raise ValueError(f"bad scalar: {text!r}")
    return total


class _Poly:
    """Shared dict-backed polynomial machinery.

    Subclasses fix the monomial key shape and the q-degree of a key.
    Keys map to nonzero GaussRational coefficients.
    """

    __slots__ = ("terms",)
    _NVARS = None  # subclasses set

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = GaussRational.coerce(coeff)
                if coeff:
                    clean[self._check_key(key)] = coeff
        object.__setattr__(self, "terms", _frozendict(clean))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _check_key(cls, key):
        raise NotImplementedError

    @classmethod
    def _key_qdeg(cls, key):
        raise NotImplementedError

    @classmethod
    def scalar(cls, value):
        value = GaussRational.coerce(value)
        return cls({cls._unit_key(): value})

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls.scalar(1)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction, GaussRational)):
            return type(self).scalar(other)
        raise RingMismatchError(
            f"cannot mix {type(self).__name__} with {type(other).__name__}"
        )

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, ZERO) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = self._mul_key(k1, k2)
                new = out.get(key, ZERO) + c1 * c2
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return type(self)(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except RingMismatchError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def q_degree(self) -> int:
        """Common q-degree of all monomials; errors if zero or mixed."""
        if not self.terms:
            raise UndefinedDegreeError("q-degree of the zero polynomial is undefined")
        degs = {key: self._key_qdeg(key) for key in self.terms}
        values = set(degs.values())
        if len(values) > 1:
            bad = sorted(degs.items(), key=lambda kv: kv[1])
            raise InhomogeneousError(
                f"inhomogeneous polynomial, degrees {sorted(values)}", parts=bad
            )
        return values.pop()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def __repr__(self):
        return f"{type(self).__name__}.parse({str(self)!r})"


class _frozendict(dict):
    __slots__ = ("_hash",)

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            self._hash = hash(frozenset(self.items()))
            return self._hash

    def _readonly(self, *args, **kwargs):
        raise TypeError("frozen dict")

    __setitem__ = _readonly
    __delitem__ = _readonly
    pop = _readonly
    popitem = _readonly
    clear = _readonly
    update = _readonly
    setdefault = _readonly


class GroundPoly2(_Poly):
    """Q(i)[t]; a monomial c*t^k has q-degree 4k."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        key = int(key)
        if key < 0:
            raise ValueError("t-exponent must be non-negative")
        return key

    @classmethod
    def _unit_key(cls):
        return 0

    @classmethod
    def _key_qdeg(cls, key):
        return 4 * key

    @staticmethod
    def _mul_key(k1, k2):
        return k1 + k2

    @staticmethod
    def _sort_key(key):
        return key

    @classmethod
    def t(cls, power=1):
        return cls({power: ONE})

    def __str__(self):
        return _format_poly(self, lambda k: _monomial_text([("t", k)]))

    @classmethod
    def parse(cls, text):
        return _parse_poly(text, cls, {"t": 0})


class GroundPoly3(_Poly):
    """Q(i)[a,b,c]; q(a) = 2, q(b) = 4, q(c) = 6."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        key = tuple(int(x) for x in key)
        if len(key) != 3 or any(x < 0 for x in key):
            raise ValueError("exponent key must be a triple of non-negative ints")
        return key

    @classmethod
    def _unit_key(cls):
        return (0, 0, 0)

    @classmethod
    def _key_qdeg(cls, key):
        return 2 * key[0] + 4 * key[1] + 6 * key[2]

    @staticmethod
    def _mul_key(k1, k2):
        return (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])

    @staticmethod
    def _sort_key(key):
        return key

    @classmethod
    def a(cls):
        return cls({(1, 0, 0): ONE})

    @classmethod
    def b(cls):
        return cls({(0, 1, 0): ONE})

    @classmethod
    def c(cls):
        return cls({(0, 0, 1): ONE})

    def __str__(self):
        return _format_poly(
            self, lambda k: _monomial_text([("a", k[0]), ("b", k[1]), ("c", k[2])])
        )

    @classmethod
    def parse(cls, text):
        return _parse_poly(text, cls, {"a": 0, "b": 1, "c": 2})


class LaurentPoly:
    """Z[q, q^-1], used for graded dimensions and the Kuperberg bracket."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, v in terms.items():
                v = int(v)
                if v:
                    clean[int(k)] = v
        object.__setattr__(self, "terms", _frozendict(clean))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def q(cls, power=1):
        return cls({power: 1})

    @classmethod
    def scalar(cls, value):
        return cls({0: value})

    @classmethod
    def one(cls):
        return cls({0: 1})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.scalar(other)
        raise RingMismatchError(f"cannot mix LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            new = out.get(k, 0) + v
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                new = out.get(k, 0) + v1 * v2
                if new:
                    out[k] = new
                else:
                    out.pop(k, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers: invert monomials explicitly")
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except RingMismatchError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(("LaurentPoly", self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __call__(self, value):
        """Evaluate at a numeric q (used for total ranks at q=1)."""
        return sum(v * value**k for k, v in self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            v = self.terms[k]
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if k != 0 and abs(v) == 1:
                body = mono if v > 0 else "-" + mono
            else:
                body = f"{v}" if k == 0 else f"{v}*{mono}"
            if bits and not body.startswith("-"):
                bits.append("+ " + body)
            elif bits:
                bits.append("- " + body[1:])
            else:
                bits.append(body)
        return " ".join(bits)

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms)!r})"


def _monomial_text(powers):
    bits = []
    for name, k in powers:
        if k == 1:
            bits.append(name)
        elif k > 1:
            bits.append(f"{name}^{k}")
    return "*".join(bits)


def _format_poly(poly, key_text):
    if not poly.terms:
        return "0"
    bits = []
    for key, coeff in poly.sorted_terms():
        mono = key_text(key)
        if not mono:
            body = format_gauss(coeff)
        elif coeff == ONE:
            body = mono
        elif coeff == MINUS_ONE:
            body = "-" + mono
        else:
            ctext = format_gauss(coeff)
            if " " in ctext:  # mixed re/im part needs grouping
                ctext = "(" + ctext + ")"
            body = f"{ctext}*{mono}"
        if bits:
            if body.startswith("-"):
                bits.append("- " + body[1:])
            else:
                bits.append("+ " + body)
        else:
            bits.append(body)
    return " ".join(bits)


_TOKEN = _re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<imag>i)(?![a-z])|(?P<var>[a-z])(?:\^(?P<pow>\d+))?"
    r"|(?P<op>[+\-*()]))"
)


def _parse_poly(text, cls, var_slots):
    """Parse sums of monomials like ``a^2*b - 4i*c`` or ``2*t^3``.

    Grammar: term (("+"|"-") term)*, term = factor ("*" factor)*,
    factor = number | number "i" | "i" | var ["^" power] | "(" scalar ")".
    Only scalar subexpressions may be parenthesized.
    """
    pos = 0
    n = len(text)

    def error(msg):
        raise ValueError(f"{msg} near {text[pos:pos+12]!r}")

    def next_token():
        nonlocal pos
        if pos >= n:
            return None
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            error("bad polynomial syntax")
        pos = m.end()
        return m

    result = cls.zero()
    sign = 1
    pending = None  # current term accumulator
    exps = None

    def flush():
        nonlocal result, pending, exps, sign
        if pending is not None:
            key = tuple(exps) if len(var_slots) > 1 else exps[0]
            result = result + cls({key: pending * sign})
        pending = None
        sign = 1

    while True:
        save = pos
        m = next_token()
        if m is None:
            break
        if m.group("op") == "+":
            flush()
            continue
        if m.group("op") == "-":
            if pending is None:
                sign = -sign
            else:
                flush()
                sign = -1
            continue
        if m.group("op") == "*":
            if pending is None:
                error("dangling '*'")
            continue
        if pending is None:
            pending = ONE
            exps = [0] * max(len(var_slots), 1)
        if m.group("op") == "(":
            depth = 1
            start = pos
            while pos < n and depth:
                if text[pos] == "(":
                    depth += 1
                elif text[pos] == ")":
                    depth -= 1
                pos += 1
            if depth:
                error("unbalanced parenthesis")
            pending = pending * parse_gauss(text[start : pos - 1])
            continue
        if m.group("op") == ")":
            pos = save
            error("unbalanced parenthesis")
        if m.group("num"):
            mag = Fraction(m.group("num"))
            # allow "4i" with no star
            m2 = _re.match(r"i(?![a-z])", text[pos:])
            if m2:
                pos += m2.end()
                pending = pending * GaussRational(0, mag)
            else:
                pending = pending * GaussRational(mag)
            continue
        if m.group("imag"):
            pending = pending * I
            continue
        var = m.group("var")
        if var not in var_slots:
            error(f"unknown variable {var!r}")
        power = int(m.group("pow") or 1)
        exps[var_slots[var]] += power
    flush()
    return result


def q_degree(poly) -> int:
    """q-degree of a homogeneous nonzero ground polynomial."""
    if not isinstance(poly, (_Poly,)):
        raise RingMismatchError(f"{type(poly).__name__} has no q-degree")
    return poly.q_degree()
