"""Dense univariate polynomials with integer coefficients.

Exact rationals are plain :class:`fractions.Fraction` values; this module only
adds what the standard library lacks.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import comb
from numbers import Rational

__all__ = ["Polynomial", "binomial", "X"]

binomial = comb


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Polynomial in one indeterminate, coefficients stored ascending.

    ``Polynomial([0, 2, -1])`` is ``2p - p^2``.  Trailing zeros are stripped, so
    the zero polynomial has an empty coefficient tuple.  Instances are
    immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError(f"coefficient must be an integer, got {type(c).__name__}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _strip(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", _strip(coeffs))
        return obj

    @classmethod
    def monomial(cls, k, c=1):
        return cls._raw([0] * k + [c])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def lowest_degree(self):
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial._raw([other])
        if isinstance(other, Fraction) and other.denominator == 1:
            return Polynomial._raw([other.numerator])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            k = b[0]
            return Polynomial._raw([c * k for c in a])
        if len(a) == 1:
            k = a[0]
            return Polynomial._raw([c * k for c in b])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift_pow(self, e):
        """Multiply by ``(1 + x)^e`` using repeated in-place Pascal steps."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        out = list(self.coeffs)
        if not out:
            return ZERO
        for _ in range(e):
            out.append(0)
            for i in range(len(out) - 1, 0, -1):
                out[i] += out[i - 1]
        return Polynomial._raw(out)

    def compose(self, inner):
        """Return ``self(inner)`` for a polynomial ``inner``."""
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    # -- evaluation --------------------------------------------------------

    def __call__(self, r):
        return self.eval(r)

    def eval(self, r):
        """Horner evaluation; ``r`` may be int, Fraction or float."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
        if isinstance(r, Rational) and not isinstance(acc, Fraction):
            acc = Fraction(acc)
        return acc

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    # -- text forms --------------------------------------------------------

    def to_text(self, var="p"):
        """Render as ``c0 + c1*p + c2*p^2`` with zero terms omitted."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                term = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self):
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        return cls([int(c) for c in data])

    _TERM = re.compile(r"([+-]?)\s*(\d+)?\s*(\*?\s*([A-Za-z])\s*(?:\^\s*(\d+))?)?")

    @classmethod
    def from_text(cls, text, var="p"):
        """Parse the form produced by :meth:`to_text`."""
        s = text.replace(" ", "")
        if s == "0":
            return ZERO
        if not s:
            raise ValueError("empty polynomial text")
        out = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            sign, digits, monopart, name, exp = m.groups()
            if pos > 0 and not sign:
                raise ValueError(f"missing operator at {s[pos:]!r}")
            if digits is None and monopart is None:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            if name is not None and name != var:
                raise ValueError(f"unexpected indeterminate {name!r}")
            if monopart is not None and monopart.startswith("*") and digits is None:
                raise ValueError(f"dangling '*' at {s[pos:]!r}")
            c = int(digits) if digits is not None else 1
            if sign == "-":
                c = -c
            k = 0 if name is None else (int(exp) if exp else 1)
            out[k] = out.get(k, 0) + c
            pos = m.end()
        size = max(out) + 1
        return cls([out.get(k, 0) for k in range(size)])

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_text()


ZERO = Polynomial._raw([])
ONE = Polynomial._raw([1])
X = Polynomial._raw([0, 1])
Polynomial.ZERO = ZERO
Polynomial.ONE = ONE
Polynomial.X = X
