"""Exact sparse Laurent polynomials over arbitrary-precision integers.

Two flavours: one variable (h-vectors, parking enumerators, HOMFLY tops) and
two variables (full HOMFLY values, Tutte polynomials).  Values are
canonical sparse maps exponent -> coefficient with no stored zeros, treated
as immutable, so equality is exact map equality and hashing is safe.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _clean(items):
    return {e: c for e, c in items if c != 0}


class Laurent1:
    """Laurent polynomial in one variable with integer coefficients.

    The variable name is display metadata only; equality compares the
    coefficient maps.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var: str = "x"):
        object.__setattr__(self, "coeffs", _clean((coeffs or {}).items()))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Laurent1 is immutable")

    @classmethod
    def zero(cls, var: str = "x") -> "Laurent1":
        return cls({}, var)

    @classmethod
    def const(cls, c: int, var: str = "x") -> "Laurent1":
        return cls({0: c}, var)

    @classmethod
    def term(cls, c: int, e: int, var: str = "x") -> "Laurent1":
        return cls({e: c}, var)

    def _coerce(self, other):
        if isinstance(other, int):
            return Laurent1.const(other, self.var)
        if isinstance(other, Laurent1):
            return other
        if isinstance(other, Laurent2):
            raise TypeError("cannot mix one- and two-variable Laurent polynomials")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent1(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Laurent1({e: -c for e, c in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent1(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = Laurent1.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent1.const(other)
        if not isinstance(other, Laurent1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        return max(self.coeffs) if self.coeffs else None

    def min_degree(self):
        return min(self.coeffs) if self.coeffs else None

    def eval_int(self, x: int) -> int:
        """Exact evaluation at an integer.

        Negative exponents require x nonzero and only an integral total;
        the value is computed over the rationals and checked.
        """
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * Fraction(x) ** e
        if total.denominator != 1:
            raise ValueError("evaluation is not an integer")
        return int(total)

    def substitute_power(self, exponent: int, var: str | None = None) -> "Laurent1":
        """Replace the variable x by y^exponent: c*x^k becomes c*y^(k*exponent)."""
        if exponent == 0:
            raise ValueError("substitution exponent must be nonzero")
        return Laurent1(
            {e * exponent: c for e, c in self.coeffs.items()},
            var if var is not None else self.var,
        )

    def substitute_shifted(self, shift: int, var: str | None = None) -> "Laurent1":
        """Return f(x + shift), expanded exactly.

        Only defined for ordinary polynomials (no negative exponents).
        """
        if self.coeffs and min(self.coeffs) < 0:
            raise ValueError("argument shift requires nonnegative exponents")
        out: dict[int, int] = {}
        for e, c in self.coeffs.items():
            for j in range(e + 1):
                out[j] = out.get(j, 0) + c * comb(e, j) * shift ** (e - j)
        return Laurent1(out, var if var is not None else self.var)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            parts.append(str(c) if e == 0 else f"{c}*{self.var}^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "Laurent1":
        """Inverse of str(); accepts terms `c`, `x^k` and `c*x^k`."""
        text = text.strip()
        if text == "0":
            return cls.zero(var or "x")
        out: dict[int, int] = {}
        seen_var = None
        for chunk in text.replace("- ", "+ -").split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            coeff, exp = _parse_term_1(chunk)
            if exp is not None:
                name, k = exp
                seen_var = seen_var or name
                out[k] = out.get(k, 0) + coeff
            else:
                out[0] = out.get(0, 0) + coeff
        return cls(out, var or seen_var or "x")


def _parse_term_1(chunk: str):
    sign = 1
    if chunk.startswith("-"):
        sign, chunk = -1, chunk[1:].strip()
    pieces = [p.strip() for p in chunk.split("*")]
    coeff = 1
    exp = None
    for p in pieces:
        if not p:
            continue
        if "^" in p:
            name, k = p.split("^")
            exp = (name.strip(), int(k))
        elif p.lstrip("-").isdigit():
            coeff *= int(p)
        else:
            exp = (p, 1)
    return sign * coeff, exp


class Laurent2:
    """Laurent polynomial in two variables (by default v and z)."""

    __slots__ = ("coeffs", "vars")

    def __init__(self, coeffs=None, vars: tuple[str, str] = ("v", "z")):
        object.__setattr__(self, "coeffs", _clean((coeffs or {}).items()))
        object.__setattr__(self, "vars", vars)

    def __setattr__(self, name, value):
        raise AttributeError("Laurent2 is immutable")

    @classmethod
    def zero(cls, vars=("v", "z")) -> "Laurent2":
        return cls({}, vars)

    @classmethod
    def const(cls, c: int, vars=("v", "z")) -> "Laurent2":
        return cls({(0, 0): c}, vars)

    @classmethod
    def term(cls, c: int, a: int, b: int, vars=("v", "z")) -> "Laurent2":
        return cls({(a, b): c}, vars)

    def _coerce(self, other):
        if isinstance(other, int):
            return Laurent2.const(other, self.vars)
        if isinstance(other, Laurent2):
            return other
        if isinstance(other, Laurent1):
            raise TypeError("cannot mix one- and two-variable Laurent polynomials")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent2(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return Laurent2({e: -c for e, c in self.coeffs.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent2(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = Laurent2.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent2.const(other)
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_degree_second(self):
        """Largest exponent of the second variable (z); None for 0."""
        return max(b for _, b in self.coeffs) if self.coeffs else None

    def slice_second(self, k: int) -> Laurent1:
        """Coefficient of (second variable)^k, as a Laurent1 in the first."""
        return Laurent1(
            {a: c for (a, b), c in self.coeffs.items() if b == k}, self.vars[0]
        )

    def set_first_one(self) -> Laurent1:
        """Substitute 1 for the first variable."""
        out: dict[int, int] = {}
        for (_, b), c in self.coeffs.items():
            out[b] = out.get(b, 0) + c
        return Laurent1(out, self.vars[1])

    def mirror_first(self) -> "Laurent2":
        """Substitute -1/v for the first variable (mirror-image rule)."""
        return Laurent2(
            {(-a, b): c * (-1) ** a for (a, b), c in self.coeffs.items()}, self.vars
        )

    def eval_int(self, x: int, y: int) -> int:
        total = Fraction(0)
        for (a, b), c in self.coeffs.items():
            total += c * Fraction(x) ** a * Fraction(y) ** b
        if total.denominator != 1:
            raise ValueError("evaluation is not an integer")
        return int(total)

    def __str__(self):
        if not self.coeffs:
            return "0"
        u, w = self.vars
        parts = []
        for a, b in sorted(self.coeffs, key=lambda ab: (ab[1], ab[0])):
            c = self.coeffs[(a, b)]
            factors = [str(c)]
            if a != 0:
                factors.append(f"{u}^{a}")
            if b != 0:
                factors.append(f"{w}^{b}")
            if factors == [str(c)]:
                parts.append(str(c))
            else:
                parts.append("*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str, vars: tuple[str, str] = ("v", "z")) -> "Laurent2":
        text = text.strip()
        if text == "0":
            return cls.zero(vars)
        out: dict[tuple[int, int], int] = {}
        for chunk in text.replace("- ", "+ -").split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:].strip()
            coeff, a, b = 1, 0, 0
            for p in (q.strip() for q in chunk.split("*")):
                if not p:
                    continue
                if "^" in p:
                    name, k = p.split("^")
                    name = name.strip()
                    if name == vars[0]:
                        a += int(k)
                    elif name == vars[1]:
                        b += int(k)
                    else:
                        raise ValueError(f"unknown variable {name!r}")
                elif p.lstrip("-").isdigit():
                    coeff *= int(p)
                elif p == vars[0]:
                    a += 1
                elif p == vars[1]:
                    b += 1
                else:
                    raise ValueError(f"cannot parse term piece {p!r}")
            out[(a, b)] = out.get((a, b), 0) + sign * coeff
        return cls(out, vars)


def conway_and_alexander(P: Laurent2):
    """Specialize a HOMFLY value to the Conway and Alexander polynomials.

    The Conway polynomial is P(1, z).  The Alexander polynomial is obtained
    by substituting z = t^(1/2) - t^(-1/2); it is computed over half-integer
    exponents of t.  For odd-component links the half-integer parts cancel
    and the result lives in Z[t, 1/t]; for even-component links it is
    honestly half-integer graded and returned in the variable t^(1/2) with
    the flag set.

    Returns (conway, alexander, half_integer_graded).

    Raises ValueError if the z-exponents of P mix parities, which cannot
    happen for the HOMFLY polynomial of a link.
    """
    parities = {b % 2 for _, b in P.coeffs}
    if len(parities) > 1:
        raise ValueError("mixed z-exponent parity: not a valid HOMFLY value")
    conway = P.set_first_one()
    # expand each z^k as (w - 1/w)^k with w = t^(1/2)
    half = Laurent1.zero("t^(1/2)")
    w_minus = Laurent1({1: 1, -1: -1}, "t^(1/2)")
    for k in sorted(conway.coeffs):
        c = conway.coeffs[k]
        if k < 0:
            raise ValueError("Conway polynomial has negative z-exponents")
        half = half + c * w_minus**k
    exps = {e % 2 for e in half.coeffs}
    if len(exps) > 1:
        raise ValueError("residual half-integer t-exponents: invalid input")
    if exps == {1}:
        return conway, half, True
    alexander = Laurent1({e // 2: c for e, c in half.coeffs.items()}, "t")
    return conway, alexander, False
