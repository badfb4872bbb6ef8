"""The exact coefficient field Q(p, h).

Every scalar in the toolkit is a reduced fraction of polynomials in two
commuting symbols:

* ``p``, the quarter power of the deformation parameter of the standard
  quantum superalgebra (so integer powers of p cover every exponent the
  representation theory produces: q = p^2, q^(1/2) = p);
* ``h``, the Jordanian deformation parameter, kept symbolic throughout.

Polynomials are sparse dicts mapping ``(p_exponent, h_exponent)`` to
``fractions.Fraction``.  A ``Scalar`` stores a numerator and denominator
that are always GCD-reduced, with the denominator's leading coefficient
(largest ``(h_exponent, p_exponent)`` pair) normalized to one.  Equality
is therefore plain structural equality and hashing is safe.

Nothing in this module (or anywhere in the package) uses floating point.
The classical limit p -> 1 is taken by exact substitution on the reduced
form; a reduced denominator vanishing at p = 1 is a genuine pole and
raises :class:`~ospq.errors.PoleAtUnity`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CancellationFailure, DivisionByZero, PoleAtUnity
from .halfint import HalfInt

# ---------------------------------------------------------------------------
# raw polynomial layer: dict[(ep, eh)] -> Fraction, zero coefficients absent
# ---------------------------------------------------------------------------

_F0 = Fraction(0)
_F1 = Fraction(1)


def _pzero():
    return {}


def _pconst(c) -> dict:
    c = Fraction(c)
    return {(0, 0): c} if c else {}


_PONE = _pconst(1)


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, _F0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pneg(a: dict) -> dict:
    return {k: -v for k, v in a.items()}


def _psub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, _F0) - v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for (ea, ha), ca in a.items():
        for (eb, hb), cb in b.items():
            k = (ea + eb, ha + hb)
            s = out.get(k, _F0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _pscale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _ppow(a: dict, n: int) -> dict:
    out = dict(_PONE)
    base = a
    while n:
        if n & 1:
            out = _pmul(out, base)
        base = _pmul(base, base) if n > 1 else base
        n >>= 1
    return out


def _plead_key(a: dict):
    """Leading monomial under the fixed order: lex on (h_exp, p_exp)."""
    return max(a, key=lambda k: (k[1], k[0]))


def _pdeg_h(a: dict) -> int:
    return max(k[1] for k in a) if a else -1


def _pat_p1(a: dict) -> dict:
    """Substitute p = 1; result is a univariate dict {h_exp: Fraction}."""
    out = {}
    for (_, eh), c in a.items():
        s = out.get(eh, _F0) + c
        if s:
            out[eh] = s
        else:
            out.pop(eh, None)
    return out


def _p_from_h_univar(u: dict) -> dict:
    return {(0, eh): c for eh, c in u.items()}


def _psub_h(a: dict, r: Fraction) -> dict:
    """Substitute h = r (an exact rational)."""
    out = {}
    for (ep, eh), c in a.items():
        v = c * r**eh
        if v:
            k = (ep, 0)
            s = out.get(k, _F0) + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _pdiv_p_minus_1(a: dict):
    """Divide by (p - 1).  Returns (quotient, True) or (None, False)."""
    # Treat a as a polynomial in p with h-polynomial coefficients and run
    # synthetic division at the root p = 1 for each h stratum.
    if not a:
        return {}, True
    by_h: dict[int, dict[int, Fraction]] = {}
    for (ep, eh), c in a.items():
        by_h.setdefault(eh, {})[ep] = c
    out = {}
    for eh, coeffs in by_h.items():
        deg = max(coeffs)
        carry = _F0
        # quotient coefficient of p^k is sum of dividend coefficients above k
        for k in range(deg - 1, -1, -1):
            carry += coeffs.get(k + 1, _F0)
            if carry:
                out[(k, eh)] = carry
        if carry + coeffs.get(0, _F0) != 0:
            return None, False
    return out, True


# -- univariate helpers in p over Q (dict {ep: Fraction}) -------------------


def _u_from_terms(a: dict) -> dict:
    out = {}
    for (ep, eh), c in a.items():
        if eh != 0:
            raise ValueError("not univariate in p")
        out[ep] = c
    return out


def _u_is_zero(u: dict) -> bool:
    return not u


def _u_monic(u: dict) -> dict:
    if not u:
        return u
    lead = u[max(u)]
    if lead == 1:
        return u
    return {k: v / lead for k, v in u.items()}


def _u_rem(a: dict, b: dict) -> dict:
    db = max(b)
    lb = b[db]
    a = dict(a)
    while a:
        da = max(a)
        if da < db:
            break
        factor = a[da] / lb
        del a[da]
        shift = da - db
        for e, c in b.items():
            if e == db:
                continue
            k = e + shift
            s = a.get(k, _F0) - factor * c
            if s:
                a[k] = s
            else:
                a.pop(k, None)
    return a


def _u_gcd(a: dict, b: dict) -> dict:
    a, b = dict(a), dict(b)
    while b:
        a, b = b, _u_rem(a, b)
    return _u_monic(a)


def _u_div_exact(a: dict, b: dict) -> dict:
    """Exact univariate division; raises if a remainder survives."""
    if not a:
        return {}
    db = max(b)
    lb = b[db]
    a = dict(a)
    q = {}
    while a:
        da = max(a)
        if da < db:
            raise CancellationFailure("inexact univariate division")
        factor = a[da] / lb
        q[da - db] = factor
        del a[da]
        shift = da - db
        for e, c in b.items():
            if e == db:
                continue
            k = e + shift
            s = a.get(k, _F0) - factor * c
            if s:
                a[k] = s
            else:
                a.pop(k, None)
    return q


def _u_mul(a: dict, b: dict) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = ea + eb
            s = out.get(k, _F0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


# -- bivariate GCD (h-major form: dict {eh: p-poly dict}) -------------------


def _h_major(a: dict) -> dict:
    out: dict[int, dict] = {}
    for (ep, eh), c in a.items():
        out.setdefault(eh, {})[ep] = c
    return out


def _h_major_to_terms(m: dict) -> dict:
    out = {}
    for eh, u in m.items():
        for ep, c in u.items():
            out[(ep, eh)] = c
    return out


def _content_p(m: dict) -> dict:
    g = {}
    for u in m.values():
        g = _u_gcd(g, u) if g else _u_monic(dict(u))
        if g == {0: _F1}:
            break
    return g


def _h_major_div_u(m: dict, g: dict) -> dict:
    if g == {0: _F1}:
        return m
    return {eh: _u_div_exact(u, g) for eh, u in m.items()}


def _h_prem(a: dict, b: dict) -> dict:
    """Pseudo-remainder of h-major polynomials with p-poly coefficients."""
    da, db = max(a), max(b)
    lb = b[db]
    a = {eh: dict(u) for eh, u in a.items()}
    while a:
        da = max(a)
        if da < db:
            break
        la = a.pop(da)
        # a <- lb * a - la * h^(da-db) * b   (drop the cancelled lead)
        new = {}
        for eh, u in a.items():
            new[eh] = _u_mul(u, lb)
        for eh, u in b.items():
            if eh == db:
                continue
            k = eh + da - db
            prod = _u_mul(u, la)
            if k in new:
                merged = dict(new[k])
                for e, c in prod.items():
                    s = merged.get(e, _F0) - c
                    if s:
                        merged[e] = s
                    else:
                        merged.pop(e, None)
                new[k] = merged
            else:
                new[k] = {e: -c for e, c in prod.items()}
        a = {eh: u for eh, u in new.items() if u}
    return a


def _monomial_gcd(a: dict, b: dict) -> dict:
    ep = min(min(k[0] for k in a), min(k[0] for k in b))
    eh = min(min(k[1] for k in a), min(k[1] for k in b))
    return {(ep, eh): _F1}


def _pgcd(a: dict, b: dict) -> dict:
    """GCD in Q[p, h], normalized with leading coefficient one."""
    if not a or not b:
        raise ValueError("gcd of zero polynomial")
    if len(a) == 1 or len(b) == 1:
        return _monomial_gcd(a, b)
    # strip common monomial content first
    epa = min(k[0] for k in a)
    eha = min(k[1] for k in a)
    epb = min(k[0] for k in b)
    ehb = min(k[1] for k in b)
    mono = (min(epa, epb), min(eha, ehb))
    ma = _h_major({(ep - epa, eh - eha): c for (ep, eh), c in a.items()})
    mb = _h_major({(ep - epb, eh - ehb): c for (ep, eh), c in b.items()})
    ca, cb = _content_p(ma), _content_p(mb)
    g0 = _u_gcd(ca, cb)
    pa = _h_major_div_u(ma, ca)
    pb = _h_major_div_u(mb, cb)
    if max(pa) == 0 or max(pb) == 0:
        prim = {0: {0: _F1}}
    else:
        while True:
            if not pb:
                prim = pa
                break
            if max(pb) == 0:
                prim = {0: {0: _F1}}
                break
            r = _h_prem(pa, pb)
            pa = pb
            pb = _h_major_div_u(r, _content_p(r)) if r else {}
    out = {}
    for eh, u in _u_mul_h(prim, g0).items():
        for ep, c in u.items():
            out[(ep + mono[0], eh + mono[1])] = c
    lead = out[_plead_key(out)]
    if lead != 1:
        out = {k: v / lead for k, v in out.items()}
    return out


def _u_mul_h(m: dict, g: dict) -> dict:
    if g == {0: _F1}:
        return m
    return {eh: _u_mul(u, g) for eh, u in m.items()}


def _pdiv_exact(a: dict, b: dict) -> dict:
    """Exact division in Q[p, h] (b is known to divide a)."""
    if not a:
        return {}
    if len(b) == 1:
        (ep, eh), c = next(iter(b.items()))
        return {(kp - ep, kh - eh): v / c for (kp, kh), v in a.items()}
    ma, mb = _h_major(a), _h_major(b)
    db = max(mb)
    lb = mb[db]
    q: dict[int, dict] = {}
    while ma:
        da = max(ma)
        if da < db:
            raise CancellationFailure("inexact bivariate division")
        qc = _u_div_exact(ma[da], lb)
        q[da - db] = qc
        for eh, u in mb.items():
            k = eh + da - db
            prod = _u_mul(u, qc)
            cur = dict(ma.get(k, {}))
            for e, c in prod.items():
                s = cur.get(e, _F0) - c
                if s:
                    cur[e] = s
                else:
                    cur.pop(e, None)
            if cur:
                ma[k] = cur
            else:
                ma.pop(k, None)
    return _h_major_to_terms(q)


# ---------------------------------------------------------------------------
# Scalar: reduced fractions of the above
# ---------------------------------------------------------------------------


class Scalar:
    """An element of Q(p, h) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: dict, den: dict, _canonical=False):
        if not _canonical:
            raise RuntimeError("use the Scalar constructors, not __init__")
        self.num = num
        self.den = den
        self._hash = None

    # -- construction -------------------------------------------------------

    @staticmethod
    def _make(num: dict, den: dict) -> "Scalar":
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return ZERO
        g = _pgcd(num, den)
        if g != _PONE:
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        return Scalar._normalized(num, den)

    @staticmethod
    def _normalized(num: dict, den: dict) -> "Scalar":
        lead = den[_plead_key(den)]
        if lead != 1:
            num = {k: v / lead for k, v in num.items()}
            den = {k: v / lead for k, v in den.items()}
        return Scalar(num, den, _canonical=True)

    @classmethod
    def from_int(cls, n: int) -> "Scalar":
        if n == 0:
            return ZERO
        if n == 1:
            return ONE
        return cls(_pconst(n), dict(_PONE), _canonical=True)

    @classmethod
    def from_fraction(cls, q) -> "Scalar":
        q = Fraction(q)
        if not q:
            return ZERO
        return cls(_pconst(q), dict(_PONE), _canonical=True)

    @classmethod
    def monomial(cls, coeff, p_exp: int = 0, h_exp: int = 0) -> "Scalar":
        """coeff * p^p_exp * h^h_exp with exponents of either sign."""
        coeff = Fraction(coeff)
        if not coeff:
            return ZERO
        np_, dp = (p_exp, 0) if p_exp >= 0 else (0, -p_exp)
        nh, dh = (h_exp, 0) if h_exp >= 0 else (0, -h_exp)
        return cls({(np_, nh): coeff}, {(dp, dh): _F1}, _canonical=True)

    # -- predicates and accessors -------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_one(self) -> bool:
        return self.num == _PONE and self.den == _PONE

    def as_fraction(self) -> Fraction:
        """The value as a rational number; fails if p or h survive."""
        if self.den != _PONE:
            raise ValueError(f"not a rational constant: {self}")
        if not self.num:
            return _F0
        if set(self.num) != {(0, 0)}:
            raise ValueError(f"not a rational constant: {self}")
        return self.num[(0, 0)]

    def h_degree(self) -> int:
        return _pdeg_h(self.num)

    def den_is_h_free(self) -> bool:
        return _pdeg_h(self.den) <= 0

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return Scalar._make(_padd(self.num, other.num), self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return Scalar._make(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        num1, den1, num2, den2 = self.num, self.den, other.num, other.den
        # cross-cancellation keeps the product reduced without a final GCD
        if den2 != _PONE:
            g = _pgcd(num1, den2)
            if g != _PONE:
                num1 = _pdiv_exact(num1, g)
                den2 = _pdiv_exact(den2, g)
        if den1 != _PONE:
            g = _pgcd(num2, den1)
            if g != _PONE:
                num2 = _pdiv_exact(num2, g)
                den1 = _pdiv_exact(den1, g)
        return Scalar._normalized(_pmul(num1, num2), _pmul(den1, den2))

    __rmul__ = __mul__

    def reciprocal(self) -> "Scalar":
        if self.is_zero:
            raise DivisionByZero("reciprocal of zero")
        return Scalar._normalized(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return _coerce(other) * self.reciprocal()

    def __pow__(self, n: int):
        if n == 0:
            return ONE
        if n < 0:
            return self.reciprocal() ** (-n)
        return Scalar._normalized(_ppow(self.num, n), _ppow(self.den, n))

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (
                    tuple(sorted(self.num.items())),
                    tuple(sorted(self.den.items())),
                )
            )
        return self._hash

    # -- limits and substitutions --------------------------------------------

    def limit_p_to_1(self) -> "Scalar":
        """Exact classical limit p -> 1 on the reduced form."""
        den1 = _pat_p1(self.den)
        if not den1:
            num1 = _pat_p1(self.num)
            if not num1:
                raise CancellationFailure(
                    "reduced fraction with num and den both vanishing at p=1"
                )
            raise PoleAtUnity(f"pole at p = 1 in {self}")
        num1 = _pat_p1(self.num)
        return Scalar._make(_p_from_h_univar(num1), _p_from_h_univar(den1))

    def pole_order_at_p1(self) -> int:
        """Multiplicity of (p - 1) in the reduced denominator."""
        order = 0
        d = self.den
        while True:
            q, exact = _pdiv_p_minus_1(d)
            if not exact:
                return order
            order += 1
            d = q

    def substitute_h(self, value) -> "Scalar":
        value = Fraction(value)
        num = _psub_h(self.num, value)
        den = _psub_h(self.den, value)
        return Scalar._make(num, den)

    def h_coefficients(self, upto: int) -> list:
        """Exact Taylor coefficients in h through order ``upto``.

        Defined only when the reduced denominator is free of h (the cases
        this package needs: representation entries whose h dependence is
        polynomial).
        """
        if not self.den_is_h_free():
            raise ValueError(f"denominator depends on h: {self}")
        out = []
        for k in range(upto + 1):
            coeff = {(ep, 0): c for (ep, eh), c in self.num.items() if eh == k}
            out.append(Scalar._make(coeff, dict(self.den)) if coeff else ZERO)
        return out

    # -- serialization ---------------------------------------------------------

    def __str__(self):
        return scalar_to_string(self)

    def __repr__(self):
        return f"Scalar({scalar_to_string(self)})"


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    return NotImplemented


ZERO = Scalar({}, dict(_PONE), _canonical=True)
ONE = Scalar(dict(_PONE), dict(_PONE), _canonical=True)
TWO = Scalar.from_int(2)
H = Scalar.monomial(1, 0, 1)
P = Scalar.monomial(1, 1, 0)


def p_power(x) -> Scalar:
    """p^(2x) for a half-integer x, i.e. q^x with q = p^2.

    Taking the argument in units of half-integers keeps every exponent an
    integer; anything that would need a genuine quarter-integer power of
    the deformation parameter is a bug upstream and is rejected by
    :class:`~ospq.halfint.HalfInt` itself.
    """
    x = x if isinstance(x, HalfInt) else HalfInt(x)
    return Scalar.monomial(1, x.twice, 0)


# ---------------------------------------------------------------------------
# string grammar: integer coefficients, p, h, ^, *, +, -, / and parentheses
# ---------------------------------------------------------------------------


def _poly_to_string(terms: list) -> str:
    parts = []
    for (ep, eh), c in terms:
        factors = []
        if ep:
            factors.append("p" if ep == 1 else f"p^{ep}")
        if eh:
            factors.append("h" if eh == 1 else f"h^{eh}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)


def _sorted_terms(d: dict) -> list:
    return sorted(d.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)


def _is_atom(terms: list) -> bool:
    if len(terms) != 1:
        return False
    (ep, eh), c = terms[0]
    if c < 0:
        return False
    nfactors = (1 if ep else 0) + (1 if eh else 0) + (1 if abs(c) != 1 else 0)
    return nfactors <= 1


def scalar_to_string(s: Scalar) -> str:
    """Canonical string form with integer coefficients.

    The reduced numerator and denominator are rescaled by a common
    rational so every printed coefficient is an integer and the printed
    pair is coprime, with the denominator's leading sign positive.  The
    result parses back to an equal Scalar.
    """
    if s.is_zero:
        return "0"
    denom_lcm = 1
    for c in list(s.num.values()) + list(s.den.values()):
        denom_lcm = denom_lcm * c.denominator // _gcd_int(denom_lcm, c.denominator)
    num = {k: c * denom_lcm for k, c in s.num.items()}
    den = {k: c * denom_lcm for k, c in s.den.items()}
    g = 0
    for c in list(num.values()) + list(den.values()):
        g = _gcd_int(g, abs(c.numerator))
    if g > 1:
        num = {k: c / g for k, c in num.items()}
        den = {k: c / g for k, c in den.items()}
    if den[_plead_key(den)] < 0:
        num = {k: -c for k, c in num.items()}
        den = {k: -c for k, c in den.items()}
    nterms = _sorted_terms(num)
    if den == _PONE:
        return _poly_to_string(nterms)
    dterms = _sorted_terms(den)
    nstr = _poly_to_string(nterms)
    if len(nterms) > 1:
        nstr = f"({nstr})"
    dstr = _poly_to_string(dterms)
    if not _is_atom(dterms):
        dstr = f"({dstr})"
    return f"{nstr}/{dstr}"


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ValueError(f"scalar parse error at {self.pos}: {msg} in {self.text!r}")

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> Scalar:
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

    def term(self) -> Scalar:
        value = self.unary()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                value = value * self.unary()
            elif c == "/":
                self.pos += 1
                value = value / self.unary()
            else:
                return value

    def unary(self) -> Scalar:
        if self.peek() == "-":
            self.pos += 1
            return -self.unary()
        if self.peek() == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self) -> Scalar:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.pos += 1
            return base ** (sign * self.integer())
        return base

    def atom(self) -> Scalar:
        c = self.peek()
        if c == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if c == "p":
            self.pos += 1
            return P
        if c == "h":
            self.pos += 1
            return H
        if c.isdigit():
            return Scalar.from_int(self.integer())
        self.error(f"unexpected {c!r}")

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start : self.pos])


def scalar_from_string(text: str) -> Scalar:
    parser = _Parser(text)
    value = parser.expr()
    if parser.peek():
        parser.error("trailing input")
    return value
