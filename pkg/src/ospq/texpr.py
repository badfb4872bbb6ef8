"""Formal tensor-product expressions over named generators.

An expression is a finite sum of pure tensors ``c * (w_1 (x) ... (x) w_n)``
where each ``w_k`` is a word (tuple) of generator names.  The Z2-grading
enters through the multiplication rule

    (u_1 (x) ... (x) u_n)(w_1 (x) ... (x) w_n)
        = (-1)^{sum_{k>l} |u_k||w_l|} (u_1 w_1 (x) ... (x) u_n w_n)

with |w| the parity of the word.  Coproduct, antipode and counit act on a
chosen leg through lookup tables supplied by the caller, and `evaluate`
turns the whole expression into a graded matrix given one representation
table per leg.
"""

from __future__ import annotations

from .errors import UnknownGenerator
from .gmatrix import GradedMatrix, graded_kron
from .scalar import ONE, Scalar

ODD_LETTERS = frozenset({"e", "f", "E", "F"})


def letter_parity(name: str) -> int:
    return 1 if name in ODD_LETTERS else 0


def word_parity(word) -> int:
    par = 0
    for name in word:
        par ^= letter_parity(name)
    return par


class TensorExpression:
    """Sum of scalar-weighted pure tensors of generator words."""

    __slots__ = ("nlegs", "terms")

    def __init__(self, nlegs, terms=None):
        self.nlegs = nlegs
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                if not coeff.is_zero:
                    self.terms[key] = coeff

    # -- constructors -----------------------------------------------------

    @classmethod
    def unit(cls, nlegs: int) -> "TensorExpression":
        key = tuple(() for _ in range(nlegs))
        return cls(nlegs, {key: ONE})

    @classmethod
    def letter(cls, name: str, nlegs: int = 1, leg: int = 0) -> "TensorExpression":
        words = [() for _ in range(nlegs)]
        words[leg] = (name,)
        return cls(nlegs, {tuple(words): ONE})

    @classmethod
    def word(cls, names, nlegs: int = 1, leg: int = 0) -> "TensorExpression":
        words = [() for _ in range(nlegs)]
        words[leg] = tuple(names)
        return cls(nlegs, {tuple(words): ONE})

    @classmethod
    def pure(cls, words, coeff: Scalar = ONE) -> "TensorExpression":
        key = tuple(tuple(w) for w in words)
        return cls(len(key), {key: coeff})

    # -- ring structure ----------------------------------------------------

    def _require_same_shape(self, other):
        if self.nlegs != other.nlegs:
            raise ValueError("tensor expressions live on different leg counts")

    def __add__(self, other: "TensorExpression") -> "TensorExpression":
        self._require_same_shape(other)
        acc = dict(self.terms)
        for key, coeff in other.terms.items():
            cur = acc.get(key)
            tot = coeff if cur is None else cur + coeff
            if tot.is_zero:
                acc.pop(key, None)
            else:
                acc[key] = tot
        return TensorExpression(self.nlegs, acc)

    def __sub__(self, other: "TensorExpression") -> "TensorExpression":
        return self + other.scale(-ONE)

    def __neg__(self) -> "TensorExpression":
        return self.scale(-ONE)

    def scale(self, scalar: Scalar) -> "TensorExpression":
        if scalar.is_zero:
            return TensorExpression(self.nlegs, {})
        return TensorExpression(
            self.nlegs, {key: coeff * scalar for key, coeff in self.terms.items()}
        )

    def __mul__(self, other: "TensorExpression") -> "TensorExpression":
        self._require_same_shape(other)
        acc = {}
        for ukey, ucoeff in self.terms.items():
            upar = [word_parity(w) for w in ukey]
            for wkey, wcoeff in other.terms.items():
                sign = 0
                for k in range(1, self.nlegs):
                    if upar[k]:
                        for l in range(k):
                            sign ^= upar[k] & word_parity(wkey[l])
                key = tuple(ukey[k] + wkey[k] for k in range(self.nlegs))
                coeff = ucoeff * wcoeff
                if sign:
                    coeff = -coeff
                cur = acc.get(key)
                tot = coeff if cur is None else cur + coeff
                if tot.is_zero:
                    acc.pop(key, None)
                else:
                    acc[key] = tot
        return TensorExpression(self.nlegs, acc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorExpression):
            return NotImplemented
        return self.nlegs == other.nlegs and self.terms == other.terms

    def __hash__(self):
        raise TypeError("tensor expressions are mutable accumulators; do not hash")

    def __repr__(self):
        if not self.terms:
            return "TensorExpression(0)"
        bits = []
        for key in sorted(self.terms):
            words = " (x) ".join("".join(w) if w else "1" for w in key)
            bits.append(f"({self.terms[key]})*[{words}]")
        return "TensorExpression(" + " + ".join(bits) + ")"

    # -- Hopf structure maps ------------------------------------------------

    def coproduct(self, leg: int, delta_table) -> "TensorExpression":
        """Apply the coproduct to one leg, yielding an expression on nlegs+1 legs.

        ``delta_table`` maps each generator name to its two-leg image; the
        image of a word is the graded product of the letter images.
        """
        out = TensorExpression(self.nlegs + 1, {})
        for key, coeff in self.terms.items():
            img = TensorExpression.unit(2)
            for name in key[leg]:
                try:
                    img = img * delta_table[name]
                except KeyError:
                    raise UnknownGenerator(name) from None
            acc = dict(out.terms)
            for (wa, wb), d in img.terms.items():
                words = list(key)
                words[leg : leg + 1] = [wa, wb]
                nk = tuple(words)
                c = coeff * d
                cur = acc.get(nk)
                tot = c if cur is None else cur + c
                if tot.is_zero:
                    acc.pop(nk, None)
                else:
                    acc[nk] = tot
            out = TensorExpression(self.nlegs + 1, acc)
        return out

    def antipode(self, leg: int, s_table) -> "TensorExpression":
        """Apply the antipode to one leg.

        The antipode is a graded antihomomorphism: on a word g_1...g_k it
        produces (-1)^{sum_{i<j} |g_i||g_j|} S(g_k)...S(g_1), each letter
        image taken from ``s_table`` (a one-leg expression).
        """
        out = TensorExpression(self.nlegs, {})
        for key, coeff in self.terms.items():
            word = key[leg]
            sign = 0
            pars = [letter_parity(g) for g in word]
            for i in range(len(word)):
                for j in range(i + 1, len(word)):
                    sign ^= pars[i] & pars[j]
            img = TensorExpression.unit(1)
            for name in reversed(word):
                try:
                    img = img * s_table[name]
                except KeyError:
                    raise UnknownGenerator(name) from None
            acc = dict(out.terms)
            for (w,), d in img.terms.items():
                words = list(key)
                words[leg] = w
                nk = tuple(words)
                c = coeff * d
                if sign:
                    c = -c
                cur = acc.get(nk)
                tot = c if cur is None else cur + c
                if tot.is_zero:
                    acc.pop(nk, None)
                else:
                    acc[nk] = tot
            out = TensorExpression(self.nlegs, acc)
        return out

    def counit(self, leg: int, eps_table) -> "TensorExpression":
        """Apply the counit to one leg, dropping it."""
        acc = {}
        for key, coeff in self.terms.items():
            c = coeff
            for name in key[leg]:
                try:
                    c = c * eps_table[name]
                except KeyError:
                    raise UnknownGenerator(name) from None
                if c.is_zero:
                    break
            if c.is_zero:
                continue
            nk = tuple(key[:leg] + key[leg + 1 :])
            cur = acc.get(nk)
            tot = c if cur is None else cur + c
            if tot.is_zero:
                acc.pop(nk, None)
            else:
                acc[nk] = tot
        return TensorExpression(self.nlegs - 1, acc)

    def mu(self, leg: int) -> "TensorExpression":
        """Multiply legs ``leg`` and ``leg+1`` together (word concatenation)."""
        acc = {}
        for key, coeff in self.terms.items():
            words = list(key)
            merged = words[leg] + words[leg + 1]
            words[leg : leg + 2] = [merged]
            nk = tuple(words)
            cur = acc.get(nk)
            tot = coeff if cur is None else cur + coeff
            if tot.is_zero:
                acc.pop(nk, None)
            else:
                acc[nk] = tot
        return TensorExpression(self.nlegs - 1, acc)

    # -- evaluation ----------------------------------------------------------

    def evaluate_scalar(self, eps_table) -> Scalar:
        """Fold a one-leg expression through a scalar character."""
        if self.nlegs != 1:
            raise ValueError("scalar evaluation needs a one-leg expression")
        total = None
        for (word,), coeff in self.terms.items():
            c = coeff
            for name in word:
                try:
                    c = c * eps_table[name]
                except KeyError:
                    raise UnknownGenerator(name) from None
            total = c if total is None else total + c
        if total is None:
            from .scalar import ZERO

            return ZERO
        return total

    def evaluate(self, reps) -> GradedMatrix:
        """Evaluate in the given representations, one table per leg.

        Each element of ``reps`` must expose ``matrix(name)`` and ``parity``.
        A word maps to the ordered matrix product of its letters;  legs are
        combined with the graded Kronecker product, the operator parity of
        each new factor being the parity of its word.
        """
        if len(reps) != self.nlegs:
            raise ValueError("need one representation per leg")
        parity = []
        for rep in reps:
            parity.extend(rep.parity)
        total = None
        for key, coeff in self.terms.items():
            legs = []
            for k, word in enumerate(key):
                m = GradedMatrix.identity(reps[k].parity)
                for name in word:
                    m = m @ reps[k].matrix(name)
                legs.append(m)
            term = legs[0]
            for k in range(1, self.nlegs):
                term = graded_kron(term, legs[k], b_op_parity=word_parity(key[k]))
            term = term.scale(coeff)
            total = term if total is None else total + term
        if total is None:
            return GradedMatrix.zero(tuple(parity))
        return total


def tensor_product(*exprs) -> TensorExpression:
    """Juxtapose expressions into one on the concatenated legs.

    No grading signs enter here: the factors are placed side by side in
    the order given, exactly as writing x (x) y for already-separate
    tensor factors.
    """
    nlegs = sum(e.nlegs for e in exprs)
    out = {}
    stack = [((), ONE)]
    for e in exprs:
        nxt = []
        for prefix, coeff in stack:
            for key, c in e.terms.items():
                nxt.append((prefix + key, coeff * c))
        stack = nxt
    for key, coeff in stack:
        cur = out.get(key)
        tot = coeff if cur is None else cur + coeff
        if tot.is_zero:
            out.pop(key, None)
        else:
            out[key] = tot
    return TensorExpression(nlegs, out)
