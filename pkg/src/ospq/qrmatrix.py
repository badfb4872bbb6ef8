"""R-matrices of the q-deformed algebra and the graded Yang-Baxter check.

The universal R-matrix acts on a tensor product of two spin modules as

    R = q^{h (x) h} * sum_n  q^{n(n+1)/4} (1-q^-2)^n / [n]+!
                              * (q^{h/2} e)^n (x) (q^{-h/2} f)^n

with the sum terminating once the nilpotent raising operator dies.  For a
spin-1/2 first factor the same operator collapses to a 3x3 block form in
the second-factor generators, which `rq_half_j` builds directly.
"""

from __future__ import annotations

from .gmatrix import GradedMatrix, embed_pair, graded_kron, tensor_parity
from .halfint import HalfInt
from .reps import plus_factorial, q_rep, rep_parity, weight_twice
from .scalar import ONE, P, Scalar, p_power, scalar_to_string


def _as_half(x) -> HalfInt:
    return x if isinstance(x, HalfInt) else HalfInt(x)


def universal_Rq(j1, j2) -> GradedMatrix:
    """Evaluate the universal R-matrix on the spin (j1, j2) tensor product."""
    j1, j2 = _as_half(j1), _as_half(j2)
    rep1, rep2 = q_rep(j1), q_rep(j2)
    raise_half = rep1.matrix("K") @ rep1.matrix("e")
    lower_half = rep2.matrix("Kinv") @ rep2.matrix("f")
    nmax = min(2 * j1.twice, 2 * j2.twice)
    omega = ONE - P**-4  # 1 - q^{-2}

    an = GradedMatrix.identity(rep1.parity)
    bn = GradedMatrix.identity(rep2.parity)
    coeff = ONE
    total = None
    for n in range(nmax + 1):
        if n:
            an = an @ raise_half
            bn = bn @ lower_half
        coeff = (
            p_power(HalfInt.from_twice(n * (n + 1) // 2))
            * omega**n
            / plus_factorial(n)
        )
        term = graded_kron(an, bn, b_op_parity=n % 2).scale(coeff)
        total = term if total is None else total + term

    parity = tensor_parity((rep1.parity, rep2.parity))
    d2 = rep2.dim
    cartan = {}
    for k1 in range(rep1.dim):
        t1 = weight_twice(j1, k1)
        for k2 in range(rep2.dim):
            t2 = weight_twice(j2, k2)
            g = k1 * d2 + k2
            cartan[(g, g)] = p_power(HalfInt(t1 * t2))
    qhh = GradedMatrix(parity, cartan)
    return qhh @ total


def rq_half_j(j) -> GradedMatrix:
    """Spin (1/2, j) R-matrix in closed block form over the spin-j module."""
    j = _as_half(j)
    rep = q_rep(j)
    d = rep.dim
    omega = P**2 - P**-2  # q - q^{-1}
    f = rep.matrix("f")
    big_t, big_tinv = rep.matrix("t"), rep.matrix("tinv")
    half, halfinv = rep.matrix("K"), rep.matrix("Kinv")
    ident = rep.identity()
    zero = GradedMatrix.zero(rep.parity)
    blocks = [
        [
            big_t,
            (half @ f).scale(-omega),
            (f @ f).scale(-(omega * (ONE + P**-2))),
        ],
        [zero, ident, (halfinv @ f).scale(omega * P**-1)],
        [zero, zero, big_tinv],
    ]
    parity = tensor_parity(((0, 1, 0), rep.parity))
    entries = {}
    for a in range(3):
        for b in range(3):
            for (i, k), val in blocks[a][b].entries.items():
                entries[(a * d + i, b * d + k)] = val
    return GradedMatrix(parity, entries)


def ybe_check(r12, r13, r23, parities):
    """Residual entries of R12 R13 R23 - R23 R13 R12 on the triple product.

    ``parities`` holds the three leg parity tuples; each pair matrix lives
    on its two legs and is embedded with identity on the third.  An empty
    return value means the graded Yang-Baxter equation holds exactly.
    """
    big12 = embed_pair(r12, parities, (0, 1))
    big13 = embed_pair(r13, parities, (0, 2))
    big23 = embed_pair(r23, parities, (1, 2))
    lhs = big12 @ big13 @ big23
    rhs = big23 @ big13 @ big12
    diff = lhs - rhs
    return [
        (r, c, scalar_to_string(v))
        for (r, c), v in sorted(diff.entries.items())
    ]


def ybe_check_q(j1, j2, j3):
    """Graded Yang-Baxter residuals for the universal R-matrix at three spins."""
    j1, j2, j3 = _as_half(j1), _as_half(j2), _as_half(j3)
    parities = (rep_parity(j1), rep_parity(j2), rep_parity(j3))
    return ybe_check(
        universal_Rq(j1, j2),
        universal_Rq(j1, j3),
        universal_Rq(j2, j3),
        parities,
    )
