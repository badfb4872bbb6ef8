"""Contraction of the standard quantization onto the first Jordanian one.

The bridge is a unipotent matrix M built from the square of the raising
operator.  Conjugating the standard R-matrix by M (x) M and then taking
the exact limit q -> 1 produces the triangular Jordanian R-matrix with
the residual deformation parameter h.  The same limit applied to the
conjugated Cartan exponential produces the Jordanian group-like
generator, which also has a closed form in the classical generators.

Everything here is matrix-level and exact; the limit is a polynomial
evaluation after gcd reduction, so a genuine pole raises instead of
being approximated.
"""

from __future__ import annotations

from fractions import Fraction

from .gmatrix import (
    GradedMatrix,
    embed_pair,
    graded_kron,
    inverse,
    tensor_parity,
)
from .halfint import HalfInt
from .hopf import r2_algebra
from .nilfun import nil_log_unit, unit_power, unit_sqrt
from .report import VerificationReport, matrix_residuals
from .reps import (
    GeneratorTable,
    bracket,
    classical_rep,
    q_rep,
    rep_parity,
    weight_twice,
)
from .scalar import H as HPARAM
from .scalar import ONE, P, Scalar, p_power, scalar_to_string
from .texpr import TensorExpression as TE
from .texpr import tensor_product


def _as_half(x) -> HalfInt:
    return x if isinstance(x, HalfInt) else HalfInt(x)


def _fr(n, d=1) -> Scalar:
    return Scalar.from_fraction(Fraction(n, d))


def eta() -> Scalar:
    """The bridge coupling h / (q^2 - 1)."""
    return HPARAM / (P**4 - ONE)


def q2_factorial(n: int) -> Scalar:
    total = ONE
    for k in range(1, n + 1):
        total = total * bracket("q", k, base=2)
    return total


def eq2_series(x: GradedMatrix) -> GradedMatrix:
    """The base-q^2 exponential of a nilpotent matrix argument."""
    total = GradedMatrix.identity(x.parity)
    power = total
    n = 0
    while True:
        n += 1
        power = power @ x
        if power.is_zero:
            return total
        total = total + power.scale(q2_factorial(n).reciprocal())
        if n > x.dim:
            raise ArithmeticError("series argument was not nilpotent")


def m_matrix(j) -> GradedMatrix:
    """The contraction bridge on the spin-j module."""
    rep = q_rep(_as_half(j))
    e2 = rep.matrix("e") @ rep.matrix("e")
    return eq2_series(e2.scale(eta()))


def q_cartan_power(j, alpha) -> GradedMatrix:
    """Diagonal matrix of q^{alpha h}: entry p^{4 alpha m} at weight m."""
    j = _as_half(j)
    alpha = _as_half(alpha)
    parity = rep_parity(j)
    entries = {}
    for k in range(len(parity)):
        tm = weight_twice(j, k)  # 2m
        entries[(k, k)] = p_power(HalfInt.from_twice(alpha.twice * tm))
    return GradedMatrix(parity, entries)


def script_t(j, alpha) -> GradedMatrix:
    """The shifted-exponential quotient E(eta e^2)^-1 E(q^{2 alpha} eta e^2)."""
    j = _as_half(j)
    alpha = _as_half(alpha)
    rep = q_rep(j)
    e2 = rep.matrix("e") @ rep.matrix("e")
    base = eq2_series(e2.scale(eta()))
    shift = p_power(alpha * 2)  # q^{2 alpha}
    shifted = eq2_series(e2.scale(eta() * shift))
    return inverse(base) @ shifted


class ContractionResult:
    """Contracted R-matrix plus the cancellation bookkeeping."""

    __slots__ = ("j1", "j2", "source", "matrix", "log")

    def __init__(self, j1, j2, source, matrix, log=()):
        self.j1 = j1
        self.j2 = j2
        self.source = source
        self.matrix = matrix
        self.log = tuple(log)


def contract(j1, j2, source: str = "universal", log_cancellation: bool = False):
    """Contract the standard R-matrix at spins (j1, j2).

    ``source`` chooses between conjugating the universal R-matrix and the
    closed three-block form (the latter only exists for j1 = 1/2).  With
    ``log_cancellation`` the result records, per entry, the worst pole
    order that appeared among the summands before cancellation.
    """
    j1, j2 = _as_half(j1), _as_half(j2)
    if source == "half-j-formula":
        if j1 != HalfInt.from_twice(1):
            raise ValueError("the closed block form needs j1 = 1/2")
        return ContractionResult(j1, j2, source, _half_j_formula(j2))
    if source != "universal":
        raise ValueError(f"unknown contraction source {source!r}")

    from .qrmatrix import universal_Rq

    rq = universal_Rq(j1, j2)
    m1, m2 = m_matrix(j1), m_matrix(j2)
    big_m = graded_kron(m1, m2, b_op_parity=0)
    big_minv = graded_kron(inverse(m1), inverse(m2), b_op_parity=0)
    right = rq @ big_m
    pre = big_minv @ right

    log = []
    if log_cancellation:
        rows = {}
        for (i, k), val in big_minv.entries.items():
            rows.setdefault(i, []).append((k, val))
        cols = {}
        for (k, jj), val in right.entries.items():
            cols.setdefault(k, []).append((jj, val))
        worst = {}
        for i, row in rows.items():
            for k, lv in row:
                for jj, rv in cols.get(k, ()):
                    order = (lv * rv).pole_order_at_p1()
                    key = (i, jj)
                    if order > worst.get(key, 0):
                        worst[key] = order
        for key in sorted(worst):
            if worst[key] > 0:
                log.append((key[0], key[1], worst[key]))

    contracted = pre.map_entries(lambda s: s.limit_p_to_1())
    return ContractionResult(j1, j2, "universal", contracted, log)


# -- classical-side closed forms ---------------------------------------------


def tilde_t_routes(j) -> dict:
    """The Jordanian group-like element, by closed form and by limit."""
    j = _as_half(j)
    cl = classical_rep(j)
    e2 = cl.matrix("e") @ cl.matrix("e")
    root = unit_sqrt(GradedMatrix.identity(cl.parity) + (e2 @ e2).scale(HPARAM**2))
    closed = e2.scale(HPARAM) + root
    limited = (script_t(j, 1) @ q_cartan_power(j, 1)).map_entries(
        lambda s: s.limit_p_to_1()
    )
    return {"closed": closed, "limit": limited}


def tilde_t(j) -> GradedMatrix:
    routes = tilde_t_routes(j)
    if routes["closed"] != routes["limit"]:
        from .errors import Inconsistency

        raise Inconsistency("group-like closed form disagrees with the limit")
    return routes["closed"]


def r2_generators(j) -> GeneratorTable:
    """Jordanian generators on the spin-j module, via the classical ones."""
    j = _as_half(j)
    cl = classical_rep(j)
    ident = GradedMatrix.identity(cl.parity)
    e, f, h = cl.matrix("e"), cl.matrix("f"), cl.matrix("h")
    e2 = e @ e
    root = unit_sqrt(ident + (e2 @ e2).scale(HPARAM**2))
    big_t = e2.scale(HPARAM) + root
    big_tinv = e2.scale(-HPARAM) + root
    big_h = root @ h
    gq = (big_t - ident) @ inverse(big_t + ident)
    big_f = (
        f
        + (gq @ e).scale(HPARAM * _fr(1, 4))
        - (gq @ e @ h).scale(HPARAM * _fr(1, 2))
    )
    thalf = unit_power(big_t, Fraction(1, 2))
    tinvhalf = unit_power(big_t, Fraction(-1, 2))
    x = nil_log_unit(big_t).scale(HPARAM.reciprocal())
    y = -(big_f @ big_f)
    mats = {
        "H": big_h,
        "E": e,
        "F": big_f,
        "T": big_t,
        "Tinv": big_tinv,
        "Thalf": thalf,
        "Tinvhalf": tinvhalf,
        "X": x,
        "Y": y,
    }
    return GeneratorTable("jordanian-r2", j, cl.parity, mats)


def _half_j_formula(j) -> GradedMatrix:
    """Closed three-block form of the contracted R-matrix for j1 = 1/2."""
    j = _as_half(j)
    rep = r2_generators(j)
    d = rep.dim
    quarter = HPARAM * _fr(1, 4)
    big_t, big_tinv = rep.matrix("T"), rep.matrix("Tinv")
    e = rep.matrix("E")
    blocks = [
        [
            big_t,
            (rep.matrix("Thalf") @ e).scale(HPARAM),
            -(rep.matrix("H").scale(HPARAM)) + (big_t - big_tinv).scale(quarter),
        ],
        [
            GradedMatrix.zero(rep.parity),
            rep.identity(),
            -((rep.matrix("Tinvhalf") @ e).scale(HPARAM)),
        ],
        [
            GradedMatrix.zero(rep.parity),
            GradedMatrix.zero(rep.parity),
            big_tinv,
        ],
    ]
    parity = tensor_parity(((0, 1, 0), rep.parity))
    entries = {}
    for a in range(3):
        for b in range(3):
            for (i, k), val in blocks[a][b].entries.items():
                entries[(a * d + i, b * d + k)] = val
    return GradedMatrix(parity, entries)


# -- the L-operator and its Hopf behaviour ------------------------------------


def l_operator_words():
    """Upper-triangular 3x3 table of Jordanian-letter expressions."""
    zero = TE(1, {})
    one = TE.unit(1)
    quarter = HPARAM * _fr(1, 4)
    return [
        [
            TE.word(("T",)),
            TE.word(("Thalf", "E")).scale(HPARAM),
            -TE.word(("H",)).scale(HPARAM)
            + (TE.word(("T",)) - TE.word(("Tinv",))).scale(quarter),
        ],
        [zero, one, -TE.word(("Tinvhalf", "E")).scale(HPARAM)],
        [zero, zero, TE.word(("Tinv",))],
    ]


def l_inverse_words():
    zero = TE(1, {})
    one = TE.unit(1)
    quarter = HPARAM * _fr(1, 4)
    return [
        [
            TE.word(("Tinv",)),
            -TE.word(("Tinvhalf", "E")).scale(HPARAM),
            TE.word(("H",)).scale(HPARAM)
            + (TE.word(("T",)) - TE.word(("Tinv",))).scale(quarter),
        ],
        [zero, one, TE.word(("Thalf", "E")).scale(HPARAM)],
        [zero, zero, TE.word(("T",))],
    ]


def _assemble_blocks(blocks, rep) -> GradedMatrix:
    d = rep.dim
    parity = tensor_parity(((0, 1, 0), rep.parity))
    entries = {}
    for a in range(3):
        for b in range(3):
            m = blocks[a][b].evaluate([rep])
            for (i, k), val in m.entries.items():
                entries[(a * d + i, b * d + k)] = val
    return GradedMatrix(parity, entries)


def L_operator(j) -> GradedMatrix:
    """The contracted R-matrix at (1/2, j), assembled from Jordanian letters.

    Also asserts agreement with the universal-source contraction, which is
    the fundamental exchange-algebra consistency statement.
    """
    j = _as_half(j)
    rep = r2_generators(j)
    ell = _assemble_blocks(l_operator_words(), rep)
    contracted = contract(HalfInt.from_twice(1), j).matrix
    if ell != contracted:
        from .errors import Inconsistency

        raise Inconsistency("L-operator disagrees with the contracted R-matrix")
    return ell


def L_inverse(j) -> GradedMatrix:
    j = _as_half(j)
    rep = r2_generators(j)
    linv = _assemble_blocks(l_inverse_words(), rep)
    ell = _assemble_blocks(l_operator_words(), rep)
    ident = GradedMatrix.identity(linv.parity)
    if ell @ linv != ident or linv @ ell != ident:
        from .errors import Inconsistency

        raise Inconsistency("closed-form inverse failed to invert L")
    return linv


def rll_check(j) -> VerificationReport:
    """Exchange relation R L1 L2 = L2 L1 R on the (1/2, 1/2, j) product."""
    j = _as_half(j)
    half = HalfInt.from_twice(1)
    r = contract(half, half).matrix
    ell = L_operator(j)
    parities = (rep_parity(half), rep_parity(half), rep_parity(j))
    r12 = embed_pair(r, parities, (0, 1))
    l1 = embed_pair(ell, parities, (0, 2))
    l2 = embed_pair(ell, parities, (1, 2))
    diff = r12 @ l1 @ l2 - l2 @ l1 @ r12
    fails = matrix_residuals("RLL", diff)
    return VerificationReport("rll", {"j": j}, fails)


def frt_hopf_check(j1, j2) -> VerificationReport:
    """Coproduct, counit and antipode of L against the matrix Hopf rules.

    Entrywise: Delta(L[a][c]) must equal sum_b L[a][b] (x) L[b][c]; the
    counit of L must be the identity table; the antipode of L must be the
    closed-form inverse, entry by entry.
    """
    j1, j2 = _as_half(j1), _as_half(j2)
    alg = r2_algebra()
    rep1, rep2 = r2_generators(j1), r2_generators(j2)
    words = l_operator_words()
    inv_words = l_inverse_words()
    fails = []
    for a in range(3):
        for c in range(3):
            lhs = words[a][c].coproduct(0, alg.delta)
            rhs = TE(2, {})
            for b in range(3):
                rhs = rhs + tensor_product(words[a][b], words[b][c])
            diff = (lhs - rhs).evaluate([rep1, rep2])
            fails += matrix_residuals(f"coproduct:L[{a}][{c}]", diff)
    for a in range(3):
        for c in range(3):
            got = words[a][c].evaluate_scalar(alg.eps)
            want = ONE if a == c else Scalar.from_int(0)
            if got != want:
                fails.append(
                    (f"counit:L[{a}][{c}]", (0, 0), scalar_to_string(got - want))
                )
    for a in range(3):
        for c in range(3):
            lhs = words[a][c].antipode(0, alg.smap).evaluate([rep1])
            rhs = inv_words[a][c].evaluate([rep1])
            fails += matrix_residuals(f"antipode:L[{a}][{c}]", lhs - rhs)
    return VerificationReport("frt-hopf", {"j1": j1, "j2": j2}, fails)


# -- operator identities of the standard algebra -------------------------------


def identity_check(j, n: int) -> VerificationReport:
    """Reordering identities for f e^{2n} and f^2 e^{2n}, plus the
    conjugation rules of the shifted-exponential quotients and the dual
    construction of the Jordanian group-like element."""
    j = _as_half(j)
    rep = q_rep(j)
    e, f = rep.matrix("e"), rep.matrix("f")
    t, tinv = rep.matrix("t"), rep.matrix("tinv")
    ident = rep.identity()
    fails = []

    q = P**2
    qp1 = q + ONE
    omega = q - q.reciprocal()
    def epow(k):
        m = ident
        for _ in range(k):
            m = m @ e
        return m

    c_plus = bracket("curly", n, base=2)
    c_minus = bracket("curly", n, base=-2)
    lhs1 = f @ epow(2 * n)
    rhs1 = (
        epow(2 * n) @ f
        - (epow(2 * n - 1) @ t).scale(q / qp1 * c_plus)
        - (epow(2 * n - 1) @ tinv).scale(c_minus / qp1)
    )
    fails += matrix_residuals(f"f.e^{2 * n}", lhs1 - rhs1)

    ratio = (q - ONE) / qp1
    c4_plus = bracket("curly", n, base=4)
    c4_minus = bracket("curly", n, base=-4)
    cp_prev = bracket("curly", n - 1, base=2)
    cm_prev = bracket("curly", n - 1, base=-2)
    two_plus = bracket("curly", 2, base=2)
    two_minus = bracket("curly", 2, base=-2)
    lhs2 = f @ f @ epow(2 * n)
    rhs2 = (
        epow(2 * n) @ f @ f
        + (epow(2 * n - 1) @ t @ f).scale(q * ratio * c_plus)
        - (epow(2 * n - 1) @ tinv @ f).scale(ratio * c_minus / q)
        + (epow(2 * n - 2) @ t @ t).scale(
            (q / qp1)
            * (c4_plus / omega - (q**2) * ratio * cp_prev * c_plus / two_plus)
        )
        - (epow(2 * n - 2) @ tinv @ tinv).scale(
            (ONE / qp1)
            * (c4_minus / omega - ratio * cm_prev * c_minus / (two_minus * q**2))
        )
        - epow(2 * n - 2).scale(
            (q / qp1**3) * (q * c_plus + c_minus)
        )
    )
    fails += matrix_residuals(f"f^2.e^{2 * n}", lhs2 - rhs2)

    half = HalfInt.from_twice(1)
    alphas = [HalfInt(1), HalfInt(-1), half, -half]
    big_m = m_matrix(j)
    big_minv = inverse(big_m)
    for alpha in alphas:
        lhs = big_minv @ q_cartan_power(j, alpha) @ big_m
        rhs = script_t(j, alpha) @ q_cartan_power(j, alpha)
        fails += matrix_residuals(f"conjugation:alpha={alpha}", lhs - rhs)
    for alpha in alphas:
        for beta in alphas:
            lhs = (
                script_t(j, alpha + beta)
                @ q_cartan_power(j, alpha + beta)
            )
            rhs = (
                script_t(j, alpha)
                @ q_cartan_power(j, alpha)
                @ script_t(j, beta)
                @ q_cartan_power(j, beta)
            )
            fails += matrix_residuals(
                f"additivity:alpha={alpha},beta={beta}", lhs - rhs
            )

    # Shift identity of the base-q^2 exponential on the nilpotent argument.
    e2 = e @ e
    arg = e2.scale(eta())
    lhs = eq2_series(arg.scale(p_power(HalfInt(2)))) - eq2_series(
        arg.scale(p_power(HalfInt(-2)))
    )
    rhs = (arg @ eq2_series(arg)).scale(p_power(HalfInt(2)) - p_power(HalfInt(-2)))
    fails += matrix_residuals("shift-identity", lhs - rhs)

    lhs = script_t(j, 1) - script_t(j, -1)
    rhs = e2.scale(eta() * (p_power(HalfInt(2)) - p_power(HalfInt(-2))))
    fails += matrix_residuals("quotient-difference", lhs - rhs)

    # Classical-side group-like element: closed form against the limit,
    # the defining difference relation, and the square root of its half.
    routes = tilde_t_routes(j)
    fails += matrix_residuals("tilde-closed-vs-limit", routes["closed"] - routes["limit"])
    cl = classical_rep(j)
    ce2 = cl.matrix("e") @ cl.matrix("e")
    big_t = routes["closed"]
    big_tinv = ce2.scale(-HPARAM) + unit_sqrt(
        GradedMatrix.identity(cl.parity) + (ce2 @ ce2).scale(HPARAM**2)
    )
    fails += matrix_residuals(
        "tilde-difference", big_t - big_tinv - ce2.scale(HPARAM + HPARAM)
    )
    fails += matrix_residuals(
        "tilde-inverse", big_t @ big_tinv - GradedMatrix.identity(cl.parity)
    )
    half_limit = (script_t(j, half) @ q_cartan_power(j, half)).map_entries(
        lambda s: s.limit_p_to_1()
    )
    fails += matrix_residuals(
        "tilde-half-power", unit_power(big_t, Fraction(1, 2)) - half_limit
    )
    return VerificationReport("identities", {"j": j, "n": n}, fails)
