"""Graded matrix layer: products, Kronecker signs, embeddings, inverses.

The sign conventions here decide the fate of every R-matrix check, so
the tests pin them down on the smallest possible cases worked by hand.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ospq.errors import NonHomogeneous, NotNilpotent
from ospq.gmatrix import (
    GradedMatrix,
    embed_pair,
    graded_kron,
    inverse,
    swap_conjugate,
    tensor_parity,
)
from ospq.nilfun import nil_exp, nil_log_unit, unit_power, unit_sqrt
from ospq.scalar import ONE, ZERO, Scalar


def M(parity, rows):
    return GradedMatrix.from_rows(parity, rows)


E01 = M((0, 1), [[0, 1], [0, 0]])  # odd single-entry matrix on an (e,o) space
E10 = M((0, 1), [[0, 0], [1, 0]])  # odd
DIAG = M((0, 1), [[1, 0], [0, -1]])  # even


class TestKronSigns:
    def test_even_second_factor_is_sign_free(self):
        got = graded_kron(E01, DIAG)
        assert got.entry(0, 2) == ONE
        assert got.entry(1, 3) == Scalar.from_int(-1)

    def test_odd_second_factor_picks_up_column_parity(self):
        # (a (x) b) with |b| = 1: sign is (-1)^(parity of first-factor column)
        got = graded_kron(DIAG, E01)
        # first-factor column 0 is even: + ; column 1 is odd: the -1 entry
        # of DIAG flips again
        assert got.entry(0, 1) == ONE
        assert got.entry(2, 3) == ONE

    def test_identity_times_odd_carries_signs(self):
        ident = GradedMatrix.identity((0, 1))
        got = graded_kron(ident, E01)
        assert got.entry(0, 1) == ONE  # even first-factor column
        assert got.entry(2, 3) == Scalar.from_int(-1)  # odd column

    def test_mixed_parity_needs_declaration(self):
        mixed = M((0, 1), [[1, 1], [0, 0]])
        with pytest.raises(NonHomogeneous):
            graded_kron(DIAG, mixed)
        graded_kron(DIAG, mixed, b_op_parity=0)  # declared: allowed

    def test_kron_is_associative(self):
        a, b, c = E01, DIAG, E10
        left = graded_kron(graded_kron(a, b), c)
        right = graded_kron(a, graded_kron(b, c))
        assert left == right

    def test_mixed_product_rule_with_signs(self):
        # (a (x) b)(c (x) d) = (-1)^{|b||c|} (ac (x) bd)
        for a in (E01, DIAG):
            for b in (E01, E10, DIAG):
                for c in (E01, E10):
                    for d in (E01, DIAG):
                        lhs = graded_kron(a, b) @ graded_kron(c, d)
                        sign = (-1) ** (
                            b.operator_parity() * c.operator_parity()
                        )
                        rhs = graded_kron(a @ c, b @ d).scale(sign)
                        assert lhs == rhs


class TestSwap:
    def test_graded_flip(self):
        # tau(x (x) z) = (-1)^{|x||z|} z (x) x
        for x in (E01, E10, DIAG):
            for z in (E01, E10, DIAG):
                on_ba = graded_kron(z, x)  # lives on V_b (x) V_a
                got = swap_conjugate(on_ba, (0, 1), (0, 1))
                sign = (-1) ** (x.operator_parity() * z.operator_parity())
                assert got == graded_kron(x, z).scale(sign)

    def test_swap_is_involutive(self):
        m = graded_kron(E01, DIAG)
        twice = swap_conjugate(swap_conjugate(m, (0, 1), (0, 1)), (0, 1), (0, 1))
        assert twice == m


class TestEmbed:
    def test_pair_on_first_legs_matches_kron_with_identity(self):
        pars = [(0, 1), (0, 1), (0, 1, 0)]
        r = graded_kron(E01, E10)
        direct = embed_pair(r, pars, (0, 1))
        via_kron = graded_kron(r, GradedMatrix.identity(pars[2]), b_op_parity=0)
        assert direct == via_kron

    def test_three_leg_sign_rule(self):
        # embedding x on leg 0 and z on leg 2 must reproduce the
        # multi-leg product sign (-1)^{|z| * |middle column|}
        pars = [(0, 1), (0, 1), (0, 1)]
        for x in (E01, DIAG):
            for z in (E10, DIAG):
                r = graded_kron(x, z)
                emb = embed_pair(r, pars, (0, 2))
                # independent dense construction
                expect = {}
                for (i, j), xv in x.entries.items():
                    for (k, l), zv in z.entries.items():
                        for s in range(2):
                            sign = (-1) ** (
                                z.operator_parity() * pars[1][s]
                            )
                            row = i * 4 + s * 2 + k
                            col = j * 4 + s * 2 + l
                            # the pair matrix itself already holds the
                            # kron sign |z| * parity(col j)
                            ksign = (-1) ** (
                                z.operator_parity() * pars[0][j]
                            )
                            expect[(row, col)] = (
                                xv * zv * Scalar.from_int(sign * ksign)
                            )
                for key, val in expect.items():
                    assert emb.entry(*key) == val

    def test_embed_trailing_legs(self):
        # Independent oracle for 1 (x) x (x) z from the action rule:
        # entry ((s,i1,i2),(s,j1,j2)) = x[i1,j1] z[i2,j2]
        #     * (-1)^{|x| p0(s) + |z| (p0(s) + p1(j1))}.
        pars = [(0, 1), (0, 1), (0, 1)]
        for x in (E01, DIAG):
            for z in (E10, DIAG):
                px = x.operator_parity()
                pz = z.operator_parity()
                emb = embed_pair(graded_kron(x, z), pars, (1, 2))
                expect = {}
                for (i1, j1), xv in x.entries.items():
                    for (i2, j2), zv in z.entries.items():
                        for s in range(2):
                            sign = px * pars[0][s] + pz * (
                                pars[0][s] + pars[1][j1]
                            )
                            row = s * 4 + i1 * 2 + i2
                            col = s * 4 + j1 * 2 + j2
                            expect[(row, col)] = (
                                xv * zv * Scalar.from_int((-1) ** sign)
                            )
                assert emb.entries == expect

    def test_embed_four_legs_spread(self):
        # 1 (x) x (x) 1 (x) z: the first factor crosses leg 0; the second
        # crosses legs 0, 1 (the x columns) and 2.
        pars = [(0, 1), (0, 1), (0, 1), (0, 1)]
        for x in (E01, DIAG):
            for z in (E10, DIAG):
                px = x.operator_parity()
                pz = z.operator_parity()
                emb = embed_pair(graded_kron(x, z), pars, (1, 3))
                expect = {}
                for (i1, j1), xv in x.entries.items():
                    for (i3, j3), zv in z.entries.items():
                        for s0 in range(2):
                            for s2 in range(2):
                                sign = px * pars[0][s0] + pz * (
                                    pars[0][s0] + pars[1][j1] + pars[2][s2]
                                )
                                row = s0 * 8 + i1 * 4 + s2 * 2 + i3
                                col = s0 * 8 + j1 * 4 + s2 * 2 + j3
                                expect[(row, col)] = (
                                    xv * zv * Scalar.from_int((-1) ** sign)
                                )
                assert emb.entries == expect


class TestInverse:
    def test_round_trip(self):
        m = M((0, 0, 1), [[1, 2, 0], [0, 1, 5], [1, 0, 1]])
        ident = GradedMatrix.identity((0, 0, 1))
        assert m @ inverse(m) == ident
        assert inverse(m) @ m == ident

    def test_singular_detected(self):
        with pytest.raises(ZeroDivisionError):
            inverse(M((0, 0), [[1, 1], [1, 1]]))


class TestNilpotentCalculus:
    def test_exp_log_inverse_pair(self):
        n = M((0, 0, 0), [[0, 3, 1], [0, 0, 2], [0, 0, 0]])
        ident = GradedMatrix.identity((0, 0, 0))
        assert nil_log_unit(nil_exp(n)) == n
        assert nil_exp(n) @ nil_exp(-n) == ident

    def test_unit_power_and_sqrt(self):
        n = M((0, 0, 0), [[0, 4, 2], [0, 0, -6], [0, 0, 0]])
        u = GradedMatrix.identity((0, 0, 0)) + n
        r = unit_sqrt(u)
        assert r @ r == u
        q = unit_power(u, Fraction(-3, 4))
        assert q @ q @ q @ q @ u @ u @ u == GradedMatrix.identity((0, 0, 0))

    def test_not_nilpotent_rejected(self):
        with pytest.raises(NotNilpotent):
            nil_exp(M((0,), [[1]]))


def test_tensor_parity_order():
    assert tensor_parity([(0, 1), (0, 1)]) == (0, 1, 1, 0)
    assert tensor_parity([(0, 1, 0), (0,)]) == (0, 1, 0)


def test_json_round_trip():
    m = M((0, 1, 0), [[1, 0, 0], [0, 0, 0], [0, 5, 0]])
    m2 = GradedMatrix.from_json_dict(m.to_json_dict())
    assert m2 == m
    assert m2.parity == m.parity
