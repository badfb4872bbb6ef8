"""Order-by-order checks for the Cartan-preserving twist series."""

from fractions import Fraction

import pytest

from ospq.gmatrix import graded_kron
from ospq.halfint import HalfInt
from ospq.hopf import r1_algebra
from ospq.r1 import inverse_map_words, r1_generators, x_nilpotency
from ospq.report import series_residuals
from ospq.reps import classical_rep
from ospq.scalar import H, scalar_from_string
from ospq.texpr import TensorExpression as TE
from ospq.twist import (
    SERIES_DEPTH,
    hdiag_cocycle_check,
    hdiag_drinfeld_residuals,
    hdiag_twist_check,
    hdiag_twist_expression,
    series_twist,
)

HALF = HalfInt(Fraction(1, 2))
ONEJ = HalfInt(1)
sc = scalar_from_string


class TestDisplayedSeries:
    PAIRS = ((HALF, HALF), (HALF, ONEJ))
    TRIPLES = (
        (HALF, HALF, HALF),
        (HALF, HALF, ONEJ),
        (HALF, ONEJ, ONEJ),
    )

    def test_series_head_is_the_unit(self):
        g = hdiag_twist_expression()
        assert g.terms[((), ())].is_one

    def test_series_depth_is_two(self):
        # The printed form stops at h^2, and every order-by-order check
        # in this module expands exactly that far.
        assert SERIES_DEPTH == 2

    @pytest.mark.parametrize(
        "pair", PAIRS, ids=lambda p: "-".join(str(x) for x in p)
    )
    def test_undressing_residuals_vanish(self, pair):
        assert hdiag_drinfeld_residuals(*pair) == []

    def test_perturbed_series_fails_undressing(self):
        # Adding any stray first-order term must leave a visible
        # residual, otherwise the check has no teeth.
        rep = r1_generators(HALF, "hdiag")
        cls = classical_rep(HALF)
        alg = r1_algebra()
        g = hdiag_twist_expression() + TE.pure((("X",), ("X",)), H * sc("1/3"))
        gmat = g.evaluate([rep, rep])
        iden = rep.identity()
        word = inverse_map_words("hdiag", nilpotency=x_nilpotency(HALF))["h"]
        dressed = word.coproduct(0, alg.delta).evaluate([rep, rep])
        primitive = graded_kron(cls.matrix("h"), iden, b_op_parity=0) + graded_kron(
            iden, cls.matrix("h")
        )
        residuals = series_residuals(
            "undress:h", gmat @ dressed - primitive @ gmat, SERIES_DEPTH
        )
        assert residuals != []

    @pytest.mark.parametrize(
        "triple", TRIPLES, ids=lambda t: "-".join(str(x) for x in t)
    )
    def test_cocycle_identity(self, triple):
        report = hdiag_cocycle_check(*triple)
        assert report.failures == []
        assert report.ok

    def test_pair_report_passes(self):
        report = hdiag_twist_check(HALF, ONEJ)
        assert report.ok
        assert report.parameters["family"] == "hdiag"
        assert report.parameters["order"] == SERIES_DEPTH


class TestSeriesSolver:
    def test_rejects_orders_below_one(self):
        with pytest.raises(ValueError):
            series_twist(0)

    def test_first_order_reproduces_the_display(self):
        series = series_twist(1)
        assert series.order == 1
        assert series.display_matched == [True]
        expected = TE.pure((("H",), ("X",)), sc("1/2")) + TE.pure(
            (("X",), ("H",)), sc("-1/2")
        )
        assert series.coefficients[0] == expected

    def test_second_order_reproduces_the_display(self):
        series = series_twist(2)
        assert series.display_matched == [True, True]
        plus = sc("1/8")
        minus = sc("-1/8")
        expected = (
            TE.pure((("H", "H"), ("X", "X")), plus)
            + TE.pure((("H", "X"), ("X", "H")), minus)
            + TE.pure((("X", "H"), ("H", "X")), minus)
            + TE.pure((("X", "X"), ("H", "H")), plus)
            + TE.pure((("H",), ("X", "X")), plus)
            + TE.pure((("X", "X"), ("H",)), plus)
        )
        assert series.coefficients[1] == expected

    def test_gauge_freedom_dimensions(self):
        # The solved coefficient is unique only up to the kernel of the
        # linear problem; freezing its dimension pins the ansatz, the
        # equation count and the rank all at once.
        assert series_twist(2).kernel_dimensions == [41, 953]

    def test_expression_assembles_the_printed_series(self):
        assert series_twist(2).expression() == hdiag_twist_expression()
