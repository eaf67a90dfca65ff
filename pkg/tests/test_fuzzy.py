import pytest
from hypothesis import given, strategies as st

from intervalfusion import (
    INTERVAL_DEFAULT_SCALE,
    KAUFMANN_TFN_SCALE,
    Interval,
    LinguisticScale,
    TriangularFuzzyNumber,
    as_interval,
    builtin_scales,
    crisp_to_interval,
)
from intervalfusion.errors import (
    InvalidAlpha,
    InvalidFuzzyNumber,
    InvalidInterval,
    UnknownTerm,
)


class TestMembership:
    def test_peak(self):
        assert TriangularFuzzyNumber(0.3, 0.5, 0.7).membership(0.5) == 1.0

    def test_outside_support(self):
        t = TriangularFuzzyNumber(0.3, 0.5, 0.7)
        assert t.membership(0.2) == 0.0
        assert t.membership(0.8) == 0.0

    def test_rising_flank(self):
        assert TriangularFuzzyNumber(0.3, 0.5, 0.7).membership(0.4) == pytest.approx(0.5)

    def test_falling_flank(self):
        assert TriangularFuzzyNumber(0.3, 0.5, 0.7).membership(0.6) == pytest.approx(0.5)

    def test_support_edges(self):
        t = TriangularFuzzyNumber(0.3, 0.5, 0.7)
        assert t.membership(0.3) == 0.0
        assert t.membership(0.7) == 0.0

    def test_degenerate_flanks(self):
        assert TriangularFuzzyNumber(0.5, 0.5, 0.7).membership(0.5) == 1.0
        assert TriangularFuzzyNumber(0.3, 0.7, 0.7).membership(0.7) == 1.0
        assert TriangularFuzzyNumber(0.5, 0.5, 0.5).membership(0.5) == 1.0

    def test_invalid_vertices(self):
        with pytest.raises(InvalidFuzzyNumber):
            TriangularFuzzyNumber(0.5, 0.3, 0.7)
        with pytest.raises(InvalidFuzzyNumber):
            TriangularFuzzyNumber(0.3, float("nan"), 0.7)


class TestAlphaCut:
    def test_support_at_zero(self):
        cut = TriangularFuzzyNumber(0.3, 0.5, 0.7).alpha_cut(0.0)
        assert cut == Interval(0.3, 0.7)

    def test_peak_at_one(self):
        cut = TriangularFuzzyNumber(0.3, 0.5, 0.7).alpha_cut(1.0)
        assert cut.isclose(Interval(0.5, 0.5))

    def test_halfway(self):
        cut = TriangularFuzzyNumber(0.1, 0.3, 0.5).alpha_cut(0.5)
        assert cut.isclose(Interval(0.2, 0.4))

    @pytest.mark.parametrize("alpha", [-0.1, 1.1])
    def test_invalid_alpha(self, alpha):
        with pytest.raises(InvalidAlpha):
            TriangularFuzzyNumber(0.3, 0.5, 0.7).alpha_cut(alpha)

    def test_as_interval_passthrough(self):
        iv = Interval(0.1, 0.2)
        assert as_interval(iv, 0.7) is iv
        assert as_interval(TriangularFuzzyNumber(0.3, 0.5, 0.7)) == Interval(0.3, 0.7)


class TestScales:
    def test_interval_scale_lookup(self):
        assert INTERVAL_DEFAULT_SCALE.lookup("Medium (M)") == Interval(0.3, 0.7)
        assert INTERVAL_DEFAULT_SCALE.lookup("High (H)") == Interval(0.5, 0.9)

    def test_tfn_scale_lookup(self):
        assert KAUFMANN_TFN_SCALE.lookup("Very high (VH)") == TriangularFuzzyNumber(0.7, 0.9, 1.0)

    def test_unknown_term(self):
        with pytest.raises(UnknownTerm) as err:
            INTERVAL_DEFAULT_SCALE.lookup("Extreme")
        # the diagnostic lists the valid terms
        assert "Medium (M)" in str(err.value)

    def test_lookup_total_and_deterministic(self):
        for scale in builtin_scales().values():
            for label in scale.labels:
                assert scale.lookup(label) == scale.lookup(label)

    def test_full_interval_table(self):
        expected = {
            "Very low (VL)": (0.0, 0.3),
            "Low (L)": (0.1, 0.5),
            "Medium (M)": (0.3, 0.7),
            "High (H)": (0.5, 0.9),
            "Very high (VH)": (0.7, 1.0),
        }
        assert {l: (v.lo, v.hi) for l, v in INTERVAL_DEFAULT_SCALE.terms} == expected

    def test_full_tfn_table(self):
        expected = {
            "Very low (VL)": (0.0, 0.1, 0.3),
            "Low (L)": (0.1, 0.3, 0.5),
            "Medium (M)": (0.3, 0.5, 0.7),
            "High (H)": (0.5, 0.7, 0.9),
            "Very high (VH)": (0.7, 0.9, 1.0),
        }
        assert {l: (v.a, v.b, v.c) for l, v in KAUFMANN_TFN_SCALE.terms} == expected

    def test_tfn_supports_match_interval_scale(self):
        # alpha = 0 bridges each tfn term to its interval counterpart
        for (label, tfn), (label2, iv) in zip(
            KAUFMANN_TFN_SCALE.terms, INTERVAL_DEFAULT_SCALE.terms
        ):
            assert label == label2
            assert tfn.support == iv

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            LinguisticScale(
                name="x",
                kind="interval",
                terms=(("A", Interval(0, 1)), ("A", Interval(0, 1))),
            )

    def test_kind_mismatch_rejected(self):
        with pytest.raises(ValueError):
            LinguisticScale(name="x", kind="tfn", terms=(("A", Interval(0, 1)),))


class TestCrispEmbedding:
    def test_examples(self):
        assert crisp_to_interval(0.5) == Interval(0.5, 0.5)
        assert crisp_to_interval(0) == Interval(0, 0)
        assert crisp_to_interval(0.95) == Interval(0.95, 0.95)

    def test_zero_width(self):
        iv = crisp_to_interval(0.5)
        assert iv.width == 0.0
        assert iv.distance(iv) == 0.0

    @pytest.mark.parametrize("bad", [-0.1, float("nan"), float("inf"), "0.5", True])
    def test_rejects(self, bad):
        with pytest.raises(InvalidInterval):
            crisp_to_interval(bad)


unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@st.composite
def tfns(draw):
    a = draw(unit)
    b = draw(st.floats(min_value=a, max_value=1.0, allow_nan=False))
    c = draw(st.floats(min_value=b, max_value=1.0, allow_nan=False))
    return TriangularFuzzyNumber(a, b, c)


class TestFuzzyProperties:
    @given(t=tfns(), x=st.floats(min_value=-1.0, max_value=2.0, allow_nan=False))
    def test_membership_bounded(self, t, x):
        assert 0.0 <= t.membership(x) <= 1.0

    @given(t=tfns())
    def test_membership_peak_is_one(self, t):
        assert t.membership(t.b) == 1.0

    @given(t=tfns(), a1=unit, a2=unit)
    def test_alpha_cuts_nested(self, t, a1, a2):
        lo_alpha, hi_alpha = min(a1, a2), max(a1, a2)
        outer = t.alpha_cut(lo_alpha)
        inner = t.alpha_cut(hi_alpha)
        assert outer.lo <= inner.lo + 1e-12
        assert inner.hi <= outer.hi + 1e-12

    @given(
        a=st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
        left_width=st.floats(min_value=0.01, max_value=1.0, allow_nan=False),
        right_width=st.floats(min_value=0.01, max_value=1.0, allow_nan=False),
        x=st.floats(min_value=-0.5, max_value=3.5, allow_nan=False),
        eps=st.floats(min_value=1e-9, max_value=1e-7, allow_nan=False),
    )
    def test_membership_continuous(self, a, left_width, right_width, x, eps):
        # piecewise-linear with slope bounded by 1/flank-width, so nearby
        # points have nearby membership (degenerate flanks excluded: there
        # the membership legitimately steps to 1 at the shared point)
        t = TriangularFuzzyNumber(a, a + left_width, a + left_width + right_width)
        slope = 1.0 / min(left_width, right_width)
        delta = abs(t.membership(x + eps) - t.membership(x - eps))
        assert delta <= 2.0 * eps * slope + 1e-12
