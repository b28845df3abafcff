from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from eisenstein2.series import LaurentSeries

settings.register_profile("exact", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = small_rationals.filter(bool)


@st.composite
def series(draw, min_val=0, max_val=2, min_len=1, max_len=12, nonzero_lead=False):
    """Random dense LaurentSeries with small rational coefficients."""
    val = draw(st.integers(min_val, max_val))
    cs = draw(st.lists(small_rationals, min_size=min_len, max_size=max_len))
    if nonzero_lead:
        cs[0] = draw(nonzero_rationals)
    return LaurentSeries(cs, val, val + len(cs))


def q(*coeffs, valuation=0, order=None):
    return LaurentSeries([Fraction(c) for c in coeffs], valuation, order)
