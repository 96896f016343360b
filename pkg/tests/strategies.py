"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from heckekoszul import hecke
from heckekoszul.laurent import LaurentPoly
from heckekoszul.rootdata import RootDatum, all_elements

laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)

TYPES = ("A1", "A1xA1", "A2", "B2", "G2")


@st.composite
def hecke_elts(draw, label: str, max_terms: int = 3, bound: int = 2):
    d = RootDatum.from_label(label)
    W = all_elements(d)
    out = hecke.zero(d)
    for _ in range(draw(st.integers(0, max_terms))):
        x = tuple(draw(st.integers(-bound, bound)) for _ in range(d.rank))
        w = draw(st.sampled_from(W))
        out = out + hecke.monomial(d, x, w, draw(laurents))
    return out
