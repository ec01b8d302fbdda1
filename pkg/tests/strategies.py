from fractions import Fraction

from hypothesis import strategies as st

from rootpoly.exactnum import QRat, VPoly
from rootpoly.laurent import LaurentPoly
from rootpoly.rootdata import build_root_system

small_ints = st.integers(-6, 6)
fractions = st.builds(Fraction, small_ints, st.integers(1, 5))

vpolys = st.lists(small_ints, max_size=4).map(VPoly)
nonzero_vpolys = vpolys.filter(lambda p: not p.is_zero())
qrats = st.builds(QRat, vpolys, nonzero_vpolys)
nonzero_qrats = qrats.filter(bool)

rank2_systems = st.sampled_from(["A2", "B2", "C2"]).map(build_root_system)


def laurent_polys(rs, max_terms=4, bound=3):
    exps = st.tuples(*[st.integers(-bound, bound)] * rs.rank)
    return st.dictionaries(exps, fractions, max_size=max_terms).map(lambda d: LaurentPoly(rs, d))


def dominant_weights(rank, bound=3):
    return st.tuples(*[st.integers(0, bound)] * rank)
