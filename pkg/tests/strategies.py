from gmpy2 import mpq
from hypothesis import strategies as st

from symtriple.scalar import GaussianRational, RationalQuaternion

rationals = st.builds(lambda a, b: mpq(a, b), st.integers(-20, 20), st.integers(1, 9))
gaussians = st.builds(GaussianRational, rationals, rationals)
quaternions = st.builds(RationalQuaternion, rationals, rationals, rationals, rationals)


def sparse_vectors(n, max_support=3):
    return st.dictionaries(st.integers(0, n - 1), rationals.filter(bool), max_size=max_support)
