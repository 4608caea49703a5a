from hypothesis import strategies as st
from hypothesis.strategies import composite

from ccwidth import build_graph


@composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = [p for p in pairs if draw(st.booleans())]
    return build_graph(n, picked)
