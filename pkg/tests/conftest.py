from itertools import combinations

from hypothesis import strategies as st

from twcert.graphs import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pool = list(combinations(range(n), 2))
    if pool:
        edges = draw(
            st.lists(st.sampled_from(pool), unique=True, max_size=len(pool))
        )
    else:
        edges = []
    return Graph(n, edges)


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pool = list(combinations(range(n), 2))
    spanning = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    extra = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return Graph(n, spanning + extra)
