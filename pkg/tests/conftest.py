from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size: int = 30):
    """Random partition of size at most ``max_size``."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    cap = n
    while n:
        x = draw(st.integers(min_value=1, max_value=min(n, cap)))
        parts.append(x)
        n -= x
        cap = x
    return tuple(parts)


@st.composite
def sparse_abaci(draw, max_slot: int = 12):
    from frobcore.abacus import SparseAbacus

    pos = draw(st.frozensets(st.integers(0, max_slot), max_size=8))
    neg = draw(st.frozensets(st.integers(0, max_slot), max_size=8))
    return SparseAbacus(pos, neg)
