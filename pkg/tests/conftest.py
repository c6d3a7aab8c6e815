import os

from hypothesis import HealthCheck, settings, strategies as st

from rookharmonics.partitions import Partition

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, max_size: int = 10, min_size: int = 0):
    """A random partition of a random size in ``min_size..max_size``."""
    n = draw(st.integers(min_size, max_size))
    parts = []
    left = n
    while left:
        p = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(parts)
