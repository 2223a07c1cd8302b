from hypothesis import settings, strategies as st

from sylowbranch.partitions import Partition

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def partitions(max_size: int = 14):
    """Hypothesis strategy: partitions of size at most ``max_size``."""

    @st.composite
    def build(draw):
        total = draw(st.integers(0, max_size))
        parts = []
        left = total
        while left:
            x = draw(st.integers(1, left))
            parts.append(x)
            left -= x
        return Partition(sorted(parts, reverse=True))

    return build()
