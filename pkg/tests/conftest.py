import math

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")


def seqs(max_len=4, max_entry=5, max_volume=2000):
    """Small positive sequences whose word set stays cheap to walk."""
    return st.lists(st.integers(1, max_entry), min_size=1, max_size=max_len).map(
        tuple).filter(lambda s: math.prod(s) <= max_volume)


@st.composite
def seq_and_word(draw, **kw):
    s = draw(seqs(**kw))
    r = tuple(draw(st.integers(0, m - 1)) for m in s)
    return s, r


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
