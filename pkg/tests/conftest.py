import hypothesis.strategies as st
from hypothesis import settings

from seqforge.seqcore import BinarySequence, QuaternarySequence

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def binary_seqs(min_size=1, max_size=40):
    return st.lists(st.integers(0, 1), min_size=min_size, max_size=max_size).map(BinarySequence)


def quaternary_seqs(min_size=1, max_size=40):
    return st.lists(st.integers(0, 3), min_size=min_size, max_size=max_size).map(QuaternarySequence)


@st.composite
def same_length(draw, alphabet=4, count=2, min_size=1, max_size=30):
    n = draw(st.integers(min_size, max_size))
    kind = QuaternarySequence if alphabet == 4 else BinarySequence
    return tuple(
        kind(draw(st.lists(st.integers(0, alphabet - 1), min_size=n, max_size=n)))
        for _ in range(count)
    )


ACCEPTANCE_LINES: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
