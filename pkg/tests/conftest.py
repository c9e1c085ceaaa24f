import os

from hypothesis import HealthCheck, settings, strategies as st

from specgraph.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, line = RESULTS[num]
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d} {line}")
    tr.write_line(f"{sum(ok for ok, _ in RESULTS.values())}/{len(RESULTS)} criteria pass")
