import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

TITLES = {
    1: "face enumeration", 2: "composition", 3: "collinearity", 4: "axioms and Cousin complexes",
    5: "mutation detection", 6: "smoothness and perversity", 7: "functoriality", 8: "dimension-1 dictionary",
    9: "groupoid", 10: "multiplicities", 11: "affine mode",
}
_results: dict = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_", report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    ok = _results.get(k, True)
    if report.failed or (report.when == "call" and report.skipped):
        ok = False
    _results[k] = ok


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        terminalreporter.write_line(f"{'PASS' if _results[k] else 'FAIL'} criterion {k}: {TITLES[k]}")
