import sys

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))

ACCEPTANCE = {}  # criterion number -> (passed, line)


def record(number, passed, detail):
    line = f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {detail}"
    ACCEPTANCE[number] = (passed, line)
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number][1])
