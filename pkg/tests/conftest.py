def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(results.items()):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {name}"
        terminalreporter.write_line(line if ok else f"{line}  ({detail})")
