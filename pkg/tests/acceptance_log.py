"""Collects one verdict line per acceptance criterion for the terminal summary."""

RESULTS: list[str] = []


def record(number: int, name: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} [{number}] {name}: {detail}"
    print(line)
    RESULTS.append(line)
    return ok
