"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""
from contextlib import contextmanager

RESULTS: dict[int, list[tuple[bool, str]]] = {}
TITLES: dict[int, str] = {}


@contextmanager
def criterion(n: int, title: str, note: str = "", fail_note: str = ""):
    TITLES.setdefault(n, title)
    try:
        yield
    except BaseException:
        RESULTS.setdefault(n, []).append((False, fail_note or note))
        print(f"FAIL criterion {n}: {title}" + (f" ({fail_note or note})" if fail_note or note else ""))
        raise
    RESULTS.setdefault(n, []).append((True, note))
    print(f"PASS criterion {n}: {title}" + (f" ({note})" if note else ""))


def summary_lines(total: int = 8) -> list[str]:
    out = []
    for n in range(1, total + 1):
        parts = RESULTS.get(n)
        if not parts:
            if n in TITLES or n == 2:
                out.append(f"NOT RUN criterion {n}: {TITLES.get(n, 'slow medium x0 rows')} (slow: --runslow or RGDOPT_SLOW=1)")
            continue
        ok = all(p for p, _ in parts)
        notes = "; ".join(note for _, note in parts if note)
        out.append(f"{'PASS' if ok else 'FAIL'} criterion {n}: {TITLES[n]}" + (f" ({notes})" if notes else ""))
    return out
