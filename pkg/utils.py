import sys
import datetime
import traceback

import tqdm

class DomainError(Exception):
    pass

class InternalInconsistency(DomainError):
    pass

def log(label, *parts):
    print(f"{label}:", *parts, file=sys.stderr)

def log_traceback(label, stream=None):
    exc_type, exc_value, exc_tb = sys.exc_info()
    tb = "".join(traceback.format_exception(exc_type, exc_value, exc_tb))
    with open("crash.log", "a", encoding='utf-8') as f:
        f.write(f"{label} {datetime.datetime.now()}\n{tb}\n")
    print(label, tb, file=stream or sys.stderr)
    return tb

def progress(iterable, desc=None, verbose=False, total=None):
    return tqdm.tqdm(iterable, desc=desc, total=total, disable=not verbose, file=sys.stderr)

def format_table(rows):
    rows = [[str(c) for c in row] for row in rows]
    if not rows:
        return ""
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    lines = []
    for row in rows:
        lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()]
    return "\n".join(lines)
