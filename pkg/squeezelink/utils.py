import hashlib
import math


def parse_float(str_float):
    if str_float is None:
        return None
    return float(str_float)


def parse_sweep(value):
    """
    Transforms a sweep description into a list of floats.

    Accepts a number, a list of numbers, "a,b,c" or "lo:hi:n" (n evenly
    spaced points, both ends included). Raises ValueError on empty or
    inconsistent sweeps.
    """
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        points = [float(value)]
    elif isinstance(value, (list, tuple)):
        points = [float(v) for v in value]
    elif isinstance(value, str) and ':' in value:
        try:
            lo, hi, n = value.split(':')
            lo, hi, n = float(lo), float(hi), int(n)
        except ValueError:
            raise ValueError(f"bad range {value!r}, expected lo:hi:n") from None
        if n < 1 or hi < lo or (n == 1 and hi != lo):
            raise ValueError(f"bad range bounds {value!r}")
        step = (hi - lo) / (n - 1) if n > 1 else 0.0
        points = [lo + i * step for i in range(n)]
    elif isinstance(value, str):
        points = [parse_float(v) for v in value.split(',') if v.strip()]
    else:
        raise ValueError(f"cannot read a sweep from {value!r}")
    if not points:
        raise ValueError("empty sweep")
    if not all(math.isfinite(p) for p in points):
        raise ValueError(f"non-finite value in sweep {value!r}")
    return points


def digest(text):
    if isinstance(text, str):
        text = text.encode()
    return hashlib.sha256(text).hexdigest()


def tabulate(rows, headers=None, margin=1, align=None):
    ncols = len(rows[0])
    lengths = [-math.inf] * ncols
    if headers:
        # don't side-effect modify rows
        rows = [headers] + rows
    for row in rows:
        lengths = [max(l, len(col)) for l, col in zip(lengths, row)]
    lengths = [l + margin for l in lengths]
    if align is None:
        align = ['<'] * ncols
    fmt = "".join("{:%s{s%d}}%s" % (a, i, " | " if i < ncols - 1 else "")
                  for i, a in enumerate(align))
    for row in rows:
        yield fmt.format(*row, **{f's{i}': l for i, l in enumerate(lengths)})
