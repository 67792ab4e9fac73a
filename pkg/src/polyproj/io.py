"""cdd-style .ine/.ext files and directions files."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import FormatError
from .exactmath import fmt_rat, rat
from .polytope import HPolytope, VPolytope


class VData(NamedTuple):
    points: tuple
    rays: tuple
    dim: int


def _tokens(line: str):
    try:
        return [rat(t) for t in line.split()]
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad number in line {line!r}") from exc


def _body(text: str, kind: str):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith(("*", "#"))]
    if not lines or lines[0] != f"{kind}-representation":
        raise FormatError(f"missing '{kind}-representation' header")
    linearity = []
    i = 1
    while i < len(lines) and lines[i] != "begin":
        head = lines[i].split()
        if head[0] == "linearity":
            try:
                count = int(head[1])
                linearity = [int(x) for x in head[2:]]
            except (IndexError, ValueError) as exc:
                raise FormatError(f"bad linearity line {lines[i]!r}") from exc
            if count != len(linearity):
                raise FormatError("linearity count does not match its index list")
        i += 1
    if i >= len(lines):
        raise FormatError("missing 'begin'")
    try:
        m, width, numtype = lines[i + 1].split()
        m, width = int(m), int(width)
    except (IndexError, ValueError) as exc:
        raise FormatError("expected 'm n+1 rational' after 'begin'") from exc
    if numtype not in ("rational", "integer"):
        raise FormatError(f"unsupported number type {numtype!r}")
    rows = [_tokens(ln) for ln in lines[i + 2 : i + 2 + m]]
    if len(rows) != m or lines[i + 2 + m : i + 3 + m] != ["end"]:
        raise FormatError(f"expected {m} rows followed by 'end'")
    for r in rows:
        if len(r) != width:
            raise FormatError(f"row of length {len(r)}, expected {width}")
    if any(not 1 <= j <= m for j in linearity):
        raise FormatError("linearity index out of range")
    return rows, width - 1, set(linearity)


def parse_h(text: str) -> HPolytope:
    """Rows ``b -a_1 ... -a_n`` mean ``a . z <= b``; linearity rows are equalities."""
    rows, n, lin = _body(text, "H")
    A, b, E, f = [], [], [], []
    for idx, r in enumerate(rows, start=1):
        a = tuple(-x for x in r[1:])
        if idx in lin:
            E.append(a)
            f.append(r[0])
        elif any(a):
            A.append(a)
            b.append(r[0])
        elif r[0] < 0:
            raise FormatError(f"row {idx} reads 0 <= {r[0]}: infeasible")
    return HPolytope(A, b, E, f, dim=n)


def parse_v(text: str) -> VData:
    """Rows ``1 v_1 ... v_n`` are points, ``0 r_1 ... r_n`` are rays."""
    rows, n, lin = _body(text, "V")
    if lin:
        raise FormatError("linearity is not supported in V-files")
    pts, rays = [], []
    for r in rows:
        if r[0] == 1:
            pts.append(tuple(r[1:]))
        elif r[0] == 0:
            rays.append(tuple(r[1:]))
        else:
            raise FormatError(f"leading entry must be 0 or 1, got {r[0]}")
    return VData(tuple(pts), tuple(rays), n)


def parse_any(text: str):
    head = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith(("*", "#"))), "")
    if head == "H-representation":
        return parse_h(text)
    if head == "V-representation":
        return parse_v(text)
    raise FormatError("file is neither an H- nor a V-representation")


def v_polytope(data: VData) -> VPolytope:
    if data.rays:
        raise FormatError("rays are only accepted where a cone is expected")
    if not data.points:
        raise FormatError("V-file lists no points")
    return VPolytope(data.points, data.dim)


def _row(xs) -> str:
    return " ".join(fmt_rat(x) for x in xs)


def format_h(P: HPolytope) -> str:
    rows = [(bi,) + tuple(-x for x in a) for a, bi in zip(P.A, P.b)]
    eqs = [(fi,) + tuple(-x for x in e) for e, fi in zip(P.eq_A, P.eq_b)]
    out = ["H-representation"]
    if eqs:
        idx = range(len(rows) + 1, len(rows) + len(eqs) + 1)
        out.append(f"linearity {len(eqs)} " + " ".join(map(str, idx)))
    out += ["begin", f"{len(rows) + len(eqs)} {P.dim + 1} rational"]
    out += [_row(r) for r in rows + eqs]
    out.append("end")
    return "\n".join(out) + "\n"


def format_v(Q: VPolytope, rays=()) -> str:
    rows = [(1,) + tuple(p) for p in Q.points] + [(0,) + tuple(r) for r in rays]
    out = ["V-representation", "begin", f"{len(rows)} {Q.dim + 1} rational"]
    out += [_row(r) for r in rows]
    out.append("end")
    return "\n".join(out) + "\n"


def parse_directions(text: str, n: int | None = None) -> list:
    """k lines of n rationals; blank lines and ``#`` comments are skipped."""
    dirs = [tuple(_tokens(ln)) for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    for g in dirs:
        if n is not None and len(g) != n:
            raise FormatError(f"direction of length {len(g)}, expected {n}")
    return dirs


def format_directions(dirs) -> str:
    return "".join(_row(g) + "\n" for g in dirs)


def parse_vector(text: str) -> tuple:
    toks = _tokens(text)
    if not toks:
        raise FormatError("empty vector")
    return tuple(toks)


def read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write(path: str | None, text: str):
    if path is None or path == "-":
        print(text, end="")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def json_rows(rows) -> list:
    return [[fmt_rat(Fraction(x)) for x in r] for r in rows]
