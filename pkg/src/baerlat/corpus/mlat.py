"""MLAT v1 text format and Graphviz DOT export.

::

    MLAT 1
    n <N>
    names <N labels>        (optional)
    leq
    <N rows of N tokens 0/1>
    mul
    <N rows of N element indices>

Tokens are whitespace separated, indices 0-based ASCII decimal, LF line
endings. ``#`` starts a comment running to the end of the line.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import ParseError, StructureError, ValidationError
from ..lattice import FiniteLattice
from ..quantale import MultLattice, validate_quantale


def _lines(text):
    for no, raw in enumerate(text.split("\n"), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield no, line


def _tokens(no, line):
    """(column, token) pairs for a line."""
    out, col = [], 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int(no, col, tok, lo, hi, what):
    if not tok.isdigit():
        raise ParseError(f"expected {what}, got {tok!r}", no, col)
    v = int(tok)
    if not lo <= v < hi:
        raise ParseError(f"{what} {v} out of range [{lo}, {hi})", no, col)
    return v


def parse_mlat(text: str) -> MultLattice:
    """Parse an MLAT document and validate it.

    Raises ParseError (with line and column) on malformed text and
    ValidationError when the order or multiplication is rejected.
    """
    lines = list(_lines(text))
    it = iter(lines)

    def expect(keyword, nargs):
        try:
            no, line = next(it)
        except StopIteration:
            last = lines[-1][0] if lines else 1
            raise ParseError(f"unexpected end of input, expected {keyword!r}", last) from None
        toks = _tokens(no, line)
        if toks[0][1] != keyword:
            raise ParseError(f"expected {keyword!r}, got {toks[0][1]!r}", no, toks[0][0])
        if nargs is not None and len(toks) != nargs + 1:
            raise ParseError(f"{keyword!r} takes {nargs} argument(s)", no, toks[0][0])
        return no, toks[1:]

    no, args = expect("MLAT", 1)
    if args[0][1] != "1":
        raise ParseError(f"unsupported MLAT version {args[0][1]!r}", no, args[0][0])
    no, args = expect("n", 1)
    n = _int(no, args[0][0], args[0][1], 1, 1 << 31, "element count")

    rest = list(it)
    names = None
    if rest and _tokens(*rest[0])[0][1] == "names":
        no, line = rest.pop(0)
        toks = _tokens(no, line)[1:]
        if len(toks) != n:
            raise ParseError(f"expected {n} names, got {len(toks)}", no)
        names = [t for _, t in toks]
        if len(set(names)) != n:
            raise ParseError("element names must be distinct", no)
    it = iter(rest)

    def matrix(keyword, hi, what):
        expect(keyword, 0)
        rows = []
        for r in range(n):
            try:
                no, line = next(it)
            except StopIteration:
                raise ParseError(f"{keyword} block ended after {r} of {n} rows",
                                 (rest[-1][0] if rest else 1)) from None
            toks = _tokens(no, line)
            if len(toks) != n:
                raise ParseError(f"{keyword} row {r} has {len(toks)} tokens, expected {n}",
                                 no, toks[0][0])
            rows.append([_int(no, c, t, 0, hi, what) for c, t in toks])
        return rows

    leq = matrix("leq", 2, "0/1 entry")
    mul = matrix("mul", n, "element index")
    extra = next(it, None)
    if extra is not None:
        raise ParseError("trailing content after mul block", extra[0])

    try:
        L = FiniteLattice(leq, names)
        return validate_quantale(L, mul)
    except StructureError as e:
        raise ValidationError(e) from e


def emit_mlat(M: MultLattice) -> str:
    """Canonical MLAT text; ``parse_mlat(emit_mlat(M)) == M``."""
    out = ["MLAT 1", f"n {M.n}"]
    if M.names is not None:
        if any(not s or any(ch.isspace() or ch == "#" for ch in s) for s in M.names):
            raise ValueError("names must be non-empty and contain no whitespace or '#'")
        out.append("names " + " ".join(M.names))
    out.append("leq")
    out += [" ".join("1" if v else "0" for v in row) for row in M.leq]
    out.append("mul")
    out += [" ".join(map(str, row)) for row in M.mul]
    return "\n".join(out) + "\n"


def emit_dot(M) -> str:
    """Hasse diagram as a directed graph, edges lower -> upper."""
    L = getattr(M, "lattice", M)
    out = ["digraph lattice {", "  rankdir=BT;"]
    for a in L.elements:
        label = L.label(a).replace("\\", "\\\\").replace('"', '\\"')
        out.append(f'  {a} [label="{label}"];')
    out += [f"  {a} -> {b};" for a, b in L.covers()]
    out.append("}")
    return "\n".join(out) + "\n"


def read_mlat(path) -> MultLattice:
    return parse_mlat(Path(path).read_text(encoding="ascii"))


def write_mlat(M: MultLattice, path) -> None:
    Path(path).write_text(emit_mlat(M), encoding="ascii", newline="\n")
