"""Text and LaTeX formatting of q-polynomials and (bi)symmetric functions.

Human-facing output lists Schur terms in reverse-lexicographic partition
order (trivial representation first), with q-polynomials printed from the
top power down.  JSON serialization instead follows the column order of
`partitions`; both orders are deterministic.
"""

from .qpoly import QPoly, rat_str
from .symfunc import SymFunc
from .bigraded import BiSymFunc


def qpoly_text(p: QPoly) -> str:
    return str(p)


def qpoly_latex(p: QPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for k, v in sorted(p.items(), reverse=True):
        if k == 0:
            body = rat_str(v)
        else:
            var = "q" if k == 1 else f"q^{{{k}}}"
            if v == 1:
                body = var
            elif v == -1:
                body = f"-{var}"
            elif v.denominator == 1:
                body = f"{v.numerator}{var}"
            else:
                body = f"\\tfrac{{{v.numerator}}}{{{v.denominator}}}{var}"
        pieces.append(body)
    text = pieces[0]
    for piece in pieces[1:]:
        text += piece if piece.startswith("-") else "+" + piece
    return text


def _coeff_prefix(c: QPoly, latex: bool, star: str) -> str:
    """Format one coefficient in front of a basis symbol."""
    if c == QPoly(1):
        return ""
    items = c.items()
    negative = any(v < 0 for _, v in items)
    const_frac = len(items) == 1 and items[0][0] == 0 and items[0][1].denominator > 1
    body = qpoly_latex(c) if latex else qpoly_text(c)
    if len(items) > 1 or negative or const_frac:
        body = f"({body})"
    return body + star


def _display_order(keys):
    return sorted(keys, reverse=True)


def symfunc_text(f: SymFunc) -> str:
    fs = f.to_schur()
    if not fs.terms:
        return "0"
    pieces = []
    for lam in _display_order(fs.terms):
        symbol = "s[" + ",".join(map(str, lam)) + "]" if lam else "1"
        pieces.append(_coeff_prefix(fs.terms[lam], latex=False, star="*") + symbol)
    return " + ".join(pieces)


def symfunc_latex(f: SymFunc) -> str:
    fs = f.to_schur()
    if not fs.terms:
        return "0"
    pieces = []
    for lam in _display_order(fs.terms):
        symbol = "s_{(" + ",".join(map(str, lam)) + ")}" if lam else "1"
        pieces.append(_coeff_prefix(fs.terms[lam], latex=True, star="") + symbol)
    return "+".join(pieces)


def bisymfunc_text(f: BiSymFunc) -> str:
    fs = f.to_schur()
    if not fs.terms:
        return "0"
    if fs.xdeg == 0:
        return symfunc_text(fs.y_symfunc())
    pieces = []
    for lx, ly in _display_order(fs.terms):
        symbols = []
        if lx:
            symbols.append("sx[" + ",".join(map(str, lx)) + "]")
        if ly:
            symbols.append("sy[" + ",".join(map(str, ly)) + "]")
        body = "*".join(symbols) if symbols else "1"
        pieces.append(_coeff_prefix(fs.terms[(lx, ly)], latex=False, star="*") + body)
    return " + ".join(pieces)


def bisymfunc_latex(f: BiSymFunc) -> str:
    fs = f.to_schur()
    if not fs.terms:
        return "0"
    if fs.xdeg == 0:
        return symfunc_latex(fs.y_symfunc())
    pieces = []
    for lx, ly in _display_order(fs.terms):
        symbols = []
        if lx:
            symbols.append("s^{x}_{(" + ",".join(map(str, lx)) + ")}")
        if ly:
            symbols.append("s^{y}_{(" + ",".join(map(str, ly)) + ")}")
        body = "".join(symbols) if symbols else "1"
        pieces.append(_coeff_prefix(fs.terms[(lx, ly)], latex=True, star="") + body)
    return "+".join(pieces)
