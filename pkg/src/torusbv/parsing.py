"""Text grammar for Laurent polynomials and polyvector fields.

Machine form uses ASCII `t` for the odd generators, e.g. `3/2*z1^-2*z2^3*t1`
or the tuple-exponent shorthand `z^(1,-2)*t1`.  Terms are `+`/`-` separated.
Human-facing rendering substitutes the Greek letter and wedge symbol.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bvalgebra import PolyVector
from .laurent import LaurentPoly


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_NUMBER = re.compile(r"[+-]?\d+(/\d+)?")
_VAR = re.compile(r"z(\d+)\^(-?\d+)")
_VAR_PLAIN = re.compile(r"z(\d+)")
_TUPLE_EXP = re.compile(r"z\^\((-?\d+(?:,-?\d+)*)\)")
_SINGLE_EXP = re.compile(r"z\^(-?\d+)")
_Z_PLAIN = re.compile(r"z(?![\d^])")
_THETA = re.compile(r"[tθ](\d+)")


def _split_terms(text: str):
    """Split on top-level +/- (not inside parentheses), keeping signs."""
    terms = []
    depth = 0
    current = ""
    start = 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", pos)
        elif ch in "+-" and depth == 0 and current.strip():
            # exponent minus signs always follow '^' or ',' or '('
            prev = current.rstrip()[-1:]
            if prev not in "^,*(":
                terms.append((current, start))
                current = ""
                start = pos
        current += ch
    if depth != 0:
        raise ParseError("unbalanced '('", len(text))
    if current.strip():
        terms.append((current, start))
    return terms


def _parse_term(term: str, offset: int, rank: int):
    """Parse one product of factors; returns (coeff, exp list, wedge list)."""
    term = term.strip()
    sign = Fraction(1)
    while term and term[0] in "+-":
        if term[0] == "-":
            sign = -sign
        term = term[1:].lstrip()
    if not term:
        raise ParseError("empty term", offset)
    coeff = sign
    exp = [0] * rank
    wedge = []
    for factor in term.split("*"):
        factor = factor.strip()
        if not factor:
            raise ParseError("empty factor", offset)
        m = _NUMBER.fullmatch(factor)
        if m:
            coeff *= Fraction(factor)
            continue
        m = _TUPLE_EXP.fullmatch(factor)
        if m:
            values = [int(v) for v in m.group(1).split(",")]
            if len(values) != rank:
                raise ParseError(
                    f"exponent tuple has {len(values)} entries, expected {rank}", offset
                )
            exp = [a + b for a, b in zip(exp, values)]
            continue
        m = _SINGLE_EXP.fullmatch(factor)
        if m and rank == 1:
            exp[0] += int(m.group(1))
            continue
        m = _VAR.fullmatch(factor)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= rank:
                raise ParseError(f"variable z{i} out of range for rank {rank}", offset)
            exp[i - 1] += int(m.group(2))
            continue
        m = _VAR_PLAIN.fullmatch(factor)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= rank:
                raise ParseError(f"variable z{i} out of range for rank {rank}", offset)
            exp[i - 1] += 1
            continue
        if _Z_PLAIN.fullmatch(factor) and rank == 1:
            exp[0] += 1
            continue
        m = _THETA.fullmatch(factor)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= rank:
                raise ParseError(f"generator t{i} out of range for rank {rank}", offset)
            wedge.append(i)
            continue
        raise ParseError(f"unrecognized factor {factor!r}", offset)
    return coeff, tuple(exp), tuple(wedge)


def parse_polyvector(text: str, rank: int) -> PolyVector:
    text = text.strip()
    if text == "0":
        return PolyVector.zero(rank)
    result = PolyVector.zero(rank)
    for term, offset in _split_terms(text):
        coeff, exp, wedge = _parse_term(term, offset, rank)
        result = result + PolyVector.monomial(rank, exp, wedge, coeff)
    return result


def parse_laurent(text: str, rank: int) -> LaurentPoly:
    pv = parse_polyvector(text, rank)
    return pv.degree0_to_laurent()


def format_polyvector(pv: PolyVector, human: bool = False) -> str:
    """Canonical machine form (round-trips through parse_polyvector), or a
    human form with Greek theta and wedge glyphs."""
    if pv.is_zero():
        return "0"
    parts = []
    for exp, wedge in sorted(pv.terms):
        factors = [f"z{i + 1}^{e}" for i, e in enumerate(exp) if e != 0]
        if human:
            factors.extend([])
            theta = "∧".join(f"θ{i}" for i in wedge)
            if theta:
                factors.append(theta)
        else:
            factors.extend(f"t{i}" for i in wedge)
        c = pv.terms[(exp, wedge)]
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        elif c == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append("*".join([str(c)] + factors))
    out = parts[0]
    for part in parts[1:]:
        out += part if part.startswith("-") else "+" + part
    return out
