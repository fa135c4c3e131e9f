"""Exact one- and two-variable integer Laurent polynomials.

Values are immutable by convention: every operation returns a fresh object
and the term maps are never mutated after construction. Coefficients are
plain Python ints, so there is no overflow anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "SpecializationMap",
    "SPECIALIZE_S",
    "SPECIALIZE_L",
    "SPECIALIZE_W",
    "AUGMENTATION",
]


def _clean(terms):
    return {e: c for e, c in terms.items() if c != 0}


class LaurentPoly2:
    """Laurent polynomial in q1, q2; terms maps exponent pairs to nonzero ints."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, int], int] = _clean(terms or {})

    @classmethod
    def zero(cls) -> LaurentPoly2:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly2:
        return cls.monomial(0, 0)

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> LaurentPoly2:
        return cls({(a, b): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2({e: -c for e, c in self.terms.items()})

    def __add__(self, other: LaurentPoly2) -> LaurentPoly2:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly2(out)

    def __sub__(self, other: LaurentPoly2) -> LaurentPoly2:
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly2:
        if isinstance(other, int):
            return LaurentPoly2({e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def specialize(self, smap: SpecializationMap) -> LaurentPoly1:
        """Collapse to one variable: each q1^a q2^b goes to q^a', where a'
        sums the exponents whose targets are q."""
        out: dict[int, int] = {}
        for (a, b), c in self.terms.items():
            e = smap.exponent(a, b)
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out)

    def render(self, sep: str = "*") -> str:
        return _render(self.terms, ("q1", "q2"), sep)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly2:
        out: dict[tuple[int, int], int] = {}
        for coeff, exps in _parse_terms(text, ("q1", "q2")):
            e = (exps.get("q1", 0), exps.get("q2", 0))
            out[e] = out.get(e, 0) + coeff
        return cls(out)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.render()!r})"


class LaurentPoly1:
    """Laurent polynomial in q; terms maps exponents to nonzero ints."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, int] = _clean(terms or {})

    @classmethod
    def zero(cls) -> LaurentPoly1:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly1:
        return cls.monomial(0)

    @classmethod
    def monomial(cls, a: int, coeff: int = 1) -> LaurentPoly1:
        return cls({a: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __neg__(self) -> LaurentPoly1:
        return LaurentPoly1({e: -c for e, c in self.terms.items()})

    def __add__(self, other: LaurentPoly1) -> LaurentPoly1:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out)

    def __sub__(self, other: LaurentPoly1) -> LaurentPoly1:
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly1:
        if isinstance(other, int):
            return LaurentPoly1({e: c * other for e, c in self.terms.items()})
        out: dict[int, int] = {}
        for a1, c1 in self.terms.items():
            for a2, c2 in other.terms.items():
                out[a1 + a2] = out.get(a1 + a2, 0) + c1 * c2
        return LaurentPoly1(out)

    __rmul__ = __mul__

    def render(self, sep: str = "*") -> str:
        return _render({(a,): c for a, c in self.terms.items()}, ("q",), sep)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly1:
        out: dict[int, int] = {}
        for coeff, exps in _parse_terms(text, ("q",)):
            e = exps.get("q", 0)
            out[e] = out.get(e, 0) + coeff
        return cls(out)

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.render()!r})"


@dataclass(frozen=True)
class SpecializationMap:
    """Ring map out of the two-variable ring, sending each of q1, q2 to q or 1."""

    target_of_q1: str
    target_of_q2: str

    def __post_init__(self):
        for t in (self.target_of_q1, self.target_of_q2):
            if t not in ("q", "1"):
                raise ParseError(f"specialization target must be 'q' or '1', got {t!r}")

    def exponent(self, a: int, b: int) -> int:
        out = 0
        if self.target_of_q1 == "q":
            out += a
        if self.target_of_q2 == "q":
            out += b
        return out


SPECIALIZE_S = SpecializationMap("q", "q")  # q1, q2 -> q
SPECIALIZE_L = SpecializationMap("1", "q")  # q1 -> 1, q2 -> q
SPECIALIZE_W = SpecializationMap("q", "1")  # q2 -> 1, q1 -> q
AUGMENTATION = SpecializationMap("1", "1")


# ---------------------------------------------------------------------------
# rendering and parsing


def _render(terms, variables, sep):
    if not terms:
        return "0"
    parts = []
    for exps in sorted(terms, reverse=True):
        coeff = terms[exps]
        factors = []
        for var, e in zip(variables, exps):
            if e == 0:
                continue
            factors.append(var if e == 1 else f"{var}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = sep.join(factors)
        else:
            body = sep.join([str(mag)] + factors)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append((" + " if coeff > 0 else " - ") + body)
    return "".join(parts)


_TOKEN_RE = re.compile(r"\s*(q1|q2|q|\^|\*|\+|-|\d+)")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in polynomial {text!r}")
        toks.append(m.group(1))
        pos = m.end()
    return toks


def _parse_terms(text, variables):
    """INPUT: polynomial text and the allowed variable names.
    OUTPUT: list of (coefficient, {var: exponent}) term tuples.

    Accepts the rendered grammar plus optional whitespace; '*' between
    factors is optional, so "3 q1^2 q2^-1" and "3*q1^2*q2^-1" both parse.
    """
    toks = _tokenize(text)
    if not toks:
        raise ParseError(f"empty polynomial text {text!r}")
    terms = []
    i = 0
    n = len(toks)

    def take_sign():
        nonlocal i
        sign = 1
        while i < n and toks[i] in "+-":
            if toks[i] == "-":
                sign = -sign
            i += 1
        return sign

    sign = take_sign()
    while True:
        coeff = sign
        exps: dict[str, int] = {}
        saw_atom = False
        pending_mul = False
        while i < n:
            t = toks[i]
            if t.isdigit():
                coeff *= int(t)
                i += 1
                saw_atom, pending_mul = True, False
            elif t in ("q", "q1", "q2"):
                if t not in variables:
                    raise ParseError(
                        f"variable {t!r} is not allowed here (expected {', '.join(variables)})"
                    )
                i += 1
                e = 1
                if i < n and toks[i] == "^":
                    i += 1
                    esign = 1
                    while i < n and toks[i] in "+-":
                        if toks[i] == "-":
                            esign = -esign
                        i += 1
                    if i >= n or not toks[i].isdigit():
                        raise ParseError(f"exponent expected after '^' in {text!r}")
                    e = esign * int(toks[i])
                    i += 1
                exps[t] = exps.get(t, 0) + e
                saw_atom, pending_mul = True, False
            elif t == "*":
                if not saw_atom:
                    raise ParseError(f"misplaced '*' in {text!r}")
                i += 1
                pending_mul = True
            else:
                break
        if not saw_atom or pending_mul:
            raise ParseError(f"incomplete term in polynomial {text!r}")
        terms.append((coeff, exps))
        if i >= n:
            return terms
        if toks[i] not in "+-":
            raise ParseError(f"expected '+' or '-' before {toks[i]!r} in {text!r}")
        sign = take_sign()
        if i >= n:
            raise ParseError(f"dangling sign at end of {text!r}")
