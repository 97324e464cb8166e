"""Ordinal arithmetic in hereditary Cantor normal form, below epsilon_0.

An ordinal is a finite sum ``w^e1*c1 + ... + w^ek*ck`` with strictly
decreasing exponents (themselves ordinals in the same form) and positive
integer coefficients; the empty sum is 0.  The form is unique, so
structural equality is value equality and instances can be hashed,
ordered, and used as dict keys.

Points of the spaces built on top of this module are ordinals, and the
rank of a point is the least exponent of its normal form: 0 for
successors, the last exponent otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import NotALimit, OrdinalSyntaxError, Underflow

Term = tuple["Ordinal", int]


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """Hereditary Cantor normal form; ``terms`` must already be normalized."""

    terms: tuple[Term, ...] = ()

    def __lt__(self, other: "Ordinal") -> bool:
        return compare(self, other) < 0

    def __add__(self, other: "Ordinal") -> "Ordinal":
        return add(self, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return show(self)

    def __repr__(self) -> str:
        return f"Ordinal<{show(self)}>"

    @property
    def leading_exponent(self) -> "Ordinal":
        return self.terms[0][0] if self.terms else ZERO

    @property
    def last_exponent(self) -> "Ordinal":
        return self.terms[-1][0] if self.terms else ZERO


ZERO = Ordinal()


def nat(k: int) -> Ordinal:
    """The finite ordinal k >= 0."""
    if k < 0:
        raise ValueError("ordinals are nonnegative")
    return Ordinal(((ZERO, k),)) if k else ZERO


ONE = nat(1)


def w_pow(exponent: Ordinal, coefficient: int = 1) -> Ordinal:
    """w^exponent * coefficient."""
    if coefficient < 0:
        raise ValueError("coefficient must be nonnegative")
    return Ordinal(((exponent, coefficient),)) if coefficient else ZERO


OMEGA = w_pow(ONE)


def compare(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1: lexicographic comparison of normal-form term lists."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        r = compare(ea, eb)
        if r:
            return r
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) == len(b.terms):
        return 0
    return -1 if len(a.terms) < len(b.terms) else 1


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum: terms of a below b's leading exponent are absorbed."""
    if not b.terms:
        return a
    if not a.terms:
        return b
    head_exp, head_coef = b.terms[0]
    keep = []
    merged = 0
    for e, c in a.terms:
        r = compare(e, head_exp)
        if r > 0:
            keep.append((e, c))
        else:
            if r == 0:
                merged = c
            break
    return Ordinal(tuple(keep) + ((head_exp, head_coef + merged),) + b.terms[1:])


def sub(a: Ordinal, b: Ordinal) -> Ordinal:
    """Left subtraction: the unique c with add(a, c) == b; needs a <= b."""
    i = 0
    while i < len(a.terms) and i < len(b.terms):
        (ea, ca), (eb, cb) = a.terms[i], b.terms[i]
        r = compare(ea, eb)
        if r < 0:
            # a continues below b's term, so b's term swallows the rest of a
            return Ordinal(b.terms[i:])
        if r > 0:
            raise Underflow(f"{a} > {b}")
        if ca != cb:
            if ca < cb:
                return Ordinal(((eb, cb - ca),) + b.terms[i + 1 :])
            raise Underflow(f"{a} > {b}")
        i += 1
    if i == len(a.terms):
        return Ordinal(b.terms[i:])
    raise Underflow(f"{a} > {b}")


def divmod_omega_pow(b: Ordinal, beta: Ordinal) -> tuple[Ordinal, Ordinal]:
    """(q, r) with w^beta * q + r == b, r < w^beta, q maximal."""
    hi: list[Term] = []
    lo: list[Term] = []
    for e, c in b.terms:
        if compare(e, beta) >= 0:
            hi.append((sub(beta, e), c))
        else:
            lo.append((e, c))
    return Ordinal(tuple(hi)), Ordinal(tuple(lo))


def omega_pow_mul(beta: Ordinal, q: Ordinal) -> Ordinal:
    """w^beta * q, by left distribution over q's normal form."""
    return Ordinal(tuple((add(beta, e), c) for e, c in q.terms))


def point_rank(x: Ordinal) -> Ordinal:
    """Cantor-Bendixson rank of the point x: its least exponent (0 for 0)."""
    return x.last_exponent


def is_limit(x: Ordinal) -> bool:
    return bool(x.terms) and x.terms[-1][0] != ZERO


def is_successor(x: Ordinal) -> bool:
    return bool(x.terms) and x.terms[-1][0] == ZERO


def successor(x: Ordinal) -> Ordinal:
    return add(x, ONE)


def predecessor(x: Ordinal) -> Ordinal:
    """The y with y + 1 == x; only successors have one."""
    if not is_successor(x):
        raise ValueError(f"{x} is not a successor")
    e, c = x.terms[-1]
    head = x.terms[:-1]
    return Ordinal(head + ((e, c - 1),) if c > 1 else head)


def as_int(x: Ordinal) -> int:
    """The integer value of a finite ordinal."""
    if not x.terms:
        return 0
    if len(x.terms) == 1 and x.terms[0][0] == ZERO:
        return x.terms[0][1]
    raise ValueError(f"{x} is infinite")


def is_finite(x: Ordinal) -> bool:
    return not x.terms or (len(x.terms) == 1 and x.terms[0][0] == ZERO)


def fundamental_seq(x: Ordinal, k: int) -> Ordinal:
    """k-th member of the canonical increasing sequence with supremum x.

    Standard assignment: (g + w^(d+1))[k] = g + w^d*k and
    (g + w^e)[k] = g + w^(e[k]) for limit exponents e.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_limit(x):
        raise NotALimit(f"{x} is not a limit ordinal")
    head = x.terms[:-1]
    e, c = x.terms[-1]
    if c > 1:
        head = head + ((e, c - 1),)
    if is_successor(e):
        d = predecessor(e)
        return Ordinal(head + ((d, k),))
    return Ordinal(head + ((fundamental_seq(e, k), 1),))


# ---------------------------------------------------------------------------
# text notation
#
#   ord  := "0" | term ("+" term)*
#   term := nat | "w" pow? coef?
#   pow  := "^" atom        atom := nat | "w" | "(" ord ")"
#   coef := "*" nat         nat  := [1-9][0-9]*
#
# The parser is lenient: non-canonical sums ("w + w^2"), zero naturals and
# zero coefficients are accepted and normalized away.  The printer always
# emits canonical form: strictly decreasing exponents, "^1" and "*1"
# omitted, no "+0".
# ---------------------------------------------------------------------------


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("nat", int(text[i:j]), i))
            i = j
            continue
        kind = {"w": "w", "+": "+", "*": "*", "^": "^", "(": "(", ")": ")"}.get(ch)
        if kind is None:
            raise OrdinalSyntaxError(f"unexpected character {ch!r}", i)
        toks.append((kind, 0, i))
        i += 1
    toks.append(("end", 0, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> str:
        return self.toks[self.pos][0]

    def take(self, kind: str) -> tuple[str, int, int]:
        tok = self.toks[self.pos]
        if tok[0] != kind:
            raise OrdinalSyntaxError(f"expected {kind}, found {tok[0]}", tok[2])
        self.pos += 1
        return tok

    def ordinal(self) -> Ordinal:
        total = self.term()
        while self.peek() == "+":
            self.take("+")
            total = add(total, self.term())
        return total

    def term(self) -> Ordinal:
        if self.peek() == "nat":
            return nat(self.take("nat")[1])
        self.take("w")
        exponent = ONE
        if self.peek() == "^":
            self.take("^")
            exponent = self.atom()
        coefficient = 1
        if self.peek() == "*":
            self.take("*")
            coefficient = self.take("nat")[1]
        return w_pow(exponent, coefficient)

    def atom(self) -> Ordinal:
        kind = self.peek()
        if kind == "nat":
            return nat(self.take("nat")[1])
        if kind == "w":
            self.take("w")
            return OMEGA
        self.take("(")
        value = self.ordinal()
        self.take(")")
        return value


def parse(text: str) -> Ordinal:
    """Parse ordinal notation; normalizes non-canonical sums."""
    p = _Parser(text)
    value = p.ordinal()
    p.take("end")
    return value


def _show_exponent(e: Ordinal) -> str:
    if e == ONE:
        return ""
    if is_finite(e) or e == OMEGA:
        return f"^{show(e)}"
    return f"^({show(e)})"


def show(x: Ordinal) -> str:
    """Canonical text form; inverse of parse."""
    if not x.terms:
        return "0"
    parts = []
    for e, c in x.terms:
        if e == ZERO:
            parts.append(str(c))
        else:
            coef = f"*{c}" if c != 1 else ""
            parts.append(f"w{_show_exponent(e)}{coef}")
    return "+".join(parts)
