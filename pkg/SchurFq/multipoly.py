# -*- coding: utf-8 -*-
# ==============================================================================
#   Copyright 2026 AlphaOmega Technology
#
#   Licensed under the AlphaOmega Technology Open License Version 1.0
#   You may not use this file except in compliance with this License.
#   You may obtain a copy of the License at
#
#       http://www.alphaomega-technology.com.au/license/AOT-OL/1.0
# ==============================================================================
"""
SchurFq.multipoly Module
========================

Sparse multivariate polynomials over a :class:`SchurFq.field.Field` in the
variables :math:`x_1, x_2, \\ldots`, the images of :math:`h_i` (or :math:`e_i`).

.. code-block:: python

    >>> from SchurFq.field import make_field
    >>> from SchurFq.multipoly import MultiPoly, parse, label_of
    >>> F = make_field(101)
    >>> p = parse("x5 - x2*x4", F)
    >>> p.substitute({2: 2})
    x5 - 2*x4
    >>> label_of(parse("x8 - x5^2", F))
    8

Terms are printed in lexicographic order on the exponents read from the highest
variable down, so the label variable of an entry always prints first.
"""

import re
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

try:
    from SchurFq.field import Field, FieldElement
except ImportError:
    from .field import Field, FieldElement

Monomial = Tuple[Tuple[int, int], ...]
Label = Optional[int]

UNDEFINED: Label = None


class NotLabelForm(ValueError):
    pass


class PolySyntaxError(SyntaxError):
    pass


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class MultiPoly:
    """Polynomial with coefficients in a finite field

    Values are immutable, arithmetic returns new polynomials in canonical form,
    no zero coefficient is ever stored.

    Parameters
    ----------
    field: Field
        The ambient field.
    terms: mapping of monomial to int
        Monomials are tuples of ``(variable, exponent)`` pairs in increasing
        variable order, ``()`` is the constant monomial.
    """

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: Field, terms: Optional[Mapping[Monomial, FieldElement]] = None):
        self.field = field
        self.terms: Dict[Monomial, FieldElement] = {
            m: c for m, c in (terms or {}).items() if c != 0
        }
        self._hash = None

    @classmethod
    def const(cls, field: Field, c: FieldElement) -> "MultiPoly":
        return cls(field, {(): c})

    @classmethod
    def var(cls, field: Field, i: int) -> "MultiPoly":
        if i < 1:
            raise ValueError("variables are indexed from 1, got {0:d}".format(i))
        return cls(field, {((i, 1),): 1})

    @classmethod
    def zero(cls, field: Field) -> "MultiPoly":
        return cls(field)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.field != self.field:
                raise TypeError(
                    "cannot combine polynomials over {0!r} and {1!r}".format(self.field, other.field)
                )
            return other
        if isinstance(other, int):
            return MultiPoly.const(self.field, self.field.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        add = self.field.add
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = add(terms.get(m, 0), c)
        return MultiPoly(self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return MultiPoly(self.field, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        add, mul = self.field.add, self.field.mul
        terms: Dict[Monomial, FieldElement] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = add(terms.get(m, 0), mul(c1, c2))
        return MultiPoly(self.field, terms)

    __rmul__ = __mul__

    def scale(self, c: FieldElement) -> "MultiPoly":
        mul = self.field.mul
        return MultiPoly(self.field, {m: mul(c, v) for m, v in self.terms.items()})

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.field, self.field.from_int(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_term(self) -> FieldElement:
        return self.terms.get((), 0)

    def variables(self) -> Tuple[int, ...]:
        return tuple(sorted({v for m in self.terms for v, _ in m}))

    def max_variable(self) -> int:
        """Highest variable index present, 0 for constants"""
        return max((m[-1][0] for m in self.terms if m), default=0)

    def degree_in(self, i: int) -> int:
        return max((dict(m).get(i, 0) for m in self.terms), default=0)

    def coefficient_of(self, i: int) -> "MultiPoly":
        """The polynomial multiplying :math:`x_i` when `self` is affine in :math:`x_i`"""
        if self.degree_in(i) > 1:
            raise ValueError("x{0:d} appears nonlinearly".format(i))
        terms = {}
        for m, c in self.terms.items():
            exps = dict(m)
            if exps.pop(i, 0):
                terms[tuple(sorted(exps.items()))] = c
        return MultiPoly(self.field, terms)

    def substitute(self, bindings: Mapping[int, FieldElement]) -> "MultiPoly":
        """Partial evaluation, variables absent from `bindings` stay symbolic"""
        f = self.field
        terms: Dict[Monomial, FieldElement] = {}
        for m, c in self.terms.items():
            rest = []
            for v, e in m:
                if v in bindings:
                    c = f.mul(c, f.pow(bindings[v], e))
                else:
                    rest.append((v, e))
            key = tuple(rest)
            terms[key] = f.add(terms.get(key, 0), c)
        return MultiPoly(f, terms)

    def evaluate(self, assignment: Union[Sequence[FieldElement], Mapping[int, FieldElement]]) -> FieldElement:
        """Value at a full assignment, ``assignment[i - 1]`` (or ``assignment[i]`` for a mapping) is :math:`x_i`"""
        f = self.field
        if isinstance(assignment, Mapping):
            value = assignment.__getitem__
        else:
            value = lambda v: assignment[v - 1]
        total = 0
        for m, c in self.terms.items():
            for v, e in m:
                c = f.mul(c, f.pow(value(v), e))
            total = f.add(total, c)
        return total

    def _order(self):
        top = self.max_variable()

        def key(item):
            exps = dict(item[0])
            return tuple(exps.get(v, 0) for v in range(top, 0, -1))

        return sorted(self.terms.items(), key=key, reverse=True)

    def render(self, name: str = "x") -> str:
        if not self.terms:
            return "0"
        f = self.field
        out = []
        for m, c in self._order():
            negative = f.k == 1 and c > f.p // 2 and f.p > 2
            mag = f.p - c if negative else c
            mono = "*".join(
                "{0:s}{1:d}".format(name, v) + ("^{0:d}".format(e) if e > 1 else "") for v, e in m
            )
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "{0:d}*{1:s}".format(mag, mono)
            if not out:
                out.append("-" + body if negative else body)
            else:
                out.append(("- " if negative else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.render()

    __repr__ = __str__


def label_of(p: MultiPoly, monic: bool = True) -> Label:
    """Label of a matrix entry

    The label of :math:`x_k - f(x_1, \\ldots, x_{k-1})` is `k`, of a nonzero constant 0,
    and of the zero polynomial :data:`UNDEFINED`. With ``monic=False`` any nonzero
    multiple :math:`c x_k` of the top variable is accepted.

    Raises
    ------
    NotLabelForm
        If the highest variable appears nonlinearly, inside a product, or (when
        `monic`) with a coefficient other than 1.
    """
    if p.is_zero():
        return UNDEFINED
    k = p.max_variable()
    if k == 0:
        return 0
    top = ((k, 1),)
    for m, c in p.terms.items():
        if m == top:
            if monic and c != 1:
                raise NotLabelForm("x{0:d} has coefficient {1:d} in {2:s}".format(k, c, str(p)))
        elif any(v == k for v, _ in m):
            raise NotLabelForm("x{0:d} does not appear linearly alone in {1:s}".format(k, str(p)))
    if top not in p.terms:
        raise NotLabelForm("x{0:d} does not appear linearly alone in {1:s}".format(k, str(p)))
    return k


# Parser for the textual form, tokens as in an expression compiler
vmatch = re.compile(r"\s*(?P<value>\d+)")
nmatch = re.compile(r"\s*[xhe]_?(?P<index>\d+)")
omatch = re.compile(r"\s*(?P<op>\*\*|[-+*/^])")
umatch = re.compile(r"\s*(?P<op>[-+])")
gsmatch = re.compile(r"\s*(\()")
gematch = re.compile(r"\s*(\))")
endmatch = re.compile(r"\s*$")

ops = {
    "+": {"prec": 3, "right": False},
    "-": {"prec": 3, "right": False},
    "*": {"prec": 2, "right": False},
    "/": {"prec": 2, "right": False},
    "^": {"prec": 1, "right": True},
    "**": {"prec": 1, "right": True},
}


class _Parser:
    def __init__(self, text: str, field: Field):
        self.__text = text
        self.__rest = text
        self.field = field

    def __next(self, expect_op):
        if endmatch.match(self.__rest):
            return None
        m = gsmatch.match(self.__rest)
        if m is not None:
            self.__rest = self.__rest[m.end():]
            return "(", "OPEN"
        m = gematch.match(self.__rest)
        if m is not None:
            self.__rest = self.__rest[m.end():]
            return ")", "CLOSE"
        if expect_op:
            m = omatch.match(self.__rest)
            if m is not None:
                self.__rest = self.__rest[m.end():]
                return m.group("op"), "OP"
        else:
            m = vmatch.match(self.__rest)
            if m is not None:
                self.__rest = self.__rest[m.end():]
                return int(m.group("value")), "VALUE"
            m = nmatch.match(self.__rest)
            if m is not None:
                self.__rest = self.__rest[m.end():]
                return int(m.group("index")), "NAME"
            m = umatch.match(self.__rest)
            if m is not None:
                self.__rest = self.__rest[m.end():]
                return "u" + m.group("op"), "UNARY"
        raise PolySyntaxError("Unable to match next token in {0:s}".format(self.__rest))

    def compile(self):
        """Shunting-yard conversion to postfix"""
        out = []
        stack = []
        expect_op = False
        token = self.__next(expect_op)
        while token is not None:
            kind = token[1]
            if kind in ("VALUE", "NAME"):
                if expect_op:
                    raise PolySyntaxError("Missing operator before {0!r}".format(token[0]))
                out.append(token)
                expect_op = True
            elif kind == "UNARY":
                stack.append(token)
            elif kind == "OPEN":
                if expect_op:
                    raise PolySyntaxError(
                        'Missing an operator before "(" in {0:s}, did you mean "*"?'.format(self.__text)
                    )
                stack.append(token)
            elif kind == "CLOSE":
                while stack and stack[-1][1] != "OPEN":
                    out.append(stack.pop())
                if not stack:
                    raise PolySyntaxError('Encountered closing ")" without a matching opening one.')
                stack.pop()
                expect_op = True
            else:
                fn = ops[token[0]]
                while stack and stack[-1][1] in ("OP", "UNARY"):
                    top = stack[-1]
                    top_prec = 0 if top[1] == "UNARY" else ops[top[0]]["prec"]
                    # unary minus binds looser than ^ so -x1^2 is -(x1^2)
                    if top[1] == "UNARY" and fn["prec"] == 1:
                        break
                    if top_prec < fn["prec"] or (top_prec == fn["prec"] and not fn["right"]):
                        out.append(stack.pop())
                    else:
                        break
                stack.append(token)
                expect_op = False
            token = self.__next(expect_op)
        if not expect_op:
            raise PolySyntaxError("Unexpected end of expression {0!r}".format(self.__text))
        while stack:
            op = stack.pop()
            if op[1] == "OPEN":
                raise PolySyntaxError('Unclosed "(" in {0:s}'.format(self.__text))
            out.append(op)
        return out

    def evaluate(self) -> MultiPoly:
        f = self.field
        args = []
        for value, kind in self.compile():
            if kind == "VALUE":
                args.append(value)
            elif kind == "NAME":
                args.append(MultiPoly.var(f, value))
            elif kind == "UNARY":
                a = args.pop()
                args.append(-a if value == "u-" else a)
            else:
                b = args.pop()
                a = args.pop()
                args.append(self.__apply(value, a, b))
        result = args.pop()
        if isinstance(result, int):
            result = MultiPoly.const(f, f.from_int(result))
        return result

    def __apply(self, op, a, b):
        f = self.field
        if op in ("^", "**"):
            if not isinstance(b, int):
                raise PolySyntaxError("exponents must be integer literals")
            if b < 0:
                raise PolySyntaxError("negative exponent {0:d}".format(b))
            return a**b
        if isinstance(a, int) and isinstance(b, int) and op != "/":
            return {"+": a + b, "-": a - b, "*": a * b}[op]
        if op == "/":
            if isinstance(b, MultiPoly):
                if not b.is_constant():
                    raise PolySyntaxError("division by a non-constant polynomial")
                b = b.constant_term()
            else:
                b = f.from_int(b)
            if isinstance(a, int):
                a = MultiPoly.const(f, f.from_int(a))
            return a.scale(f.inv(b))
        if isinstance(a, int):
            a = MultiPoly.const(f, f.from_int(a))
        return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__}[op](b)


def parse(text: str, field: Field) -> MultiPoly:
    """Read a polynomial such as ``"x6 - x1*x5 + x1^2*x4"``

    Variables may be written ``x6``, ``x_6``, ``h6`` or ``e6``. Division is allowed
    by nonzero constants only.
    """
    return _Parser(text, field).evaluate()


def parse_all(texts: Iterable[Iterable[str]], field: Field):
    return [[parse(t, field) for t in row] for row in texts]
