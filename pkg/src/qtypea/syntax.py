"""Tiny expression parser for the textual surfaces.

Grammar: sums of products, with '*' optional (juxtaposition
multiplies), '^' for integer powers, '/' for division by invertible
scalars, and parentheses.  Atoms are integers, the scalar variable q or
z, and indexed generators x[r,s], xt[r,s], chi[c1,...,cn].  Errors
carry the character position.
"""

from __future__ import annotations

from . import scalars
from .weights import Weight


class ExprSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__("parse error at position %d: %s" % (pos, message))
        self.pos = pos


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "[],+-*/()^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError("unexpected character %r" % ch, i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Pratt-style parser over a caller-supplied element algebra.

    ops must provide: integer(c), variable(), generator(name, indices,
    pos), mul(a, b), add(a, b), neg(a), divide(a, b, pos), power(a, k,
    pos).
    """

    def __init__(self, text, ops):
        self.tokens = _tokenize(text)
        self.k = 0
        self.ops = ops

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise ExprSyntaxError("expected %r, found %r" % (kind, tok[1]),
                                  tok[2])
        self.k += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError("trailing input %r" % (tok[1],), tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = self.ops.add(value, rhs if op == "+" else self.ops.neg(rhs))
        return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] in ("*", "/"):
                op = self.take()[0]
                rhs = self.factor()
                if op == "*":
                    value = self.ops.mul(value, rhs)
                else:
                    value = self.ops.divide(value, rhs, tok[2])
            elif tok[0] in ("int", "name", "("):
                value = self.ops.mul(value, self.factor())
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok[0] == "-":
            self.take()
            return self.ops.neg(self.factor())
        value = self.atom()
        while self.peek()[0] == "^":
            pos = self.take()[2]
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            k = self.take("int")[1]
            value = self.ops.power(value, sign * k, pos)
        return value

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            return self.ops.integer(tok[1])
        if tok[0] == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok[0] == "name":
            name = tok[1]
            if self.peek()[0] == "[":
                self.take("[")
                indices = []
                negative = False
                while True:
                    nxt = self.take()
                    if nxt[0] == "-":
                        negative = True
                        continue
                    if nxt[0] != "int":
                        raise ExprSyntaxError("expected an integer index",
                                              nxt[2])
                    indices.append(-nxt[1] if negative else nxt[1])
                    negative = False
                    sep = self.take()
                    if sep[0] == "]":
                        break
                    if sep[0] != ",":
                        raise ExprSyntaxError("expected ',' or ']'", sep[2])
                return self.ops.generator(name, indices, tok[2])
            return self.ops.variable(name, tok[2])
        raise ExprSyntaxError("unexpected token %r" % (tok[1],), tok[2])


class _ScalarOps:
    def __init__(self, order):
        self.order = order
        self.varname = "q" if order is None else "z"

    def integer(self, c):
        return scalars.integer(c, self.order)

    def variable(self, name, pos):
        if name != self.varname:
            raise ExprSyntaxError(
                "unknown variable %r (the scalar variable here is %r)"
                % (name, self.varname), pos)
        return scalars.q_power(1, self.order)

    def generator(self, name, indices, pos):
        raise ExprSyntaxError("no generator %r in a scalar expression" % name,
                              pos)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def divide(self, a, b, pos):
        if b.is_zero():
            raise ExprSyntaxError("division by zero", pos)
        return a / b

    def power(self, a, k, pos):
        return a ** k


def parse_scalar(text, order=None):
    return _Parser(text, _ScalarOps(order)).parse()


class _XiOps(_ScalarOps):
    def __init__(self, n, order):
        super().__init__(order)
        self.n = n
        self.tilde = None

    def _lift(self, value):
        from .qmatrix import XiPoly
        if isinstance(value, XiPoly):
            return value
        tilde = bool(self.tilde)
        return XiPoly(self.n, {(): value}, self.order, tilde)

    def generator(self, name, indices, pos):
        from .qmatrix import XiPoly
        if name not in ("x", "xt"):
            raise ExprSyntaxError("unknown generator %r" % name, pos)
        tilde = name == "xt"
        if self.tilde is None:
            self.tilde = tilde
        elif self.tilde != tilde:
            raise ExprSyntaxError("cannot mix x[..] and xt[..] generators",
                                  pos)
        if len(indices) != 2:
            raise ExprSyntaxError("generator needs two indices", pos)
        r, s = indices
        try:
            return XiPoly.generator(r, s, self.n, self.order, tilde)
        except ValueError as exc:
            raise ExprSyntaxError(str(exc), pos)

    def add(self, a, b):
        from .qmatrix import XiPoly
        if isinstance(a, XiPoly) or isinstance(b, XiPoly):
            return self._lift(a) + self._lift(b)
        return a + b

    def neg(self, a):
        from .qmatrix import XiPoly
        if isinstance(a, XiPoly):
            return a.scale(scalars.integer(-1, self.order))
        return -a

    def mul(self, a, b):
        from .qmatrix import XiPoly
        if isinstance(a, XiPoly) or isinstance(b, XiPoly):
            return self._lift(a) * self._lift(b)
        return a * b

    def divide(self, a, b, pos):
        from .qmatrix import XiPoly
        if isinstance(b, XiPoly):
            raise ExprSyntaxError("can only divide by scalars", pos)
        if b.is_zero():
            raise ExprSyntaxError("division by zero", pos)
        if isinstance(a, XiPoly):
            return a.scale(b.inverse())
        return a / b

    def power(self, a, k, pos):
        from .qmatrix import XiPoly
        if isinstance(a, XiPoly):
            if k < 0:
                raise ExprSyntaxError("negative powers of generators", pos)
            out = XiPoly.one(self.n, self.order, a.tilde)
            for _ in range(k):
                out = out * a
            return out
        return a ** k


def parse_xi(text, n, order=None):
    """Parse an x[..]/xt[..] expression; returns a XiPoly."""
    from .qmatrix import XiPoly
    ops = _XiOps(n, order)
    value = _Parser(text, ops).parse()
    if not isinstance(value, XiPoly):
        value = ops._lift(value)
    return value


class _ChiOps(_ScalarOps):
    def __init__(self, n, order):
        super().__init__(order)
        self.n = n

    def _lift(self, value):
        from .invariants import GroupAlgebraElement
        if isinstance(value, GroupAlgebraElement):
            return value
        return GroupAlgebraElement(self.n, {(0,) * self.n: value}, self.order)

    def generator(self, name, indices, pos):
        from .invariants import GroupAlgebraElement
        if name != "chi":
            raise ExprSyntaxError("unknown generator %r" % name, pos)
        if len(indices) != self.n:
            raise ExprSyntaxError(
                "chi needs %d coordinates, got %d" % (self.n, len(indices)),
                pos)
        return GroupAlgebraElement.chi(Weight(indices), self.order)

    def add(self, a, b):
        from .invariants import GroupAlgebraElement
        if isinstance(a, GroupAlgebraElement) or isinstance(b, GroupAlgebraElement):
            return self._lift(a) + self._lift(b)
        return a + b

    def neg(self, a):
        from .invariants import GroupAlgebraElement
        if isinstance(a, GroupAlgebraElement):
            return a.scale(scalars.integer(-1, self.order))
        return -a

    def mul(self, a, b):
        from .invariants import GroupAlgebraElement
        if isinstance(a, GroupAlgebraElement) or isinstance(b, GroupAlgebraElement):
            return self._lift(a) * self._lift(b)
        return a * b

    def divide(self, a, b, pos):
        from .invariants import GroupAlgebraElement
        if isinstance(b, GroupAlgebraElement):
            raise ExprSyntaxError("can only divide by scalars", pos)
        if b.is_zero():
            raise ExprSyntaxError("division by zero", pos)
        if isinstance(a, GroupAlgebraElement):
            return a.scale(b.inverse())
        return a / b

    def power(self, a, k, pos):
        from .invariants import GroupAlgebraElement
        if isinstance(a, GroupAlgebraElement):
            if k < 0:
                raise ExprSyntaxError("negative powers of chi-elements", pos)
            out = self._lift(scalars.one(self.order))
            for _ in range(k):
                out = out * a
            return out
        return a ** k


def parse_chi(text, n, order=None):
    """Parse a chi[..] expression; returns a GroupAlgebraElement."""
    ops = _ChiOps(n, order)
    value = _Parser(text, ops).parse()
    from .invariants import GroupAlgebraElement
    if not isinstance(value, GroupAlgebraElement):
        value = ops._lift(value)
    return value
