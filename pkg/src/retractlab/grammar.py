"""Problem-file grammar and report serialization.

Grammar:

    ring QQ[x1^±,x2^±,x3]     # domain QQ | ZZ | GF(p); ^± marks Laurent vars
    x1 -> x1*x2               # one map line per declared variable
    x2 -> 1
    x3 -> x3 + x2 - 1

Expressions use + - * ^ ( ), integer or a/b coefficients, and negative
exponents only on Laurent variables.  Whitespace-insensitive; comments start
with '#'.  The ASCII spelling ^+- is accepted for ^±; the printer always
emits ^±.
"""

import json
import re

from .domains import QQ, ZZ, GF
from .endo import Endomorphism
from .ring import RingSignature, NonUnitError


class ParseError(ValueError):

    def __init__(self, message, line=None, col=None):
        loc = ""
        if line is not None:
            loc = " (line %d%s)" % (line, ", col %d" % col if col is not None else "")
        super().__init__(message + loc)
        self.line = line
        self.col = col


_HEADER_RE = re.compile(
    r"^\s*ring\s+(QQ|ZZ|GF\(\s*(\d+)\s*\))\s*\[(.*)\]\s*$")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _parse_header(line, lineno):
    m = _HEADER_RE.match(line)
    if not m:
        raise ParseError("expected 'ring <domain>[vars]' header", lineno)
    if m.group(1) == "QQ":
        domain = QQ
    elif m.group(1) == "ZZ":
        domain = ZZ
    else:
        p = int(m.group(2))
        try:
            domain = GF(p)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    names = []
    laurent = 0
    seen_plain = False
    for part in m.group(3).split(","):
        part = part.strip()
        if not part:
            raise ParseError("empty variable declaration", lineno)
        if part.endswith("^±") or part.endswith("^+-"):
            name = part[:-2] if part.endswith("^±") else part[:-3]
            name = name.strip()
            if seen_plain:
                raise ParseError(
                    "Laurent variables must precede plain ones", lineno)
            laurent += 1
        else:
            name = part
            seen_plain = True
        if not _IDENT_RE.fullmatch(name):
            raise ParseError("bad variable name %r" % name, lineno)
        names.append(name)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", lineno)
    return RingSignature(names, laurent, domain)


# -- expression tokenizer / parser -------------------------------------------

class _Token:
    __slots__ = ("kind", "value", "col")

    def __init__(self, kind, value, col):
        self.kind = kind
        self.value = value
        self.col = col


def _tokenize(text, lineno):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        col = i + 1
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = None
            if j < len(text) and text[j] == "/":
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("expected digits after '/'", lineno, j + 2)
                den = int(text[j + 1:k])
                j = k
            tokens.append(_Token("number", (num, den), col))
            i = j
        elif c.isalpha() or c == "_":
            m = _IDENT_RE.match(text, i)
            tokens.append(_Token("ident", m.group(0), col))
            i = m.end()
        elif c in "+-*^()":
            tokens.append(_Token(c, c, col))
            i += 1
        else:
            raise ParseError("unexpected character %r" % c, lineno, col)
    tokens.append(_Token("end", None, len(text) + 1))
    return tokens


class _ExprParser:

    def __init__(self, ring, text, lineno):
        self.ring = ring
        self.lineno = lineno
        self.tokens = _tokenize(text, lineno)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError("expected %s, found %r" % (kind, tok.value),
                             self.lineno, tok.col)
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        tail = self.peek()
        if tail.kind != "end":
            raise ParseError("unexpected trailing %r" % tail.value,
                             self.lineno, tail.col)
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek().kind == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek().kind == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind != "^":
            return base
        caret = self.take()
        sign = 1
        if self.peek().kind == "-":
            self.take()
            sign = -1
        num, den = self.take("number").value
        if den is not None:
            raise ParseError("exponent must be an integer", self.lineno, caret.col)
        if sign < 0 and base.is_unit() is None:
            ring = self.ring
            if len(base.terms) == 1 and any(
                    base.terms[0][0][i] for i in range(ring.laurent, ring.n)):
                bad = next(ring.names[i] for i in range(ring.laurent, ring.n)
                           if base.terms[0][0][i])
                raise ParseError(
                    "negative exponent on polynomial variable %s" % bad,
                    self.lineno, caret.col)
        try:
            return base ** (sign * num)
        except (NonUnitError, ValueError) as exc:
            raise ParseError(str(exc), self.lineno, caret.col) from None

    def atom(self):
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            num, den = tok.value
            try:
                c = self.ring.domain.from_fraction(num, 1 if den is None else den)
            except ValueError as exc:
                raise ParseError(str(exc), self.lineno, tok.col) from None
            return self.ring.constant(c)
        if tok.kind == "ident":
            self.take()
            if tok.value not in self.ring.names:
                raise ParseError("undeclared identifier %r" % tok.value,
                                 self.lineno, tok.col)
            return self.ring.variable(self.ring.names.index(tok.value))
        if tok.kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ParseError("expected a term, found %r" % tok.value,
                         self.lineno, tok.col)


def parse_expression(ring, text, lineno=1):
    return _ExprParser(ring, text, lineno).parse()


def parse_problem(text):
    """Parse a problem file into (RingSignature, Endomorphism, options)."""
    ring = None
    images = {}
    options = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            ring = _parse_header(line, lineno)
            continue
        if line.startswith("option "):
            parts = line.split(None, 2)
            if len(parts) < 3:
                raise ParseError("option needs a name and a value", lineno)
            options[parts[1]] = parts[2]
            continue
        if "->" not in line:
            raise ParseError("expected 'var -> expression'", lineno)
        lhs, rhs = line.split("->", 1)
        name = lhs.strip()
        if name not in ring.names:
            raise ParseError("undeclared identifier %r" % name, lineno)
        if name in images:
            raise ParseError("duplicate map line for %r" % name, lineno)
        images[name] = parse_expression(ring, rhs, lineno)
    if ring is None:
        raise ParseError("missing ring header")
    missing = [nm for nm in ring.names if nm not in images]
    if missing:
        raise ParseError("missing map line for %s" % ", ".join(missing))
    endo = Endomorphism(ring, [images[nm] for nm in ring.names])
    return ring, endo, options


# -- printing ----------------------------------------------------------------

def render_problem(endo, header_comments=()):
    """Canonical problem-file text for an endomorphism."""
    ring = endo.ring
    lines = ["# %s" % c for c in header_comments]
    decls = [name + ("^±" if i < ring.laurent else "")
             for i, name in enumerate(ring.names)]
    lines.append("ring %s[%s]" % (ring.domain.name(), ",".join(decls)))
    for name, img in zip(ring.names, endo.images):
        lines.append("%s -> %s" % (name, img))
    return "\n".join(lines) + "\n"


def report_to_dict(report):
    ring = report.ring
    dom = ring.domain
    verdict = {"tag": report.classification.tag}
    verdict.update(report.classification.params)
    trdeg = report.trdeg if isinstance(report.trdeg, int) else list(report.trdeg)
    return {
        "n": ring.n,
        "d": ring.laurent,
        "domain": dom.name(),
        "r": report.r,
        "trdeg": trdeg,
        "classification": verdict,
        "rationality": report.rationality,
        "yVariables": [str(ring.monomial(y.exponent)) for y in report.y_variables],
        "normalizers": [dom.format(y.normalizer) for y in report.y_variables],
        "yKinds": [y.kind for y in report.y_variables],
        "fixedBasis": [list(b) for b in report.decomposition.fixed_basis],
        "kernelBasis": [list(b) for b in report.decomposition.kernel_basis],
        "Y": [list(r) for r in report.decomposition.Y.entries],
        "T": [list(r) for r in report.decomposition.T.entries],
        "generators": [str(g) for g in report.generators],
        "quotientGenerators": [str(g) for g in report.quotient_generators],
        "certificates": dict(report.certificates),
    }


def render_report(report, fmt="text"):
    obj = report_to_dict(report)
    if fmt == "json":
        return json.dumps(obj, indent=2) + "\n"
    lines = []
    lines.append("ring           %r" % report.ring)
    lines.append("unit rank r    %d" % obj["r"])
    lines.append("trdeg          %s" % (obj["trdeg"],))
    lines.append("classification %r" % report.classification)
    lines.append("rationality    %s" % obj["rationality"])
    for y, lam, kind in zip(obj["yVariables"], obj["normalizers"], obj["yKinds"]):
        lines.append("y (%s)%s %s   [normalizer %s]"
                     % (kind, " " * (6 - len(kind)), y, lam))
    lines.append("generators     %s" % "; ".join(obj["generators"]) if
                 obj["generators"] else "generators     (none)")
    lines.append("certificates   %s" % ", ".join(
        "%s=%s" % (k, "ok" if v else "FAIL")
        for k, v in obj["certificates"].items()))
    return "\n".join(lines) + "\n"
