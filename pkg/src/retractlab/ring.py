"""Canonical arithmetic in mixed Laurent/polynomial rings.

Elements of R[x1^±,...,xd^±, x_{d+1},...,xn] are kept in a canonical term
form: no zero coefficients, pairwise distinct exponent vectors, terms sorted
in descending graded-lex order.  Exponents are dense integer tuples of
length n; entries past the Laurent block must be nonnegative.
"""


class RingMismatchError(ValueError):
    pass


class NonUnitError(ValueError):
    pass


class RingSignature:
    """The ambient ring: n named variables, the first `laurent` of them
    invertible, over an exact coefficient domain."""

    __slots__ = ("names", "laurent", "domain")

    def __init__(self, names, laurent, domain):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be pairwise distinct")
        if not 0 <= laurent <= len(names):
            raise ValueError("laurent block size out of range")
        self.names = names
        self.laurent = laurent
        self.domain = domain

    @property
    def n(self):
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, RingSignature)
                and self.names == other.names
                and self.laurent == other.laurent
                and self.domain == other.domain)

    def __hash__(self):
        return hash((self.names, self.laurent, self.domain))

    def __repr__(self):
        parts = [name + "^±" if i < self.laurent else name
                 for i, name in enumerate(self.names)]
        return "%s[%s]" % (self.domain.name(), ",".join(parts))

    def check_exponent(self, exp):
        if len(exp) != self.n:
            raise ValueError("exponent length %d != %d variables" % (len(exp), self.n))
        for i in range(self.laurent, self.n):
            if exp[i] < 0:
                raise ValueError(
                    "negative exponent on polynomial variable %s" % self.names[i])

    # -- element constructors ------------------------------------------------

    def zero(self):
        return MixedPoly(self, ())

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.domain.coerce(c)
        if self.domain.is_zero(c):
            return MixedPoly(self, ())
        return MixedPoly(self, (((0,) * self.n, c),))

    def variable(self, i):
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.n)), 1)

    def monomial(self, exp, coeff=1):
        return MixedPoly(self, ((tuple(exp), self.domain.coerce(coeff)),))

    def from_terms(self, terms):
        """Canonicalize an arbitrary (exponent, coefficient) sequence."""
        acc = {}
        for exp, c in terms:
            exp = tuple(exp)
            c = self.domain.coerce(c)
            if exp in acc:
                acc[exp] = self.domain.add(acc[exp], c)
            else:
                acc[exp] = c
        return MixedPoly(self, tuple(
            (e, c) for e, c in acc.items() if not self.domain.is_zero(c)))


def _term_key(exp):
    # graded-lex: total degree first, then lexicographic on the entries
    return (sum(exp), exp)


class MixedPoly:
    """An element of a mixed Laurent/polynomial ring in canonical term form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        for exp, c in terms:
            ring.check_exponent(exp)
            if ring.domain.is_zero(c):
                raise ValueError("zero coefficient in term list")
        self.ring = ring
        self.terms = tuple(sorted(terms, key=lambda t: _term_key(t[0]), reverse=True))

    def __eq__(self, other):
        return (isinstance(other, MixedPoly)
                and self.ring == other.ring and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.terms))

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1
                                  and all(e == 0 for e in self.terms[0][0]))

    def constant_value(self):
        if self.is_zero():
            return self.ring.domain.zero()
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self.terms[0][1]

    def _require_same_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("operands live in different rings")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        self._require_same_ring(other)
        return self.ring.from_terms(self.terms + other.terms)

    def __neg__(self):
        dom = self.ring.domain
        return MixedPoly(self.ring, tuple((e, dom.neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._require_same_ring(other)
        dom = self.ring.domain
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                c = dom.mul(c1, c2)
                if e in acc:
                    acc[e] = dom.add(acc[e], c)
                else:
                    acc[e] = c
        return MixedPoly(self.ring, tuple(
            (e, c) for e, c in acc.items() if not dom.is_zero(c)))

    def scale(self, c):
        c = self.ring.domain.coerce(c)
        dom = self.ring.domain
        if dom.is_zero(c):
            return self.ring.zero()
        return MixedPoly(self.ring, tuple((e, dom.mul(k, c)) for e, k in self.terms))

    def __pow__(self, k):
        if k < 0:
            return self.invert_unit() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            if base_needed:
                base = base * base
            k >>= 1
        return result

    # -- units ---------------------------------------------------------------

    def is_unit(self):
        """Return (scalar, exponent) with self = scalar·x^exponent when self
        is a unit of the ring, else None.  Units are unit scalars times
        monomials supported on the Laurent block."""
        if len(self.terms) != 1:
            return None
        exp, c = self.terms[0]
        if not self.ring.domain.is_unit(c):
            return None
        if any(exp[i] != 0 for i in range(self.ring.laurent, self.ring.n)):
            return None
        return (c, exp)

    def invert_unit(self):
        u = self.is_unit()
        if u is None:
            raise NonUnitError("not a unit: %s" % self)
        c, exp = u
        return self.ring.monomial(tuple(-e for e in exp), self.ring.domain.invert(c))

    # -- homomorphisms and calculus ------------------------------------------

    def substitute(self, images, target_ring=None):
        """Apply the R-algebra homomorphism x_i ↦ images[i].

        Images of Laurent-block variables must be units wherever a negative
        exponent needs inverting.
        """
        if len(images) != self.ring.n:
            raise ValueError("expected %d images, got %d" % (self.ring.n, len(images)))
        if target_ring is None:
            if images:
                target_ring = images[0].ring
            else:
                target_ring = self.ring
        for img in images:
            if img.ring != target_ring:
                raise RingMismatchError("images live in different rings")
        power_cache = {}

        def var_power(i, e):
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        result = target_ring.zero()
        for exp, c in self.terms:
            term = target_ring.constant(c)
            for i, e in enumerate(exp):
                if e:
                    term = term * var_power(i, e)
            result = result + term
        return result

    def partial_derivative(self, i):
        """Formal partial derivative with respect to variable i (0-indexed)."""
        if not 0 <= i < self.ring.n:
            raise ValueError("variable index out of range")
        dom = self.ring.domain
        out = []
        for exp, c in self.terms:
            e = exp[i]
            if e == 0:
                continue
            k = dom.mul(c, dom.from_int(e))
            if dom.is_zero(k):
                continue
            new = list(exp)
            new[i] = e - 1
            out.append((tuple(new), k))
        return self.ring.from_terms(out)

    def evaluate(self, point):
        """Exact value at a point; Laurent-block coordinates must be nonzero."""
        if len(point) != self.ring.n:
            raise ValueError("expected %d coordinates" % self.ring.n)
        dom = self.ring.domain
        point = [dom.coerce(v) for v in point]
        total = dom.zero()
        for exp, c in self.terms:
            val = c
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                if e < 0 and dom.is_zero(point[i]):
                    raise ZeroDivisionError(
                        "zero substituted into negative exponent of %s"
                        % self.ring.names[i])
                val = dom.mul(val, dom.pow(point[i], e))
            total = dom.add(total, val)
        return total

    # -- printing ------------------------------------------------------------

    def _monomial_str(self, exp):
        parts = []
        for name, e in zip(self.ring.names, exp):
            if e == 0:
                continue
            parts.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        dom = self.ring.domain
        pieces = []
        for exp, c in self.terms:
            mono = self._monomial_str(exp)
            cs = dom.format(c)
            if not mono:
                piece = cs
            elif cs == "1":
                piece = mono
            elif cs == "-1":
                piece = "-" + mono
            else:
                piece = "%s*%s" % (cs, mono)
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return "<%s in %r>" % (self, self.ring)
