"""Exact coefficient domains: rationals, integers, and prime fields.

Every coefficient is stored in a canonical form chosen by its domain:
Fraction for QQ, int for ZZ, and the least nonnegative residue for GF(p).
All arithmetic is arbitrary precision; no floats anywhere.
"""

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Domain:
    """A coefficient domain: one of rationals, integers, prime-field(p)."""

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind not in ("rationals", "integers", "prime-field"):
            raise ValueError("unknown domain kind: %r" % (kind,))
        if kind == "prime-field":
            if p is None or not _is_prime(p):
                raise ValueError("prime-field modulus must be prime, got %r" % (p,))
        elif p is not None:
            raise ValueError("modulus only makes sense for prime fields")
        self.kind = kind
        self.p = p

    @property
    def characteristic(self):
        return self.p if self.kind == "prime-field" else 0

    @property
    def is_field(self):
        return self.kind != "integers"

    @property
    def is_ufd(self):
        return True

    def __eq__(self, other):
        return isinstance(other, Domain) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == "prime-field":
            return "GF(%d)" % self.p
        return {"rationals": "QQ", "integers": "ZZ"}[self.kind]

    # -- element constructors ------------------------------------------------

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def from_int(self, k):
        return self.coerce(k)

    def from_fraction(self, num, den):
        """Build the element num/den, reducing in the domain.

        Raises ValueError when the quotient does not exist (ZZ, or den ≡ 0
        mod p).
        """
        if den == 0:
            raise ValueError("zero denominator")
        if self.kind == "rationals":
            return Fraction(num, den)
        if self.kind == "integers":
            q = Fraction(num, den)
            if q.denominator != 1:
                raise ValueError("%d/%d is not an integer" % (num, den))
            return int(q)
        d = den % self.p
        if d == 0:
            raise ValueError("denominator %d is zero mod %d" % (den, self.p))
        return (num * pow(d, -1, self.p)) % self.p

    def coerce(self, value):
        """Normalize a Python int / Fraction into this domain's canonical form."""
        if self.kind == "rationals":
            return Fraction(value)
        if self.kind == "integers":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError("%s is not an integer" % (value,))
                return int(value)
            return int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        return int(value) % self.p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        c = a + b
        return c % self.p if self.kind == "prime-field" else c

    def sub(self, a, b):
        c = a - b
        return c % self.p if self.kind == "prime-field" else c

    def mul(self, a, b):
        c = a * b
        return c % self.p if self.kind == "prime-field" else c

    def neg(self, a):
        return (-a) % self.p if self.kind == "prime-field" else -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        """True iff a lies in the unit group of the domain."""
        if self.kind == "integers":
            return a in (1, -1)
        return not self.is_zero(a)

    def invert(self, a):
        if not self.is_unit(a):
            raise ValueError("%s is not a unit in %r" % (a, self))
        if self.kind == "rationals":
            return 1 / Fraction(a)
        if self.kind == "integers":
            return a
        return pow(a, -1, self.p)

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.invert(a), -k)
        if self.kind == "prime-field":
            return pow(a, k, self.p)
        return a ** k

    # -- printing ------------------------------------------------------------

    def format(self, a):
        """Canonical string: lowest terms with positive denominator for QQ,
        least nonnegative residue for GF(p)."""
        if self.kind == "rationals":
            a = Fraction(a)
            if a.denominator == 1:
                return str(a.numerator)
            return "%d/%d" % (a.numerator, a.denominator)
        return str(a)

    def name(self):
        if self.kind == "prime-field":
            return "GF(%d)" % self.p
        return {"rationals": "QQ", "integers": "ZZ"}[self.kind]


QQ = Domain("rationals")
ZZ = Domain("integers")


def GF(p):
    return Domain("prime-field", p)
