"""The retract analysis pipeline.

From an idempotent endomorphism of R[x1^±,...,xd^±, x_{d+1},...,xn] this
module produces the new Laurent coordinates (y-variables), the generators of
the retract, the transcendence degree, a classification verdict, and a
rationality verdict, each backed by exact certificates computed inside the
call.  All checks are tolerance-zero.
"""

import random
from fractions import Fraction

from .intlinalg import decompose, solve_in_lattice
from .endo import apply, monomial_part, require_valid, is_idempotent, \
    idempotency_defect
from .ring import RingSignature


class NotIdempotentError(ValueError):
    pass


class CertificateError(RuntimeError):
    """An internal exact check failed; carries the evidence."""

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence or {}


class YVariable:
    """A new Laurent coordinate y = normalizer^-1 · x^exponent.

    Fixed coordinates satisfy phi(y) = y; killed ones satisfy phi(y) = 1
    after dividing out the normalizing unit scalar.
    """

    __slots__ = ("exponent", "normalizer", "kind", "poly")

    def __init__(self, exponent, normalizer, kind, poly):
        self.exponent = tuple(exponent)
        self.normalizer = normalizer
        self.kind = kind  # "fixed" | "killed"
        self.poly = poly  # the element of B: normalizer^-1 · x^exponent


class ClassificationVerdict:

    __slots__ = ("tag", "params")

    def __init__(self, tag, **params):
        self.tag = tag
        self.params = params

    def __eq__(self, other):
        return (isinstance(other, ClassificationVerdict)
                and self.tag == other.tag and self.params == other.params)

    def __repr__(self):
        if not self.params:
            return self.tag
        inner = ", ".join("%s=%s" % kv for kv in sorted(self.params.items()))
        return "%s(%s)" % (self.tag, inner)


class RetractReport:

    __slots__ = ("ring", "r", "decomposition", "y_variables", "generators",
                 "quotient_generators", "quotient_ring", "trdeg",
                 "classification", "rationality", "certificates")

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw.pop(name))
        if kw:
            raise TypeError("unexpected fields: %s" % sorted(kw))

    @property
    def trdeg_exact(self):
        return self.trdeg if isinstance(self.trdeg, int) else None


def compute_y_variables(phi, decomposition=None):
    """New Laurent coordinates from the unit-lattice summand decomposition.

    Verifies exactly, before returning, that phi fixes each fixed y and
    sends each normalized killed y to 1.
    """
    require_valid(phi)
    if not is_idempotent(phi):
        raise NotIdempotentError("endomorphism is not idempotent")
    ring = phi.ring
    d = ring.laurent
    if decomposition is None:
        decomposition = decompose(monomial_part(phi).matrix)
    dec = decomposition
    yvars = []
    for i, b in enumerate(dec.fixed_basis + dec.kernel_basis):
        exp = tuple(b) + (0,) * (ring.n - d)
        mono = ring.monomial(exp)
        image = apply(phi, mono)
        if i < dec.r:
            if image != mono:
                raise CertificateError(
                    "phi does not fix the fixed-lattice monomial x^%s" % (exp,),
                    {"expected": str(mono), "got": str(image)})
            yvars.append(YVariable(exp, ring.domain.one(), "fixed", mono))
        else:
            if not image.is_constant():
                raise CertificateError(
                    "phi of the kernel monomial x^%s is not a scalar" % (exp,),
                    {"got": str(image)})
            lam = image.constant_value()
            if not ring.domain.is_unit(lam):
                raise CertificateError(
                    "normalizer of x^%s is not a unit scalar" % (exp,),
                    {"got": str(image)})
            y = mono.scale(ring.domain.invert(lam))
            if apply(phi, y) != ring.one():
                raise CertificateError(
                    "normalized killed coordinate is not sent to 1",
                    {"y": str(y)})
            yvars.append(YVariable(exp, lam, "killed", y))
    return dec, yvars


def quotient_ring_signature(ring, r, kept_poly_names=None):
    """Ring of B/J: Laurent block y_1..y_r plus the original polynomial
    variables (names made collision-free)."""
    poly_names = tuple(ring.names[ring.laurent:]) if kept_poly_names is None \
        else tuple(kept_poly_names)
    names = []
    for i in range(r):
        name = "y%d" % (i + 1)
        while name in poly_names or name in names:
            name = name + "_"
        names.append(name)
    return RingSignature(tuple(names) + poly_names, r, ring.domain)


def quotient_mod_J(p, decomposition, y_variables, target=None):
    """Image of p in B/J ≅ S^[n-d], written in y-coordinates.

    Each term's Laurent exponent v is rewritten as c = T·v; coordinates
    past r are set to zero after multiplying the coefficient by the product
    of the killed normalizers raised to those coordinates.
    """
    ring = p.ring
    d = ring.laurent
    dec = decomposition
    r = dec.r
    if target is None:
        target = quotient_ring_signature(ring, r)
    dom = ring.domain
    terms = []
    for exp, coeff in p.terms:
        c = dec.y_coordinates(exp[:d]) if d else ()
        for i in range(r, d):
            lam = y_variables[i].normalizer
            coeff = dom.mul(coeff, dom.pow(lam, c[i]))
        terms.append((tuple(c[:r]) + exp[d:], coeff))
    return target.from_terms(terms)


def jacobian_rank(generators, ring):
    """Rank of the Jacobian (∂g_i/∂x_j) over the fraction field, by
    division-free elimination with exact polynomial arithmetic.

    Each row is first multiplied by a monomial clearing its Laurent
    denominators; monomials are units of the fraction field, so the rank is
    unchanged.
    """
    n = ring.n
    rows = []
    for g in generators:
        row = [g.partial_derivative(j) for j in range(n)]
        shift = [0] * n
        for entry in row:
            for exp, _ in entry.terms:
                for v in range(ring.laurent):
                    shift[v] = min(shift[v], exp[v])
        clear = ring.monomial(tuple(-s for s in shift))
        rows.append([entry * clear for entry in row])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(rows))
                    if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col].is_zero():
                continue
            factor = rows[i][col]
            rows[i] = [rows[i][j] * pivot - rows[rank][j] * factor
                       for j in range(n)]
        rank += 1
    return rank


def jacobian_rank_at_random_point(generators, ring, rng=None, retries=3):
    """Rank of the Jacobian via evaluation at random rational points
    (Laurent coordinates kept nonzero).  Evaluation can only underestimate
    the rank, so the fast path is trusted only when it reaches the
    dimension cap; otherwise it falls back to the exact computation.
    """
    if rng is None:
        rng = random.Random(0)
    n = ring.n
    entries = [[g.partial_derivative(j) for j in range(n)] for g in generators]
    cap = min(len(generators), n)
    for _ in range(retries):
        point = []
        for i in range(n):
            if i < ring.laurent:
                v = 0
                while v == 0:
                    v = rng.randint(-20, 20)
            else:
                v = rng.randint(-20, 20)
            point.append(ring.domain.from_fraction(v, rng.randint(1, 7)))
        num = [[e.evaluate(point) for e in row] for row in entries]
        if _rational_rank(num) == cap:
            return cap
    return jacobian_rank(generators, ring)


def _rational_rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return 0
    n = len(rows[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [x / inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def transcendence_degree(generators, ring, unit_rank=None):
    """Transcendence degree of the subring generated by the given elements.

    Characteristic 0: the Jacobian rank over the rational function field,
    computed exactly.  Characteristic p: the Jacobian criterion is unsound
    (inseparability), so the result is the interval [r, r + n - d], except
    that a pure Laurent ring forces the exact value r.
    """
    if not generators:
        return 0
    if ring.domain.characteristic == 0:
        return jacobian_rank(generators, ring)
    if unit_rank is None:
        raise ValueError("positive characteristic needs the unit rank r")
    if ring.laurent == ring.n:
        return unit_rank
    return (unit_rank, unit_rank + ring.n - ring.laurent)


def classify(n, d, r, trdeg, domain):
    """Classification verdict from the numeric invariants.

    trdeg may be an exact integer or an interval (lo, hi); intervals are
    classified only when the endpoints coincide.
    """
    if not 0 <= r <= d <= n:
        raise ValueError("inconsistent invariants: r=%d d=%d n=%d" % (r, d, n))
    if isinstance(trdeg, tuple):
        lo, hi = trdeg
        if lo == hi:
            trdeg = lo
        else:
            if not r <= lo <= hi <= r + n - d:
                raise ValueError("interval %r outside [r, r+n-d]" % (trdeg,))
            return ClassificationVerdict("BoundsOnly", lo=lo, hi=hi)
    if not r <= trdeg <= r + n - d:
        raise ValueError("trdeg %d outside [%d, %d]" % (trdeg, r, r + n - d))
    if trdeg == 0:
        return ClassificationVerdict("CoefficientRing")
    if trdeg == n:
        return ClassificationVerdict("WholeRing")
    if trdeg == r:
        return ClassificationVerdict("PureLaurent", r=r)
    if trdeg == r + n - d:
        return ClassificationVerdict("LaurentTensorPoly", r=r, s=n - d)
    # intermediate value; impossible when d >= n-1 since the window has
    # width n-d <= 1
    assert d < n - 1, "intermediate trdeg with d >= n-1 is impossible"
    if n - d == 2 and domain.is_ufd:
        return ClassificationVerdict("UFDClassified", r=r, s=trdeg - r,
                                     generatorsExplicit=False)
    return ClassificationVerdict("BoundsOnly", lo=r, hi=r + n - d)


def rationality_verdict(n, d, r, trdeg, domain):
    """"Rational" when the fraction field of the retract is known rational
    over the coefficient field, else "Unknown"."""
    if not domain.is_field:
        raise ValueError("rationality verdict needs a field domain")
    if d >= n - 2 or n <= 3:
        return "Rational"
    if isinstance(trdeg, int) and trdeg in (0, 1, n):
        return "Rational"
    return "Unknown"


def _is_single_poly_variable(p):
    if len(p.terms) != 1:
        return None
    exp, c = p.terms[0]
    if not p.ring.domain.is_unit(c):
        return None
    hot = [i for i, e in enumerate(exp) if e]
    if len(hot) != 1 or exp[hot[0]] != 1 or hot[0] < p.ring.laurent:
        return None
    return hot[0]


def _generators_witness_shape(quotient_gens, r, s):
    """True when the quotient images already exhibit R^[±r] ⊗ R^[s]: every
    generator is either supported on the y-block or a distinct polynomial
    variable."""
    seen = set()
    for g in quotient_gens:
        if all(all(e == 0 for e in exp[r:]) for exp, _ in g.terms):
            continue  # lies in S
        v = _is_single_poly_variable(g)
        if v is None:
            return False
        seen.add(v)
    return len(seen) == s


def analyze(phi, sample_seed=0):
    """Run the whole pipeline on an idempotent endomorphism and return a
    RetractReport with exact certificates."""
    require_valid(phi)
    defect = idempotency_defect(phi)
    if any(not delta.is_zero() for delta in defect):
        bad = next(i for i, delta in enumerate(defect) if not delta.is_zero())
        raise NotIdempotentError(
            "phi²(%s) - phi(%s) = %s != 0"
            % (phi.ring.names[bad], phi.ring.names[bad], defect[bad]))
    ring = phi.ring
    n, d = ring.n, ring.laurent
    md = monomial_part(phi)
    dec = decompose(md.matrix)
    dec, yvars = compute_y_variables(phi, dec)
    r = dec.r

    generators = [y.poly for y in yvars[:r]] + \
        [phi.images[j] for j in range(d, n)]
    target = quotient_ring_signature(ring, r)
    quotient_gens = [quotient_mod_J(g, dec, yvars, target) for g in generators]

    trdeg = transcendence_degree(generators, ring, unit_rank=r)
    verdict = classify(n, d, r, trdeg, ring.domain)
    if verdict.tag == "UFDClassified" and _generators_witness_shape(
            quotient_gens, r, verdict.params["s"]):
        verdict = ClassificationVerdict("UFDClassified", r=r,
                                        s=verdict.params["s"],
                                        generatorsExplicit=True)
    rationality = rationality_verdict(n, d, r, trdeg, ring.domain) \
        if ring.domain.is_field else "NotApplicable"

    certificates = {
        "matrix_idempotent": dec.M * dec.M == dec.M,
        "unimodular_basis": dec.det_sign in (1, -1),
        "fixed_y_images": True,   # verified inside compute_y_variables
        "killed_y_images": True,  # verified inside compute_y_variables
        "ideal_killed": _ideal_killed(phi, yvars, sample_seed),
        "image_lattice_membership": all(
            solve_in_lattice(md.matrix.column(i), dec.fixed_basis) is not None
            for i in range(d)),
    }
    if not all(certificates.values()):
        raise CertificateError("certificate check failed", certificates)

    return RetractReport(
        ring=ring, r=r, decomposition=dec, y_variables=yvars,
        generators=generators, quotient_generators=quotient_gens,
        quotient_ring=target, trdeg=trdeg, classification=verdict,
        rationality=rationality, certificates=certificates)


def _ideal_killed(phi, yvars, seed, samples=5):
    """phi(J) = 0: checked on the generators y_i - 1 (killed i) and on a few
    random B-multiples of them."""
    ring = phi.ring
    gens = [y.poly - ring.one() for y in yvars if y.kind == "killed"]
    for g in gens:
        if not apply(phi, g).is_zero():
            return False
    rng = random.Random(seed)
    for _ in range(samples):
        for g in gens:
            b = random_element(ring, rng)
            if not apply(phi, b * g).is_zero():
                return False
    return True


def random_element(ring, rng, max_terms=3, max_exp=2, max_coeff=5):
    """A small random ring element; used for sample-level certificates and
    property tests."""
    dom = ring.domain
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exp = []
        for i in range(ring.n):
            lo = -max_exp if i < ring.laurent else 0
            exp.append(rng.randint(lo, max_exp))
        c = 0
        while c == 0:
            c = rng.randint(-max_coeff, max_coeff)
        terms.append((tuple(exp), dom.coerce(c)))
    return ring.from_terms(terms)
