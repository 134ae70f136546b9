"""Exact arithmetic in commutative unital rings where 2 is invertible.

Two rings are available: Z_m for odd m >= 3, and the polynomial ring
Z_m[t] on top of such a base. Values are immutable and canonical
(residues in [0, m), little-endian coefficient tuples with no trailing
zeros), so equality of values is equality of payloads and nothing ever
rounds.
"""

from __future__ import annotations

from .errors import DomainError, InvalidRing

__all__ = [
    "Zmod",
    "PolyRing",
    "RingElement",
    "ZmodElement",
    "PolyElement",
    "BaseDerivation",
]


class RingElement:
    """A canonical element of a ring; subclasses carry the arithmetic."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        # Trusted constructor: `payload` must already be canonical for
        # `ring`. Callers outside this module go through ring.element().
        self.ring = ring
        self.payload = payload

    def is_zero(self):
        return not self.payload

    def half(self):
        """The unique h with h + h == self (2 is invertible here)."""
        return self * self.ring.half

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.payload == other.payload
            and self.ring == other.ring
        )

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __repr__(self):
        return f"{self.ring.format_payload(self.payload)} in {self.ring}"


class ZmodElement(RingElement):
    __slots__ = ()

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        ring = self.ring
        if ring is not other.ring and ring != other.ring:
            raise DomainError(f"ring mismatch: {ring} vs {other.ring}")
        return ZmodElement(ring, (self.payload + other.payload) % ring.modulus)

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        ring = self.ring
        if ring is not other.ring and ring != other.ring:
            raise DomainError(f"ring mismatch: {ring} vs {other.ring}")
        return ZmodElement(ring, (self.payload - other.payload) % ring.modulus)

    def __mul__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        ring = self.ring
        if ring is not other.ring and ring != other.ring:
            raise DomainError(f"ring mismatch: {ring} vs {other.ring}")
        return ZmodElement(ring, (self.payload * other.payload) % ring.modulus)

    def __neg__(self):
        return ZmodElement(self.ring, (-self.payload) % self.ring.modulus)


def _strip(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class PolyElement(RingElement):
    __slots__ = ()

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        ring = self.ring
        if ring is not other.ring and ring != other.ring:
            raise DomainError(f"ring mismatch: {ring} vs {other.ring}")
        a, b = self.payload, other.payload
        if len(a) < len(b):
            a, b = b, a
        m = ring.base.modulus
        out = list(a)
        for idx in range(len(b)):
            out[idx] = (out[idx] + b[idx]) % m
        return PolyElement(ring, _strip(out))

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        ring = self.ring
        if ring is not other.ring and ring != other.ring:
            raise DomainError(f"ring mismatch: {ring} vs {other.ring}")
        a, b = self.payload, other.payload
        m = ring.base.modulus
        la, lb = len(a), len(b)
        out = [0] * max(la, lb)
        for idx in range(len(out)):
            ca = a[idx] if idx < la else 0
            cb = b[idx] if idx < lb else 0
            out[idx] = (ca - cb) % m
        return PolyElement(ring, _strip(out))

    def __mul__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        ring = self.ring
        if ring is not other.ring and ring != other.ring:
            raise DomainError(f"ring mismatch: {ring} vs {other.ring}")
        a, b = self.payload, other.payload
        if not a or not b:
            return ring.zero
        m = ring.base.modulus
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = (out[i + j] + ca * cb) % m
        # the leading product can vanish mod a composite modulus
        return PolyElement(ring, _strip(out))

    def __neg__(self):
        m = self.ring.base.modulus
        return PolyElement(self.ring, tuple((-c) % m for c in self.payload))


class Zmod:
    """The ring Z_m with m odd and >= 3, so that 2 has an inverse."""

    kind = "zmod"

    __slots__ = ("modulus", "inv2", "zero", "one", "half")

    def __init__(self, modulus):
        if isinstance(modulus, bool) or not isinstance(modulus, int):
            raise InvalidRing(f"modulus must be an integer, got {modulus!r}")
        if modulus < 3 or modulus % 2 == 0:
            raise InvalidRing(
                f"Z_{modulus} is rejected: the modulus must be odd and >= 3 "
                "so that 2 is invertible"
            )
        self.modulus = modulus
        self.inv2 = pow(2, -1, modulus)
        self.zero = ZmodElement(self, 0)
        self.one = ZmodElement(self, 1)
        self.half = ZmodElement(self, self.inv2)

    def element(self, value):
        """Canonicalize an integer (or an element of this ring) into a value."""
        if isinstance(value, ZmodElement) and value.ring == self:
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"Z_{self.modulus} values are integers, got {value!r}")
        return ZmodElement(self, value % self.modulus)

    def sample(self, rng, max_degree=0):
        return ZmodElement(self, rng.randrange(self.modulus))

    def format_payload(self, payload):
        return str(payload)

    def __eq__(self, other):
        return isinstance(other, Zmod) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("zmod", self.modulus))

    def __repr__(self):
        return f"Zmod({self.modulus})"

    def __str__(self):
        return f"Z_{self.modulus}"


class PolyRing:
    """Z_m[t]: polynomials over a Zmod base, any degree.

    Payloads are coefficient tuples, constant term first, trailing zeros
    stripped; the zero polynomial is the empty tuple.
    """

    kind = "poly"

    __slots__ = ("base", "zero", "one", "half", "t")

    def __init__(self, base):
        if not isinstance(base, Zmod):
            raise InvalidRing(f"polynomial rings need a Zmod base, got {base!r}")
        self.base = base
        self.zero = PolyElement(self, ())
        self.one = PolyElement(self, (1,))
        self.half = PolyElement(self, (base.inv2,))
        self.t = PolyElement(self, (0, 1))

    def element(self, value):
        """Canonicalize an int (constant) or coefficient sequence into a value."""
        if isinstance(value, PolyElement) and value.ring == self:
            return value
        m = self.base.modulus
        if isinstance(value, bool):
            raise DomainError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, int):
            return PolyElement(self, _strip([value % m]))
        if isinstance(value, (list, tuple)):
            coeffs = []
            for c in value:
                if isinstance(c, bool) or not isinstance(c, int):
                    raise DomainError(f"polynomial coefficients are integers, got {c!r}")
                coeffs.append(c % m)
            return PolyElement(self, _strip(coeffs))
        raise DomainError(f"cannot coerce {value!r} into {self}")

    def sample(self, rng, max_degree=3):
        m = self.base.modulus
        return PolyElement(
            self, _strip([rng.randrange(m) for _ in range(max_degree + 1)])
        )

    def format_payload(self, payload):
        if not payload:
            return "0"
        terms = []
        for k, c in enumerate(payload):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("t" if c == 1 else f"{c}t")
            else:
                terms.append(f"t^{k}" if c == 1 else f"{c}t^{k}")
        return " + ".join(terms)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("poly", self.base))

    def __repr__(self):
        return f"PolyRing({self.base!r})"

    def __str__(self):
        return f"Z_{self.base.modulus}[t]"


class BaseDerivation:
    """A derivation of a base ring: the zero map, d/dt, or f*(d/dt).

    On Z_m every derivation is zero (additivity plus delta(1) = 0 force
    it), so only the zero map can be built there; the formal derivative
    and its scalings live on Z_m[t].
    """

    ZERO = "zero"
    FORMAL = "d/dt"
    SCALED = "scaled"

    __slots__ = ("ring", "kind", "scale")

    def __init__(self, ring, kind, scale=None):
        self.ring = ring
        self.kind = kind
        self.scale = scale

    @classmethod
    def zero(cls, ring):
        return cls(ring, cls.ZERO)

    @classmethod
    def formal(cls, ring):
        if not isinstance(ring, PolyRing):
            raise DomainError(
                f"the formal derivative needs a polynomial ring; on {ring} "
                "only the zero derivation exists"
            )
        return cls(ring, cls.FORMAL)

    @classmethod
    def scaled(cls, factor):
        """The map p -> factor * dp/dt."""
        if not isinstance(factor, PolyElement):
            raise DomainError("the scale factor must be a polynomial ring element")
        return cls(factor.ring, cls.SCALED, factor)

    def __call__(self, p):
        if p.ring is not self.ring and p.ring != self.ring:
            raise DomainError(f"ring mismatch: {self.ring} vs {p.ring}")
        if self.kind == self.ZERO:
            return self.ring.zero
        d = self._formal(p)
        if self.kind == self.SCALED:
            return self.scale * d
        return d

    def _formal(self, p):
        m = self.ring.base.modulus
        coeffs = p.payload
        return PolyElement(
            self.ring, _strip([(k * coeffs[k]) % m for k in range(1, len(coeffs))])
        )

    def __repr__(self):
        if self.kind == self.SCALED:
            return f"BaseDerivation({self.scale!r} * d/dt)"
        return f"BaseDerivation({self.kind} on {self.ring})"
