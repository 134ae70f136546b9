"""The witness model for 2-local inner derivations on M_n(R): validated
witness families, corner reconstruction of the implementing element
abar, the supporting corner/diagonal identities as executable checks,
and a seeded adversarial instance generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .checks import CheckReport, Violation
from .derivations import InnerDerivation
from .errors import ContractError, DomainError
from .matrices import Matrix, commutator, corner, matrix_unit, probe_x0
from .sampling import random_central, random_x0_commutant

__all__ = [
    "NoiseSpec",
    "TwoLocalOracle",
    "WitnessFamily",
    "ReconstructionResult",
    "reconstruct_abar",
    "verify_theorem1",
    "check_cross_corner",
    "check_offdiag_formula",
    "check_diag_difference",
    "gen_witness_family",
]


class NoiseSpec(Enum):
    """How far generated witnesses stray from the hidden element: not at
    all, by independent central shifts per probe, or additionally by an
    x0-commutant shift on the c witness."""

    NONE = "none"
    CENTRAL_SHIFTS = "central"
    X0_COMMUTANT_SHIFT_ON_C = "x0-commutant"


class TwoLocalOracle:
    """Total evaluation access to the map Delta under scrutiny."""

    __slots__ = ("ring", "n", "_evaluate")

    def __init__(self, ring, n, evaluate):
        if n < 2:
            raise DomainError("2-local analysis needs n >= 2")
        self.ring = ring
        self.n = n
        self._evaluate = evaluate

    def __call__(self, x):
        if x.n != self.n or x.ring != self.ring:
            raise DomainError(
                f"oracle expects {self.n}x{self.n} matrices over {self.ring}"
            )
        return self._evaluate(x)


class WitnessFamily:
    """Per-probe implementing elements: a(i,j) for every ordered pair of
    distinct indices (each witnessing the probe pair e_{i,j}, x0) and c
    for the shift probe x0 itself.

    c defaults to a(1,2): every off-diagonal witness also witnesses x0.
    Reconstruction refuses families that have not been validated against
    their oracle.
    """

    __slots__ = ("ring", "n", "offdiag", "c", "_validated_with")

    def __init__(self, ring, n, offdiag, c=None):
        if n < 2:
            raise DomainError("witness families need n >= 2")
        expected = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j}
        if set(offdiag) != expected:
            raise DomainError(
                "witness family needs exactly one a(i,j) per ordered pair of "
                "distinct indices in 1..n"
            )
        self.ring = ring
        self.n = n
        self.offdiag = dict(offdiag)
        self.c = c if c is not None else self.offdiag[(1, 2)]
        for mat in list(self.offdiag.values()) + [self.c]:
            if mat.n != n or mat.ring != ring:
                raise DomainError("witnesses must be n x n matrices over the ring")
        self._validated_with = None

    @property
    def validated(self):
        return self._validated_with is not None

    def validate(self, oracle):
        """Check every defining identity against the oracle; raises
        ContractError on the first failure."""
        ring, n = self.ring, self.n
        x0 = probe_x0(ring, n)
        dx0 = oracle(x0)
        for (i, j) in sorted(self.offdiag):
            a = self.offdiag[(i, j)]
            unit = matrix_unit(ring, n, i, j)
            if oracle(unit) != commutator(a, unit):
                raise ContractError(f"a({i},{j}) does not witness Delta at e[{i},{j}]")
            if dx0 != commutator(a, x0):
                raise ContractError(f"a({i},{j}) does not witness Delta at x0")
        if dx0 != commutator(self.c, x0):
            raise ContractError("c does not witness Delta at x0")
        self._validated_with = oracle

    def ensure_validated(self, oracle):
        if self._validated_with is not oracle:
            self.validate(oracle)


@dataclass(frozen=True)
class ReconstructionResult:
    """The reassembled element abar together with its corner summands."""

    abar: Matrix
    parts: dict


def reconstruct_abar(family):
    """Reassemble the implementing element: the (i, j) summand is the
    (i, j) corner of a(j, i) for i != j (note the index swap), and the
    diagonal summands are the diagonal corners of c."""
    if not family.validated:
        raise ContractError(
            "reconstruction requires a family validated against its oracle"
        )
    ring, n = family.ring, family.n
    parts = {}
    abar = Matrix.zero(ring, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                part = corner(family.c, i, i)
            else:
                part = corner(family.offdiag[(j, i)], i, j)
            parts[(i, j)] = part
            abar = abar + part
    return ReconstructionResult(abar, parts)


def verify_theorem1(oracle, family, samples):
    """Check Delta(x) = [abar, x] exactly on every sample; stops at the
    first violation."""
    samples = list(samples)
    if not samples:
        raise DomainError("verify_theorem1 needs at least one sample")
    family.ensure_validated(oracle)
    abar = reconstruct_abar(family).abar
    checked = 0
    for idx, x in enumerate(samples):
        lhs = oracle(x)
        rhs = commutator(abar, x)
        if lhs != rhs:
            return CheckReport(
                checked, (Violation("action", f"sample {idx}", lhs, rhs),)
            )
        checked += 1
    return CheckReport(checked)


def check_cross_corner(a_ij, a_ik, i, j, k, mirror=False):
    """Corner agreement between two witnesses of one Delta.

    Default form: e_{k,k} a(i,j) e_{i,j} == e_{k,k} a(i,k) e_{i,j},
    defined for k != i (the arguments are the witnesses a(i,j), a(i,k)).
    With mirror=True the arguments are (a(i,j), a(k,j)) and the mirrored
    identity e_{i,j} a(i,j) e_{k,k} == e_{i,j} a(k,j) e_{k,k} is
    checked, defined for k != j.

    The caller is responsible for passing witnesses of the same Delta;
    unrelated inputs simply yield False.
    """
    a_ij._require_compatible(a_ik)
    ring, n = a_ij.ring, a_ij.n
    if mirror:
        if k == j:
            raise DomainError("the mirrored cross-corner identity needs k != j")
        u = matrix_unit(ring, n, i, j)
        p = matrix_unit(ring, n, k, k)
        return u * a_ij * p == u * a_ik * p
    if k == i:
        raise DomainError("the cross-corner identity needs k != i")
    u = matrix_unit(ring, n, i, j)
    p = matrix_unit(ring, n, k, k)
    return p * a_ij * u == p * a_ik * u


def check_offdiag_formula(family, oracle, i, j):
    """The off-diagonal expansion: Delta(e_{i,j}) equals

        S e_{i,j} - e_{i,j} S + a(i,j)^{i,i} e_{i,j} - e_{i,j} a(i,j)^{j,j}

    where S is the sum of all off-diagonal corner summands a_{k,l}.
    (Summing a_{k,l} or a_{l,k} over all ordered distinct pairs gives the
    same S.)"""
    if i == j:
        raise DomainError("the off-diagonal expansion needs i != j")
    family.ensure_validated(oracle)
    ring, n = family.ring, family.n
    s = Matrix.zero(ring, n)
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            if k != l:
                s = s + corner(family.offdiag[(l, k)], k, l)
    unit = matrix_unit(ring, n, i, j)
    a = family.offdiag[(i, j)]
    lhs = oracle(unit)
    rhs = s * unit - unit * s + unit * a.entry(i, i) - unit * a.entry(j, j)
    return lhs == rhs


def check_diag_difference(b, c, oracle):
    """Both b and c must witness Delta at x0 (ContractError otherwise);
    then their diagonal entries agree up to a common shift, i.e.
    c^{k,k} - c^{l,l} == b^{k,k} - b^{l,l} for every pair k, l."""
    ring, n = oracle.ring, oracle.n
    x0 = probe_x0(ring, n)
    dx0 = oracle(x0)
    if commutator(b, x0) != dx0 or commutator(c, x0) != dx0:
        raise ContractError("diag-difference inputs must both witness Delta at x0")
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            if c.entry(k, k) - c.entry(l, l) != b.entry(k, k) - b.entry(l, l):
                return False
    return True


def gen_witness_family(hidden, noise, seed, max_degree=3):
    """Build (oracle, family) for the hidden inner derivation [hidden, .]
    with the requested witness ambiguity; the family is validated against
    the oracle before it is returned.

    Central shifts die in every identity the witnesses must satisfy, and
    polynomials in x0 commute with x0, so every noise mode yields a valid
    family by construction.
    """
    ring, n = hidden.ring, hidden.n
    rng = random.Random(seed)
    oracle = TwoLocalOracle(ring, n, InnerDerivation(hidden))
    shifted = noise is not NoiseSpec.NONE
    offdiag = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            w = hidden
            if shifted:
                w = w + random_central(ring, n, rng, max_degree)
            offdiag[(i, j)] = w
    c = hidden
    if shifted:
        c = c + random_central(ring, n, rng, max_degree)
    if noise is NoiseSpec.X0_COMMUTANT_SHIFT_ON_C:
        c = c + random_x0_commutant(ring, n, rng, max_degree)
    family = WitnessFamily(ring, n, offdiag, c)
    family.validate(oracle)
    return oracle, family
