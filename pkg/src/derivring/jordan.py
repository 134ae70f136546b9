"""Jordan inner derivations on H_n(R): the pair-list action
x -> sum(a_k.(b_k.x) - b_k.(a_k.x)), its reduction to one skew
commutator generator, the diagonal and corner identities as executable
checks, and the Jordan reconstruction of the implementing element.
"""

from __future__ import annotations

import random

from .checks import CheckReport, Violation
from .errors import ContractError, DomainError
from .matrices import Matrix, SymmetricMatrix, commutator, corner, jordan_mul, matrix_unit
from .sampling import random_symmetric
from .twolocal import ReconstructionResult, TwoLocalOracle

__all__ = [
    "JordanPairDerivation",
    "JordanWitnessFamily",
    "jordan_inner_apply",
    "pairs_to_commutator",
    "check_diag_zero",
    "check_corner_consistency",
    "corner_compress",
    "reconstruct_abar_jordan",
    "verify_jordan_theorem",
    "gen_jordan_instance",
]


class JordanPairDerivation:
    """A finite list of symmetric pairs (a_k, b_k) acting through the
    Jordan product: x -> sum(a_k.(b_k.x) - b_k.(a_k.x))."""

    __slots__ = ("ring", "n", "pairs")

    def __init__(self, ring, n, pairs=()):
        pairs = tuple(pairs)
        for a, b in pairs:
            if a.n != n or b.n != n or a.ring != ring or b.ring != ring:
                raise DomainError("pair entries must be n x n matrices over the ring")
            if not a.is_symmetric() or not b.is_symmetric():
                raise DomainError("pair entries must be symmetric")
        self.ring = ring
        self.n = n
        self.pairs = pairs

    def __call__(self, x):
        return jordan_inner_apply(self, x)


def jordan_inner_apply(pd, x):
    """Apply the pair-list derivation; a SymmetricMatrix input gives a
    SymmetricMatrix output. (The same formula on arbitrary matrices still
    equals the commutator action of the reduced generator.)"""
    if x.n != pd.n or x.ring != pd.ring:
        raise DomainError(f"expected a {pd.n}x{pd.n} matrix over {pd.ring}")
    acc = Matrix.zero(pd.ring, pd.n)
    for a, b in pd.pairs:
        acc = acc + jordan_mul(a, jordan_mul(b, x)) - jordan_mul(b, jordan_mul(a, x))
    if isinstance(x, SymmetricMatrix):
        return SymmetricMatrix.of(acc)
    return acc


def pairs_to_commutator(pd):
    """The single skew generator with the same action: one quarter of the
    summed commutators sum [a_k, b_k]."""
    quarter = pd.ring.half * pd.ring.half
    acc = Matrix.zero(pd.ring, pd.n)
    for a, b in pd.pairs:
        acc = acc + commutator(a, b)
    return acc * quarter


def check_diag_zero(pairs):
    """True iff every diagonal entry of sum [a_k, b_k] vanishes; over a
    commutative ring this is forced for symmetric pairs."""
    if isinstance(pairs, JordanPairDerivation):
        seq = pairs.pairs
    else:
        seq = tuple(pairs)
    if not seq:
        return True
    total = None
    for a, b in seq:
        if not a.is_symmetric() or not b.is_symmetric():
            raise DomainError("check_diag_zero needs symmetric pairs")
        term = commutator(a, b)
        total = term if total is None else total + term
    n = total.n
    return all(total.entry(i, i).is_zero() for i in range(1, n + 1))


def check_corner_consistency(d_ii, d_jj, i, j):
    """The corner agreements between the diagonal-probe witnesses d(ii)
    and d(jj): the (i,i)/(j,j) corners of both coincide, the (i,j) and
    (j,i) corners coincide, and for every third index k the corners in
    row/column i and row/column j coincide."""
    if i == j:
        raise DomainError("corner consistency compares distinct indices")
    d_ii._require_compatible(d_jj)
    n = d_ii.n
    if corner(d_ii, i, i) != corner(d_ii, j, j):
        return False
    if corner(d_ii, i, i) != corner(d_jj, j, j):
        return False
    if corner(d_ii, i, j) != corner(d_jj, i, j):
        return False
    if corner(d_ii, j, i) != corner(d_jj, j, i):
        return False
    for k in range(1, n + 1):
        if k in (i, j):
            continue
        for (r, c) in ((i, k), (k, i), (j, k), (k, j)):
            if corner(d_ii, r, c) != corner(d_jj, r, c):
                return False
    return True


def corner_compress(oracle, i, j):
    """The compression x -> e Delta(x) e with e = e_{i,i} + e_{j,j},
    defined on corner-supported inputs x = e x e."""
    if i == j:
        raise DomainError("corner compression needs i != j")
    ring, n = oracle.ring, oracle.n
    e = matrix_unit(ring, n, i, i) + matrix_unit(ring, n, j, j)

    def apply(x):
        if e * x * e != x:
            raise DomainError(f"input must be supported on the ({i},{j}) corner")
        return e * oracle(x) * e

    return apply


class JordanWitnessFamily:
    """The reduced diagonal-probe witnesses: for each index i the matrix
    d(ii) = (1/4) sum [a_k, b_k] of a pair list witnessing Delta at
    e_{i,i}. Each d(ii) must be skew with zero diagonal."""

    __slots__ = ("ring", "n", "diag", "_validated_with")

    def __init__(self, ring, n, diag):
        if n < 2:
            raise DomainError("Jordan witness families need n >= 2")
        if set(diag) != set(range(1, n + 1)):
            raise DomainError("need exactly one d(ii) per index in 1..n")
        self.ring = ring
        self.n = n
        self.diag = dict(diag)
        for mat in self.diag.values():
            if mat.n != n or mat.ring != ring:
                raise DomainError("witnesses must be n x n matrices over the ring")
        self._validated_with = None

    @property
    def validated(self):
        return self._validated_with is not None

    def validate(self, oracle):
        ring, n = self.ring, self.n
        for i in range(1, n + 1):
            d = self.diag[i]
            if not d.is_skew():
                raise ContractError(f"d({i}{i}) must be skew-symmetric")
            if any(not d.entry(k, k).is_zero() for k in range(1, n + 1)):
                raise ContractError(f"d({i}{i}) must have zero diagonal")
            unit = matrix_unit(ring, n, i, i)
            if oracle(SymmetricMatrix.of(unit)) != commutator(d, unit):
                raise ContractError(f"d({i}{i}) does not witness Delta at e[{i},{i}]")
        self._validated_with = oracle

    def ensure_validated(self, oracle):
        if self._validated_with is not oracle:
            self.validate(oracle)


def reconstruct_abar_jordan(family):
    """Reassemble the implementing element from the diagonal-probe
    witnesses: row i of abar comes from d(ii). The diagonal summands are
    computed literally even though the zero-diagonal identity forces them
    to vanish; a nonzero one trips a ContractError, as does any corner
    disagreement between two witnesses."""
    if not family.validated:
        raise ContractError(
            "reconstruction requires a family validated against its oracle"
        )
    ring, n = family.ring, family.n
    parts = {}
    abar = Matrix.zero(ring, n)
    for i in range(1, n + 1):
        part = corner(family.diag[i], i, i)
        if not part.is_zero():
            raise ContractError(f"diagonal summand ({i},{i}) is nonzero")
        parts[(i, i)] = part
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not check_corner_consistency(family.diag[i], family.diag[j], i, j):
                raise ContractError(f"corner consistency fails for ({i},{j})")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            part = corner(family.diag[i], i, j)
            parts[(i, j)] = part
            abar = abar + part
    if not abar.is_skew():
        raise ContractError("reconstructed element is not skew-symmetric")
    return ReconstructionResult(abar, parts)


def verify_jordan_theorem(oracle, family, samples, pairs=None):
    """Check, exactly: Delta(x) = [abar, x] on every sample, symmetry of
    every value, and the Jordan Leibniz rule
    D(x.y) = D(x).y + x.D(y) for D = [abar, .] on the sampled pairs
    (consecutive samples when no pairs are given)."""
    samples = list(samples)
    if not samples:
        raise DomainError("verify_jordan_theorem needs at least one sample")
    family.ensure_validated(oracle)
    abar = reconstruct_abar_jordan(family).abar
    if pairs is None:
        if len(samples) > 1:
            pairs = [
                (samples[idx], samples[(idx + 1) % len(samples)])
                for idx in range(len(samples))
            ]
        else:
            pairs = []
    checked = 0
    for idx, x in enumerate(samples):
        lhs = oracle(x)
        rhs = commutator(abar, x)
        if lhs != rhs:
            return CheckReport(
                checked, (Violation("action", f"sample {idx}", lhs, rhs),)
            )
        if not lhs.is_symmetric():
            return CheckReport(
                checked, (Violation("closure", f"sample {idx}", lhs, lhs.transpose()),)
            )
        checked += 1
    for idx, (x, y) in enumerate(pairs):
        lhs = commutator(abar, jordan_mul(x, y))
        rhs = jordan_mul(commutator(abar, x), y) + jordan_mul(x, commutator(abar, y))
        if lhs != rhs:
            return CheckReport(
                checked, (Violation("jordan-leibniz", f"pair {idx}", lhs, rhs),)
            )
        checked += 1
    return CheckReport(checked)


def gen_jordan_instance(hidden_pairs, seed, max_degree=3):
    """Build (oracle, family) for the derivation given by hidden_pairs.
    Each d(ii) is reduced from an independently re-expressed pair list
    for the same map: pairs are split by bilinearity in the first slot,
    canceling pairs (r, r) are appended, and the list is shuffled. All of
    these preserve sum [a_k, b_k] exactly."""
    ring, n = hidden_pairs.ring, hidden_pairs.n
    rng = random.Random(seed)
    oracle = TwoLocalOracle(ring, n, hidden_pairs)
    diag = {}
    for i in range(1, n + 1):
        reexpressed = _reexpress(hidden_pairs.pairs, ring, n, rng, max_degree)
        diag[i] = pairs_to_commutator(JordanPairDerivation(ring, n, reexpressed))
    family = JordanWitnessFamily(ring, n, diag)
    family.validate(oracle)
    return oracle, family


def _reexpress(pairs, ring, n, rng, max_degree):
    out = []
    for a, b in pairs:
        if rng.random() < 0.5:
            r = random_symmetric(ring, n, rng, max_degree)
            out.append((a - r, b))
            out.append((r, b))
        else:
            out.append((a, b))
    r = random_symmetric(ring, n, rng, max_degree)
    out.append((r, r))
    rng.shuffle(out)
    return out
