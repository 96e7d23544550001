"""Finite-dimensional irreducibles from lowest-weight Verma slices.

The module with antidominant regular integral parameter lambda has lowest
weight mu = lambda + rho.  It is realized as a quotient of the lowest
weight Verma module: PBW monomials in the positive-root raising operators
span each Verma weight space, the contravariant form (transpose swaps
E_alpha and E_{-alpha}, fixes the Cartan) is computed exactly, and the
radical of its per-weight Gram matrices is quotiented away.  The basis of
the quotient is the leftmost-pivot subset of the monomials, so the whole
construction is deterministic.

The same engine restricted to the positive roots of a Levi factor
produces the full torus-graded character of a Levi constituent, which is
what the Kostant-side expansion needs.
"""

import itertools
from fractions import Fraction

from . import linalg
from .errors import InvalidParameter, ResourceLimitExceeded
from .rootsys import (Weight, dominantize, is_antidominant_regular_integral,
                      pairing)

DEFAULT_MAX_DIM = 10 ** 4


def weyl_dimension(rs, lam):
    """Dimension of the irreducible with shifted lowest-weight parameter.

    Independent of the Verma construction: the Weyl product formula
    evaluated at the dominant weight of the orbit of lambda + rho.
    """
    if not is_antidominant_regular_integral(rs, lam):
        raise InvalidParameter(
            "weyl_dimension needs an antidominant regular integral weight")
    mu_high = dominantize(rs, lam + rs.rho)
    num = Fraction(1)
    for beta in rs.positive_roots:
        num *= Fraction(pairing(mu_high + rs.rho, beta), pairing(rs.rho, beta))
    if num.denominator != 1:
        raise AssertionError("Weyl dimension is not an integer")
    return int(num)


class VermaSlice:
    """One weight space of a Verma module with its Gram matrix."""

    __slots__ = ("target_weight", "monomial_basis", "gram")

    def __init__(self, target_weight, monomial_basis, gram):
        self.target_weight = target_weight
        self.monomial_basis = monomial_basis
        self.gram = gram

    def rank(self):
        return linalg.matrix_rank([list(row) for row in self.gram],
                                  len(self.monomial_basis))


class GModule:
    """An explicit module: weight-graded basis plus exact action matrices.

    ``action`` maps each basis label of the algebra to a sparse matrix
    stored as {(row, col): Fraction}.
    """

    __slots__ = ("algebra", "lowest_weight", "basis_weights", "action",
                 "dimension")

    def __init__(self, algebra, lowest_weight, basis_weights, action):
        self.algebra = algebra
        self.lowest_weight = lowest_weight
        self.basis_weights = basis_weights
        self.action = action
        self.dimension = len(basis_weights)

    def weight_multiplicities(self):
        out = {}
        for w in self.basis_weights:
            out[w] = out.get(w, 0) + 1
        return out

    def action_columns(self, label):
        """Column-major view of one action matrix."""
        cols = [[] for _ in range(self.dimension)]
        for (i, j), v in self.action[label].items():
            cols[j].append((i, v))
        return cols


class VermaEngine:
    """Lowest-weight Verma arithmetic over a fixed set of raising letters.

    ``letters`` must be positive roots, closed under root addition, in
    canonical order.  Monomials are exponent tuples over the letters; the
    vacuum is annihilated by every lowering operator.
    """

    def __init__(self, alg, mu, letters):
        self.alg = alg
        self.rs = alg.rs
        self.mu = mu
        self.letters = tuple(letters)
        self.vacuum = (0,) * len(self.letters)
        self._letter_index = {r.simple_coords: i
                              for i, r in enumerate(self.letters)}
        self._raise_memo = {}
        self._lower_memo = {}

    def weight_of(self, mono):
        w = self.mu
        for k, root in zip(mono, self.letters):
            if k:
                w = w + k * root.fw
        return w

    # -- monomial-level operators ------------------------------------------

    def _first_index(self, mono):
        for j, k in enumerate(mono):
            if k:
                return j
        return None

    def raise_mono(self, t, mono):
        """Left multiplication of a PBW monomial by the t-th raising letter."""
        key = (t, mono)
        cached = self._raise_memo.get(key)
        if cached is not None:
            return cached
        j = self._first_index(mono)
        if j is None or t <= j:
            out = {mono[:t] + (mono[t] + 1,) + mono[t + 1:]: Fraction(1)}
        else:
            rest = mono[:j] + (mono[j] - 1,) + mono[j + 1:]
            out = self.mul_raise(j, self.raise_mono(t, rest))
            total = tuple(a + b for a, b in zip(self.letters[t].simple_coords,
                                                self.letters[j].simple_coords))
            if self.rs.is_root(total):
                n = self.alg.n_constant(self.letters[t], self.letters[j])
                u = self._letter_index[total]
                out = _accumulate(out, self.raise_mono(u, rest), Fraction(n))
        self._raise_memo[key] = out
        return out

    def lower_mono(self, gamma, mono):
        """Left multiplication by the lowering operator of positive root gamma."""
        key = (gamma.simple_coords, mono)
        cached = self._lower_memo.get(key)
        if cached is not None:
            return cached
        j = self._first_index(mono)
        if j is None:
            out = {}
        else:
            rest = mono[:j] + (mono[j] - 1,) + mono[j + 1:]
            out = self.mul_raise(j, self.lower_mono(gamma, rest))
            letter = self.letters[j]
            if gamma == letter:
                coeff = -pairing(self.weight_of(rest), gamma)
                out = _accumulate(out, {rest: Fraction(1)}, coeff)
            else:
                diff = tuple(a - b for a, b in zip(letter.simple_coords,
                                                   gamma.simple_coords))
                if self.rs.is_root(diff):
                    neg_gamma = self.rs.negate_root(gamma)
                    n = self.alg.n_constant(neg_gamma, letter)
                    if sum(diff) > 0:
                        term = self.raise_mono(self._letter_index[diff], rest)
                    else:
                        down = self.rs.root_from_simple_coords(
                            tuple(-d for d in diff))
                        term = self.lower_mono(down, rest)
                    out = _accumulate(out, term, Fraction(n))
        self._lower_memo[key] = out
        return out

    # -- vector-level operators --------------------------------------------

    def mul_raise(self, t, vec):
        out = {}
        for mono, c in vec.items():
            out = _accumulate(out, self.raise_mono(t, mono), c)
        return out

    def mul_lower(self, gamma, vec):
        out = {}
        for mono, c in vec.items():
            out = _accumulate(out, self.lower_mono(gamma, mono), c)
        return out

    # -- contravariant form --------------------------------------------------

    def pair_with_monomial(self, mono, vec):
        """<mono * vacuum, vec> under the contravariant form."""
        while True:
            if not vec:
                return Fraction(0)
            t = self._first_index(mono)
            if t is None:
                return vec.get(self.vacuum, Fraction(0))
            mono = mono[:t] + (mono[t] - 1,) + mono[t + 1:]
            vec = self.mul_lower(self.letters[t], vec)

    def monomials_for(self, delta_simple):
        """Exponent tuples whose letter sum equals delta (simple coords)."""
        letters = [r.simple_coords for r in self.letters]
        out = []

        def rec(i, remaining, acc):
            if i == len(letters):
                if all(r == 0 for r in remaining):
                    out.append(tuple(acc))
                return
            coords = letters[i]
            kmax = min((remaining[j] // coords[j]
                        for j in range(len(coords)) if coords[j]),
                       default=0)
            if all(c == 0 for c in coords):
                kmax = 0
            for k in range(kmax + 1):
                acc.append(k)
                rec(i + 1, tuple(r - k * c for r, c in zip(remaining, coords)),
                    acc)
                acc.pop()

        rec(0, tuple(delta_simple), [])
        return out

    def gram(self, monos):
        """Gram matrix of the contravariant form on given monomials.

        Symmetry of the form is used: only the upper triangle is computed.
        """
        n = len(monos)
        g = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            vec = {monos[j]: Fraction(1)}
            for i in range(j + 1):
                val = self.pair_with_monomial(monos[i], vec)
                g[i][j] = val
                g[j][i] = val
        return g


def _accumulate(target, addend, scale=Fraction(1)):
    if not scale:
        return target
    for mono, c in addend.items():
        s = target.get(mono, Fraction(0)) + scale * c
        if s:
            target[mono] = s
        elif mono in target:
            del target[mono]
    return target


def _delta_simple_coords(rs, diff):
    """Integer simple-root coordinates of a weight difference."""
    coords = rs.to_simple_coords(diff)
    out = []
    for c in coords:
        if c.denominator != 1 or c < 0:
            raise InvalidParameter(
                "weight difference %r is not a nonnegative root combination"
                % (diff,))
        out.append(int(c))
    return tuple(out)


def gram_matrix(alg, lam, nu):
    """Contravariant Gram matrix on one Verma weight space.

    Normalized so the lowest-weight vector pairs to 1 with itself.
    """
    rs = alg.rs
    mu = lam + rs.rho
    delta = _delta_simple_coords(rs, nu - mu)
    engine = VermaEngine(alg, mu, rs.positive_roots)
    monos = engine.monomials_for(delta)
    return VermaSlice(nu, tuple(monos),
                      tuple(tuple(row) for row in engine.gram(monos)))


def _weight_box(rs, mu, mu_high, support_indices):
    """All weights mu + sum c_i alpha_i inside the bounding box, in
    canonical order (height of the offset, then coordinates)."""
    delta = _delta_simple_coords(rs, mu_high - mu)
    ranges = []
    for i in range(rs.rank):
        if (i + 1) in support_indices:
            ranges.append(range(delta[i] + 1))
        else:
            if delta[i] != 0:
                raise AssertionError("weight box leaves the Levi span")
            ranges.append(range(1))
    offsets = sorted(itertools.product(*ranges),
                     key=lambda c: (sum(c), c))
    out = []
    for c in offsets:
        w = mu
        for i, k in enumerate(c):
            if k:
                w = w + k * rs.simple_roots[i].fw
        out.append((c, w))
    return out


def _module_weight_blocks(engine, support_indices, mu_high):
    """Per-weight monomials, Gram matrices and pivots of the quotient."""
    rs = engine.rs
    blocks = []
    for offset, nu in _weight_box(rs, engine.mu, mu_high, support_indices):
        monos = engine.monomials_for(offset)
        if not monos:
            continue
        gram = engine.gram(monos)
        rank, pivots = linalg.column_pivots(gram, len(monos))
        if rank == 0:
            continue
        blocks.append({"weight": nu, "monomials": monos, "gram": gram,
                       "pivots": pivots})
    return blocks


def build_irrep(alg, lam, max_dim=DEFAULT_MAX_DIM):
    """The irreducible module whose lowest weight is lambda + rho.

    Raises ResourceLimitExceeded when the Weyl dimension formula exceeds
    ``max_dim`` before any Verma arithmetic happens.
    """
    rs = alg.rs
    if not is_antidominant_regular_integral(rs, lam):
        raise InvalidParameter(
            "build_irrep needs an antidominant regular integral weight, got %r"
            % (lam,))
    dim_expected = weyl_dimension(rs, lam)
    if dim_expected > max_dim:
        raise ResourceLimitExceeded(
            "module dimension %d exceeds the bound %d" % (dim_expected, max_dim))
    mu = lam + rs.rho
    mu_high = dominantize(rs, mu)
    engine = VermaEngine(alg, mu, rs.positive_roots)
    blocks = _module_weight_blocks(engine, set(range(1, rs.rank + 1)), mu_high)

    basis_weights = []
    block_offsets = []
    for blk in blocks:
        block_offsets.append(len(basis_weights))
        basis_weights.extend([blk["weight"]] * len(blk["pivots"]))
    if len(basis_weights) != dim_expected:
        raise AssertionError(
            "Gram construction found dimension %d, Weyl formula says %d"
            % (len(basis_weights), dim_expected))

    by_weight = {}
    for blk, off in zip(blocks, block_offsets):
        by_weight[blk["weight"]] = (blk, off)

    def class_coefficients(nu, vec):
        """Coefficients of a Verma vector against the pivot basis at nu."""
        entry = by_weight.get(nu)
        if entry is None:
            return None
        blk, off = entry
        phi = [engine.pair_with_monomial(m, vec) for m in blk["monomials"]]
        if not any(phi):
            return None
        cols = [[blk["gram"][i][p] for p in blk["pivots"]]
                for i in range(len(blk["monomials"]))]
        sol = linalg.solve_full_column_rank(cols, phi)
        return [(off + k, c) for k, c in enumerate(sol) if c]

    action = {}
    for i in range(1, rs.rank + 1):
        entries = {}
        for idx, w in enumerate(basis_weights):
            c = w.coords[i - 1]
            if c:
                entries[(idx, idx)] = Fraction(c)
        action[("h", i)] = entries
    for root in rs.all_roots():
        entries = {}
        positive = root.is_positive
        gamma = root if positive else rs.negate_root(root)
        for blk, off in zip(blocks, block_offsets):
            nu_target = blk["weight"] + root.fw
            for k, p in enumerate(blk["pivots"]):
                mono = blk["monomials"][p]
                if positive:
                    vec = engine.raise_mono(engine._letter_index[gamma.simple_coords],
                                            mono)
                else:
                    vec = engine.lower_mono(gamma, mono)
                coeffs = class_coefficients(nu_target, vec)
                if coeffs:
                    for row, c in coeffs:
                        entries[(row, off + k)] = c
        action[("e", root.simple_coords)] = entries

    return GModule(alg, mu, tuple(basis_weights), action)


def weight_multiplicities(module):
    """Multiplicity map of a constructed module."""
    return module.weight_multiplicities()


def levi_restricted_multiplicities(alg, parab, mu0):
    """Torus-graded character of the Levi irreducible with lowest weight mu0.

    Runs the Verma/Gram machinery with the Levi positive roots as the
    only raising letters; the full Cartan grading comes along for free.
    Requires mu0 - rho_L to be antidominant regular for the Levi, which
    holds for every weight handed over by the coset-representative filter.
    """
    rs = alg.rs
    letters = parab.levi_positive_roots
    s = parab.levi_simple_indices
    for gamma in letters:
        v = pairing(mu0, gamma) - pairing(Fraction(1, 2) * parab_levi_rho(parab),
                                          gamma)
        if v.denominator != 1 or v >= 0:
            raise InvalidParameter(
                "lowest weight %r is not Levi-antidominant regular" % (mu0,))
    mu_high = dominantize(rs, mu0, s)
    engine = VermaEngine(alg, mu0, letters)
    blocks = _module_weight_blocks(engine, s, mu_high)
    out = {}
    for blk in blocks:
        out[blk["weight"]] = len(blk["pivots"])
    return out


def parab_levi_rho(parab):
    """Sum of the Levi positive roots (twice the Levi rho)."""
    total = Weight([0] * parab.rs.rank)
    for gamma in parab.levi_positive_roots:
        total = total + gamma.fw
    return total
