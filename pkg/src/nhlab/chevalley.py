"""Chevalley basis with integer structure constants.

The basis is H_1..H_rank (simple coroot elements) followed by E_alpha for
every root, positives before negatives in the canonical root order.
Elements are plain dicts mapping basis labels to rational coefficients;
labels are ('h', i) with 1-based i, or ('e', simple_coords).

Signs follow the extraspecial-pair convention: for each non-simple
positive root gamma the decomposition gamma = eps + eta with eps minimal
in the canonical order gets N = +(p+1), and every other constant is
forced from those seeds by antisymmetry, the Chevalley involution
N(-a,-b) = -N(a,b), the length relation for triples summing to zero,
and one Jacobi identity per remaining special pair.  Correctness is
certified by an exhaustive Jacobi sweep in the tests rather than trusted.
"""

import json
import os
from fractions import Fraction

from .errors import InvalidParameter
from .rootsys import Weight, pairing


def _pos_table_lookup(table, a_coords, b_coords):
    v = table.get((a_coords, b_coords))
    if v is not None:
        return v
    v = table.get((b_coords, a_coords))
    if v is not None:
        return -v
    raise KeyError((a_coords, b_coords))


def _general_n(rs, table, a, b):
    """Structure constant N(a, b) for arbitrary-sign roots with a+b a root."""
    if a.height > 0 and b.height > 0:
        return _pos_table_lookup(table, a.simple_coords, b.simple_coords)
    if a.height < 0 and b.height < 0:
        return -_general_n(rs, table, rs.negate_root(a), rs.negate_root(b))
    if a.height < 0:
        return -_general_n(rs, table, b, a)
    # a positive, b negative; reduce via the triple (a, b, -(a+b)).
    c = rs.root_from_simple_coords(
        tuple(x + y for x, y in zip(a.simple_coords, b.simple_coords)))
    if c.height > 0:
        # N(a,b) = |c|^2/|a|^2 * N(b, -c), and N(b,-c) = -N(-b, c).
        val = -Fraction(rs.root_norm2(c), rs.root_norm2(a)) \
            * _general_n(rs, table, rs.negate_root(b), c)
    else:
        # N(a,b) = |c|^2/|b|^2 * N(-c, a).
        val = Fraction(rs.root_norm2(c), rs.root_norm2(b)) \
            * _general_n(rs, table, rs.negate_root(c), a)
    if val.denominator != 1:
        raise AssertionError("non-integral structure constant for %r,%r" % (a, b))
    return int(val)


def _string_down_length(rs, beta, alpha):
    """Largest k with beta - k*alpha still a root."""
    k = 0
    probe = list(beta.simple_coords)
    while True:
        probe = [p - a for p, a in zip(probe, alpha.simple_coords)]
        if rs.is_root(probe):
            k += 1
        else:
            return k


def _build_positive_table(rs):
    table = {}
    order = {r.simple_coords: i for i, r in enumerate(rs.positive_roots)}
    for gamma in rs.positive_roots:
        if gamma.height == 1:
            continue
        decomps = []
        for alpha in rs.positive_roots:
            if order[alpha.simple_coords] >= order[gamma.simple_coords]:
                break
            rest = tuple(g - a for g, a in zip(gamma.simple_coords,
                                               alpha.simple_coords))
            if rs.is_root(rest) and sum(rest) > 0:
                beta = rs.root_from_simple_coords(rest)
                if order[alpha.simple_coords] < order[rest]:
                    decomps.append((alpha, beta))
        decomps.sort(key=lambda ab: order[ab[0].simple_coords])
        eps, eta = decomps[0]
        seed = _string_down_length(rs, eta, eps) + 1
        table[(eps.simple_coords, eta.simple_coords)] = seed
        for alpha, beta in decomps[1:]:
            # Jacobi on (E_{-alpha}, E_eps, E_eta), all terms land in the
            # beta root space; solve for N(alpha, beta).
            neg_alpha = rs.negate_root(alpha)
            acc = Fraction(0)
            diff = tuple(e - a for e, a in zip(eps.simple_coords,
                                               alpha.simple_coords))
            if rs.is_root(diff):
                mid = rs.root_from_simple_coords(diff)
                acc += _general_n(rs, table, neg_alpha, eps) \
                    * _general_n(rs, table, mid, eta)
            diff = tuple(e - a for e, a in zip(eta.simple_coords,
                                               alpha.simple_coords))
            if rs.is_root(diff):
                mid = rs.root_from_simple_coords(diff)
                acc += _general_n(rs, table, eta, neg_alpha) \
                    * _general_n(rs, table, mid, eps)
            val = Fraction(rs.root_norm2(gamma),
                           rs.root_norm2(beta) * seed) * acc
            if val.denominator != 1 or val == 0:
                raise AssertionError(
                    "structure constant solve failed at %r + %r" % (alpha, beta))
            table[(alpha.simple_coords, beta.simple_coords)] = int(val)
    return table


class ChevalleyAlgebra:
    """A concrete reductive Lie algebra over the rationals.

    Immutable after construction; bracket computations are table lookups.
    """

    def __init__(self, rs, positive_table):
        self.rs = rs
        self._table = positive_table
        labels = [("h", i) for i in range(1, rs.rank + 1)]
        labels += [("e", r.simple_coords) for r in rs.positive_roots]
        labels += [("e", rs.negate_root(r).simple_coords)
                   for r in rs.positive_roots]
        self.basis = tuple(labels)

    # -- element constructors ---------------------------------------------

    def h(self, i):
        if not 1 <= i <= self.rs.rank:
            raise InvalidParameter("Cartan index out of range")
        return {("h", i): Fraction(1)}

    def e(self, root):
        return {("e", root.simple_coords): Fraction(1)}

    def coroot_element(self, root):
        """The element H_alpha with mu(H_alpha) = alpha^vee(mu)."""
        return {("h", j + 1): Fraction(c)
                for j, c in enumerate(root.coroot_coords) if c}

    # -- structure constants ----------------------------------------------

    def n_constant(self, a, b):
        """N(a, b) where a, b and a+b are all roots."""
        return _general_n(self.rs, self._table, a, b)

    def bracket_basis(self, la, lb):
        """Bracket of two basis labels as a sparse element dict."""
        rs = self.rs
        if la[0] == "h" and lb[0] == "h":
            return {}
        if la[0] == "h":
            root = rs.root_from_simple_coords(lb[1])
            c = root.fw.coords[la[1] - 1]
            return {lb: Fraction(c)} if c else {}
        if lb[0] == "h":
            root = rs.root_from_simple_coords(la[1])
            c = root.fw.coords[lb[1] - 1]
            return {la: Fraction(-c)} if c else {}
        a = rs.root_from_simple_coords(la[1])
        b = rs.root_from_simple_coords(lb[1])
        total = tuple(x + y for x, y in zip(la[1], lb[1]))
        if all(t == 0 for t in total):
            return dict(self.coroot_element(a))
        if rs.is_root(total):
            return {("e", total): Fraction(self.n_constant(a, b))}
        return {}

    def bracket(self, x, y):
        """Bilinear antisymmetric extension of the structure constants."""
        for el in (x, y):
            for label in el:
                if label[0] == "h":
                    if not 1 <= label[1] <= self.rs.rank:
                        raise InvalidParameter("unknown basis label %r" % (label,))
                elif not self.rs.is_root(label[1]):
                    raise InvalidParameter("unknown basis label %r" % (label,))
        out = {}
        for la, ca in x.items():
            if not ca:
                continue
            for lb, cb in y.items():
                if not cb:
                    continue
                for lc, cc in self.bracket_basis(la, lb).items():
                    s = out.get(lc, Fraction(0)) + ca * cb * cc
                    if s:
                        out[lc] = s
                    elif lc in out:
                        del out[lc]
        return out

    def weight_of_label(self, label):
        """The 'h'-eigenvalue vector of a basis label (0 for Cartan)."""
        if label[0] == "h":
            return Weight([0] * self.rs.rank)
        return self.rs.root_from_simple_coords(label[1]).fw


def _cache_path(cache_dir, rs):
    return os.path.join(cache_dir, "chevalley_%s%d.json" % (rs.type_label, rs.rank))


def build_chevalley(rs, cache_dir=None):
    """Construct (or load from cache) the Chevalley algebra of ``rs``.

    The cache stores the positive-pair constants only; everything else is
    derived deterministically, so results are identical with or without.
    """
    if rs._chevalley_cache is not None and cache_dir is None:
        return rs._chevalley_cache
    table = None
    path = None
    if cache_dir is not None:
        path = _cache_path(cache_dir, rs)
        if os.path.exists(path):
            with open(path, "r", encoding="ascii") as fh:
                data = json.load(fh)
            table = {(tuple(a), tuple(b)): int(n) for a, b, n in data["constants"]}
    if table is None:
        table = _build_positive_table(rs)
        if path is not None:
            os.makedirs(cache_dir, exist_ok=True)
            payload = {
                "schema": "nh-lab/1",
                "type": rs.type_label,
                "rank": rs.rank,
                "constants": sorted([list(a), list(b), n]
                                    for (a, b), n in table.items()),
            }
            with open(path, "w", encoding="ascii") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
    alg = ChevalleyAlgebra(rs, table)
    if rs._chevalley_cache is None:
        rs._chevalley_cache = alg
    return alg


def bracket(alg, x, y):
    """Module-level alias for :meth:`ChevalleyAlgebra.bracket`."""
    return alg.bracket(x, y)
