"""Chain walks across positive systems and standard-module predictions.

A chain is a sequence of roots where each entry is simple (a member and
indecomposable) in the positive system produced by the reflections taken
so far.  Reflections compose in reading order: after the chain
(gamma_1, ..., gamma_j) the positive system is

    P_j = s_{gamma_j}( ... s_{gamma_1}(P_0) ... ),   P_0 = the standard one,

and the accumulated Weyl element w_j satisfies P_j = w_j(P_0).  Each step
reflects the current system in one of its own simple roots, i.e. crosses
one wall of the current chamber, so chains are exactly gallery walks:
gamma_{j+1} = w_j(alpha_i) for a unique simple root alpha_i, and w_{j+1}
is w_j followed by that simple reflection on the right.

For a regular standard module attached to the base chamber, the walk
ending at w predicts homology concentrated in the single degree
N - length(w) (N the number of positive roots) with character
differential mu - (gamma_1 + ... + gamma_k); the sum of the chain roots
telescopes to rho - w(rho), so the prediction depends on w only.  The
empty chain is the base-point case: degree N, character mu itself.
"""

from .errors import ChainRejected, InvalidParameter
from .rootsys import (Weight, identity_element, is_antidominant_regular_integral,
                      reflect, simple_reflection)


class ChainOfSimpleRoots:
    """A validated chain with its intermediate positive systems."""

    __slots__ = ("rs", "roots", "weyl_element", "positive_systems",
                 "gallery_word")

    def __init__(self, rs, roots, weyl_element, positive_systems, gallery_word):
        self.rs = rs
        self.roots = roots
        self.weyl_element = weyl_element
        self.positive_systems = positive_systems
        # The word in the original simple reflections whose partial
        # products reproduce the walk; reduced iff len == weyl length.
        self.gallery_word = gallery_word

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return "ChainOfSimpleRoots(%s)" % (", ".join(repr(r) for r in self.roots),)


class CharacterParam:
    """Character datum: unshifted differential mu and shifted parameter."""

    __slots__ = ("base_differential", "lam")

    def __init__(self, base_differential, lam):
        if not isinstance(base_differential, Weight) or not isinstance(lam, Weight):
            raise InvalidParameter("character parameters must be weights")
        self.base_differential = base_differential
        self.lam = lam

    @classmethod
    def from_shifted(cls, rs, lam):
        return cls(lam + rs.rho, lam)

    def __repr__(self):
        return "CharacterParam(mu=%r)" % (self.base_differential,)


class StandardModulePrediction:
    """Single-degree homology prediction for a regular standard module."""

    __slots__ = ("chain", "degree", "character_differential",
                 "chi_w_differential")

    def __init__(self, chain, degree, character_differential, chi_w_differential):
        self.chain = chain
        self.degree = degree
        self.character_differential = character_differential
        self.chi_w_differential = chi_w_differential

    def __repr__(self):
        return ("StandardModulePrediction(degree=%d, weight=%r)"
                % (self.degree, self.character_differential))


def _decomposition_witness(system, target):
    """A pair of members of the system summing to the target, if any."""
    members = {r.simple_coords: r for r in system}
    for beta in system:
        rest = tuple(t - b for t, b in zip(target.simple_coords,
                                           beta.simple_coords))
        other = members.get(rest)
        if other is not None:
            return (beta, other)
    return None


def validate_chain(rs, entries):
    """Validate a chain given as Root objects or signed 1-based indices.

    Index k names the k-th positive root in canonical order; -k names its
    negative (later chain entries may be negative roots of the original
    system).  Rejections carry the offending position and, when the root
    is a member of the current system but decomposable, a witness pair.
    """
    system = list(rs.positive_roots)
    systems = [tuple(system)]
    roots = []
    word = []
    w = identity_element(rs)
    for pos, entry in enumerate(entries, start=1):
        if isinstance(entry, int):
            if entry == 0 or abs(entry) > len(rs.positive_roots):
                raise ChainRejected(
                    "chain index %d out of range at position %d" % (entry, pos),
                    pos)
            gamma = rs.positive_roots[abs(entry) - 1]
            if entry < 0:
                gamma = rs.negate_root(gamma)
        else:
            gamma = entry
        if gamma.simple_coords not in {r.simple_coords for r in system}:
            raise ChainRejected(
                "root %r is not in the current positive system (position %d)"
                % (gamma, pos), pos)
        witness = _decomposition_witness(system, gamma)
        if witness is not None:
            raise ChainRejected(
                "root %r is not simple at position %d: it decomposes as "
                "%r + %r in the current positive system"
                % (gamma, pos, witness[0], witness[1]),
                pos, witness)
        # gamma = w(alpha_i): the wall being crossed.
        alpha = w.inverse().apply_root(gamma)
        i = next(k + 1 for k, s in enumerate(rs.simple_roots) if s == alpha)
        word.append(i)
        w = w * simple_reflection(rs, i)
        system = [rs.root_from_fw(reflect(gamma, r.fw)) for r in system]
        roots.append(gamma)
        systems.append(tuple(system))
    return ChainOfSimpleRoots(rs, tuple(roots), w, tuple(systems), tuple(word))


def chi_w(chain):
    """Differential of the chain character: minus the sum of the chain roots."""
    total = Weight([0] * chain.rs.rank)
    for gamma in chain.roots:
        total = total - gamma.fw
    return total


def codim(rs, w):
    """Codimension of the symmetric-subgroup orbit indexed by w.

    For a connected complex group the orbits on the product of two flag
    varieties are twisted diagonals of dimension N + length(w), sitting
    in a space of dimension 2N, hence codimension N - length(w).
    """
    return len(rs.positive_roots) - w.length


def predict_standard(rs, chi, chain):
    """Homology prediction of a regular standard module along a chain."""
    if not is_antidominant_regular_integral(rs, chi.lam):
        raise InvalidParameter(
            "standard-module prediction needs an antidominant regular "
            "integral parameter, got %r" % (chi.lam,))
    if chi.base_differential != chi.lam + rs.rho:
        raise InvalidParameter("character differential is not lambda + rho")
    if chain.rs is not rs:
        raise InvalidParameter("chain belongs to a different root system")
    shift = chi_w(chain)
    return StandardModulePrediction(
        chain,
        codim(rs, chain.weyl_element),
        chi.base_differential + shift,
        shift,
    )


def enumerate_chains(rs, max_length):
    """All chains of length at most ``max_length``.

    At every step each simple root of the current positive system is a
    valid continuation and they are the images of the original simple
    roots under the accumulated element, so the enumeration is indexed by
    words over 1..rank.  Order: by length, then lexicographically on the
    gallery word.
    """
    out = [validate_chain(rs, ())]
    frontier = [out[0]]
    for _ in range(max_length):
        nxt = []
        for chain in frontier:
            w = chain.weyl_element
            for i in range(1, rs.rank + 1):
                gamma = w.apply_root(rs.simple_roots[i - 1])
                nxt.append(validate_chain(rs, chain.roots + (gamma,)))
        out.extend(nxt)
        frontier = nxt
    return out
