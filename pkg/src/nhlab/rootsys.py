"""Root systems, Weyl groups, and parabolic combinatorics.

Conventions fixed here and relied on everywhere else:

* Weights live in fundamental-weight coordinates, so the pairing of a
  weight with the i-th simple coroot is simply ``coords[i]``.
* Column convention: the j-th simple root has fundamental-weight
  coordinates equal to the j-th column of the Cartan matrix, i.e.
  ``alpha_j = sum_i cartan[i][j] * omega_i``.
* Positive roots are ordered by height, ties broken so that the root
  with the larger leading simple-root coordinate comes first (this puts
  alpha_1 before alpha_2, matching the 1-based root numbering used by
  the command line).
* Weyl group elements store the lexicographically least reduced word.
  Simple-reflection indices are 1-based throughout the public API.
"""

from fractions import Fraction

from .errors import InvalidParameter, ResourceLimitExceeded

DEFAULT_WEYL_BOUND = 10 ** 6

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class Weight:
    """A weight, stored as exact rational fundamental-weight coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)

    @property
    def rank(self):
        return len(self.coords)

    def __add__(self, other):
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return Weight(s * a for a in self.coords)

    def _check(self, other):
        if not isinstance(other, Weight) or len(other.coords) != len(self.coords):
            raise InvalidParameter("weight rank mismatch")

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coords)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def __repr__(self):
        return "Weight(%s)" % (", ".join(str(c) for c in self.coords))


class Root:
    """A root carrying all three coordinate systems used by the package.

    ``simple_coords`` are integers in the simple-root basis, ``fw`` is the
    same vector in fundamental-weight coordinates, and ``coroot_coords``
    expresses the dual root in the simple-coroot basis (also integers).
    """

    __slots__ = ("simple_coords", "fw", "coroot_coords", "height")

    def __init__(self, simple_coords, fw, coroot_coords):
        self.simple_coords = tuple(int(c) for c in simple_coords)
        self.fw = fw
        self.coroot_coords = tuple(int(c) for c in coroot_coords)
        self.height = sum(self.simple_coords)

    @property
    def is_positive(self):
        return self.height > 0

    def __eq__(self, other):
        return isinstance(other, Root) and self.simple_coords == other.simple_coords

    def __hash__(self):
        return hash(self.simple_coords)

    def __repr__(self):
        return "Root(%s)" % (",".join(str(c) for c in self.simple_coords))


def _root_sort_key(coords):
    # Height first; within a height, bigger leading coordinate first.
    return (sum(coords), tuple(-c for c in coords))


def _cartan_matrix(type_label, rank):
    """Cartan matrix with entries C[i][j] = <alpha_j, alpha_i^vee>."""
    n = rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if type_label in ("A", "B", "C"):
        for i in range(n - 1):
            edge(i, i + 1)
        if type_label == "B":
            # last simple root short: <alpha_{n-1}, alpha_n^vee> = -2
            c[n - 1][n - 2] = -2
        elif type_label == "C":
            c[n - 2][n - 1] = -2
    elif type_label == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif type_label == "E":
        # Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif type_label == "F":
        edge(0, 1)
        edge(1, 2, cij=-1, cji=-2)
        edge(2, 3)
    elif type_label == "G":
        edge(0, 1, cij=-3, cji=-1)
    return tuple(tuple(row) for row in c)


_WEYL_ORDER_EXCEPTIONAL = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def _weyl_order(type_label, rank):
    import math

    if type_label == "A":
        return math.factorial(rank + 1)
    if type_label in ("B", "C"):
        return 2 ** rank * math.factorial(rank)
    if type_label == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    return _WEYL_ORDER_EXCEPTIONAL[(type_label, rank)]


class RootSystem:
    """Immutable combinatorial core of a finite root system.

    Built by :func:`build_root_system`; do not construct directly.
    """

    def __init__(self, type_label, rank, cartan, simple_roots, positive_roots,
                 rho, weyl_order, eps):
        self.type_label = type_label
        self.rank = rank
        self.cartan = cartan
        self.simple_roots = simple_roots
        self.positive_roots = positive_roots
        self.rho = rho
        self.weyl_order = weyl_order
        self._eps = eps  # simple-root length normalization, rationals
        self._by_simple = {}
        self._by_fw = {}
        for r in positive_roots:
            neg = Root([-c for c in r.simple_coords], -r.fw,
                       [-c for c in r.coroot_coords])
            for root in (r, neg):
                self._by_simple[root.simple_coords] = root
                self._by_fw[root.fw.coords] = root
        self._pos_index = {r.simple_coords: i for i, r in enumerate(positive_roots)}
        self._cartan_inverse = self._invert_cartan()
        self._weyl_cache = None
        self._chevalley_cache = None

    def _invert_cartan(self):
        n = self.rank
        aug = [[Fraction(self.cartan[i][j]) for j in range(n)]
               + [Fraction(1 if j == i else 0) for j in range(n)]
               for i in range(n)]
        for c in range(n):
            piv = next(i for i in range(c, n) if aug[i][c])
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
        return tuple(tuple(row[n:]) for row in aug)

    # -- lookups ---------------------------------------------------------

    def root_from_simple_coords(self, coords):
        r = self._by_simple.get(tuple(int(c) for c in coords))
        if r is None:
            raise InvalidParameter("not a root of %s%d: %s"
                                   % (self.type_label, self.rank, tuple(coords)))
        return r

    def is_root(self, coords):
        return tuple(int(c) for c in coords) in self._by_simple

    def root_from_fw(self, weight):
        r = self._by_fw.get(weight.coords)
        if r is None:
            raise InvalidParameter("weight %r is not a root" % (weight,))
        return r

    def negate_root(self, root):
        return self._by_simple[tuple(-c for c in root.simple_coords)]

    def positive_root_index(self, root):
        return self._pos_index[root.simple_coords]

    def all_roots(self):
        return list(self.positive_roots) + [self.negate_root(r)
                                            for r in self.positive_roots]

    # -- coordinates and forms -------------------------------------------

    def weight(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction)):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise InvalidParameter("expected %d coordinates, got %d"
                                   % (self.rank, len(coords)))
        return Weight(coords)

    def zero_weight(self):
        return Weight([0] * self.rank)

    def to_simple_coords(self, weight):
        """Express a weight in the simple-root basis (rationals)."""
        inv = self._cartan_inverse
        return tuple(sum(inv[i][j] * weight.coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    def root_norm2(self, root):
        """Squared length of a root under the normalized invariant form."""
        c = root.simple_coords
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            if c[i]:
                for j in range(n):
                    if c[j]:
                        total += c[i] * c[j] * self._eps[i] * self.cartan[i][j]
        return total

    def __repr__(self):
        return "RootSystem(%s%d)" % (self.type_label, self.rank)


def build_root_system(type_label, rank):
    """Construct the root system of the given Cartan type.

    Positive roots are generated from the Cartan matrix by closing root
    strings upward in height, which needs no data beyond the matrix.
    """
    if not isinstance(rank, int) or type_label not in _VALID_RANKS \
            or not _VALID_RANKS[type_label](rank):
        raise InvalidParameter("invalid Cartan type (%r, %r)" % (type_label, rank))
    cartan = _cartan_matrix(type_label, rank)

    # Positive roots in simple-root coordinates via root-string closure.
    def pairing_with_simple(coords, i):
        return sum(cartan[i][j] * coords[j] for j in range(rank))

    pos = {tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)}
    layer = list(pos)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in pos:
                        p += 1
                    else:
                        break
                if p - pairing_with_simple(beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in pos:
                        pos.add(up)
                        nxt.append(up)
        layer = nxt

    ordered = sorted(pos, key=_root_sort_key)

    # Length normalization: eps_i * C[i][j] = eps_j * C[j][i] across edges.
    eps = [None] * rank
    eps[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(rank):
            if j != i and cartan[i][j] != 0 and eps[j] is None:
                eps[j] = eps[i] * Fraction(cartan[i][j], cartan[j][i])
                todo.append(j)
    eps = tuple(eps)

    def make_root(coords):
        fw = Weight(sum(cartan[i][j] * coords[j] for j in range(rank))
                    for i in range(rank))
        norm2 = sum(coords[i] * coords[j] * eps[i] * cartan[i][j]
                    for i in range(rank) for j in range(rank) if coords[i] and coords[j])
        coroot = []
        for j in range(rank):
            d = Fraction(2) * eps[j] * coords[j] / norm2
            if d.denominator != 1:
                raise InvalidParameter("non-integral coroot for %s" % (coords,))
            coroot.append(int(d))
        return Root(coords, fw, coroot)

    roots = tuple(make_root(c) for c in ordered)
    rho = Weight([1] * rank)
    return RootSystem(type_label, rank, cartan,
                      tuple(r for r in roots if r.height == 1),
                      roots, rho, _weyl_order(type_label, rank), eps)


def pairing(mu, alpha):
    """Evaluate the dual root on a weight: alpha^vee(mu)."""
    if len(mu.coords) != len(alpha.coroot_coords):
        raise InvalidParameter("rank mismatch between weight and root")
    return sum(Fraction(d) * c for d, c in zip(alpha.coroot_coords, mu.coords))


def reflect(alpha, mu):
    """Reflection of a weight in the hyperplane of a root."""
    return mu - pairing(mu, alpha) * alpha.fw


class WeylElement:
    """A Weyl group element: reduced word plus its matrix on fw coordinates.

    ``word`` is the lexicographically least reduced word (1-based simple
    reflection indices); ``matrix`` rows act on fundamental-weight
    coordinates, entries are integers.
    """

    __slots__ = ("rs", "word", "matrix", "length")

    def __init__(self, rs, word, matrix):
        self.rs = rs
        self.word = tuple(word)
        self.matrix = matrix
        self.length = len(self.word)

    def apply(self, mu):
        if len(mu.coords) != self.rs.rank:
            raise InvalidParameter("rank mismatch")
        return Weight(sum(row[k] * mu.coords[k] for k in range(self.rs.rank))
                      for row in self.matrix)

    def apply_root(self, root):
        return self.rs.root_from_fw(self.apply(root.fw))

    def __mul__(self, other):
        if other.rs is not self.rs:
            raise InvalidParameter("elements of different Weyl groups")
        return weyl_from_matrix(self.rs, _matmul(self.matrix, other.matrix))

    def inverse(self):
        m = _identity(self.rs.rank)
        for i in reversed(self.word):
            m = _matmul(m, _simple_reflection_matrix(self.rs, i))
        return weyl_from_matrix(self.rs, m)

    def is_identity(self):
        return not self.word

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        if not self.word:
            return "WeylElement(e)"
        return "WeylElement(%s)" % "*".join("s%d" % i for i in self.word)


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _simple_reflection_matrix(rs, i):
    """Matrix of s_i on fw coordinates: mu -> mu - mu[i] * alpha_i."""
    n = rs.rank
    col = [rs.cartan[j][i - 1] for j in range(n)]
    return tuple(tuple((1 if j == k else 0) - (col[j] if k == i - 1 else 0)
                       for k in range(n)) for j in range(n))


def _apply_matrix(m, coords):
    return tuple(sum(row[k] * coords[k] for k in range(len(coords))) for row in m)


def weyl_from_matrix(rs, matrix):
    """Build a WeylElement from its matrix, recovering the canonical word.

    The word is found by greedy descent peeling on the image of rho:
    repeatedly strip the smallest left descent.  This produces the
    lexicographically least reduced word.
    """
    n = rs.rank
    v = list(_apply_matrix(matrix, rs.rho.coords))
    word = []
    limit = len(rs.positive_roots)
    while any(x < 0 for x in v):
        if len(word) > limit:
            raise InvalidParameter("matrix is not a Weyl group element")
        i = next(k + 1 for k, x in enumerate(v) if x < 0)
        word.append(i)
        # v <- s_i(v)
        coeff = v[i - 1]
        for j in range(n):
            v[j] -= coeff * rs.cartan[j][i - 1]
    if tuple(v) != rs.rho.coords:
        raise InvalidParameter("matrix is not a Weyl group element")
    return WeylElement(rs, word, matrix)


def identity_element(rs):
    return WeylElement(rs, (), _identity(rs.rank))


def simple_reflection(rs, i):
    if not 1 <= i <= rs.rank:
        raise InvalidParameter("simple reflection index %r out of range" % (i,))
    return WeylElement(rs, (i,), _simple_reflection_matrix(rs, i))


def weyl_elements(rs, bound=DEFAULT_WEYL_BOUND):
    """Enumerate the full Weyl group, sorted by (length, word).

    Breadth-first closure over left multiplication by simple reflections,
    deduplicated by the image of rho (rho is regular, so the image
    determines the element).
    """
    if rs.weyl_order > bound:
        raise ResourceLimitExceeded(
            "Weyl group of %s%d has order %d, exceeding the bound %d"
            % (rs.type_label, rs.rank, rs.weyl_order, bound))
    if rs._weyl_cache is not None:
        return rs._weyl_cache
    gens = [_simple_reflection_matrix(rs, i) for i in range(1, rs.rank + 1)]
    seen = {rs.rho.coords: _identity(rs.rank)}
    frontier = [_identity(rs.rank)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                gm = _matmul(g, m)
                key = _apply_matrix(gm, rs.rho.coords)
                if key not in seen:
                    seen[key] = gm
                    nxt.append(gm)
        frontier = nxt
    elements = [weyl_from_matrix(rs, m) for m in seen.values()]
    elements.sort(key=lambda w: (w.length, w.word))
    if len(elements) != rs.weyl_order:  # pragma: no cover - closure cannot miss
        raise AssertionError("Weyl enumeration found %d of %d elements"
                             % (len(elements), rs.weyl_order))
    rs._weyl_cache = elements
    return elements


def longest_element(rs, bound=DEFAULT_WEYL_BOUND):
    return weyl_elements(rs, bound)[-1]


def length(w):
    """Length of a Weyl element, recomputed from root counting.

    The reduced-word length and the number of positive roots sent
    negative are computed independently and must agree.
    """
    count = sum(1 for beta in w.rs.positive_roots
                if not w.apply_root(beta).is_positive)
    if count != len(w.word):
        raise InvalidParameter("reduced word of %r is not reduced" % (w,))
    return count


def act(w, mu):
    """Apply a Weyl element to a weight."""
    return w.apply(mu)


def is_regular(rs, lam):
    """No positive coroot vanishes on the weight."""
    return all(pairing(lam, beta) != 0 for beta in rs.positive_roots)


def is_antidominant_regular_integral(rs, lam):
    """Every positive coroot pairs to a negative integer."""
    for beta in rs.positive_roots:
        v = pairing(lam, beta)
        if v.denominator != 1 or v >= 0:
            return False
    return True


def dominantize(rs, mu, indices=None):
    """The dominant representative of a weight's orbit.

    With ``indices`` restricted to a subset S, dominantizes only across
    the walls of the standard parabolic W_S.
    """
    if indices is None:
        indices = range(1, rs.rank + 1)
    indices = sorted(indices)
    coords = list(mu.coords)
    changed = True
    while changed:
        changed = False
        for i in indices:
            if coords[i - 1] < 0:
                coeff = coords[i - 1]
                for j in range(rs.rank):
                    coords[j] -= coeff * rs.cartan[j][i - 1]
                changed = True
    return Weight(coords)


def weyl_orbit(rs, lam, bound=DEFAULT_WEYL_BOUND):
    """The set of weights in the Weyl orbit of ``lam``."""
    if rs.weyl_order > bound:
        raise ResourceLimitExceeded(
            "orbit enumeration needs |W| = %d <= %d" % (rs.weyl_order, bound))
    seen = {lam.coords}
    frontier = [lam.coords]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, rs.rank + 1):
                coeff = v[i - 1]
                img = tuple(v[j] - coeff * rs.cartan[j][i - 1]
                            for j in range(rs.rank))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return {Weight(v) for v in seen}


def infinitesimal_character_equal(rs, lam1, lam2, bound=DEFAULT_WEYL_BOUND):
    """Whether two weights parametrize the same Weyl orbit."""
    if len(lam1.coords) != rs.rank or len(lam2.coords) != rs.rank:
        raise InvalidParameter("rank mismatch")
    return lam2 in weyl_orbit(rs, lam1, bound)


class InfinitesimalCharacter:
    """A Weyl orbit in the weight space, compared up to orbit equality."""

    def __init__(self, rs, orbit_representative, bound=DEFAULT_WEYL_BOUND):
        self.rs = rs
        self.orbit_representative = orbit_representative
        self._bound = bound
        self._canonical = None

    def canonical(self):
        if self._canonical is None:
            orbit = weyl_orbit(self.rs, self.orbit_representative, self._bound)
            self._canonical = min(w.coords for w in orbit)
        return self._canonical

    def __eq__(self, other):
        return (isinstance(other, InfinitesimalCharacter)
                and self.rs is other.rs
                and self.canonical() == other.canonical())

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "InfinitesimalCharacter(W * %r)" % (self.orbit_representative,)


class ParabolicSubset:
    """Levi/nilradical split of the positive roots, determined by S.

    ``levi_simple_indices`` is the 1-based index set S; a positive root
    lies in the Levi exactly when its support is contained in S.
    """

    __slots__ = ("rs", "levi_simple_indices", "nilradical_roots",
                 "levi_positive_roots", "sigma")

    def __init__(self, rs, levi_simple_indices, nilradical_roots,
                 levi_positive_roots, sigma):
        self.rs = rs
        self.levi_simple_indices = levi_simple_indices
        self.nilradical_roots = nilradical_roots
        self.levi_positive_roots = levi_positive_roots
        self.sigma = sigma

    @property
    def dim_nilradical(self):
        return len(self.nilradical_roots)

    def __repr__(self):
        return "ParabolicSubset(S=%s)" % (sorted(self.levi_simple_indices),)


def parabolic(rs, levi_indices):
    """Split positive roots into Levi and nilradical parts.

    S = full set gives an empty nilradical; S = empty set gives the
    Borel case where the nilradical is all of the positive roots.
    """
    s = frozenset(int(i) for i in levi_indices)
    for i in s:
        if not 1 <= i <= rs.rank:
            raise InvalidParameter("Levi index %d out of range 1..%d"
                                   % (i, rs.rank))
    levi = []
    nilrad = []
    for beta in rs.positive_roots:
        support = {j + 1 for j, c in enumerate(beta.simple_coords) if c}
        (levi if support <= s else nilrad).append(beta)
    sigma = Weight([0] * rs.rank)
    for beta in nilrad:
        sigma = sigma + beta.fw
    return ParabolicSubset(rs, s, tuple(nilrad), tuple(levi), sigma)


def coset_reps(rs, levi_indices, lam, bound=DEFAULT_WEYL_BOUND):
    """Minimal coset representatives selected by Levi antidominance.

    Returns the w for which w(lam) pairs negatively with every positive
    Levi coroot; for antidominant regular integral lam this picks exactly
    one element per W_S coset.
    """
    if not is_antidominant_regular_integral(rs, lam):
        raise InvalidParameter(
            "coset representatives need an antidominant regular integral weight")
    par = parabolic(rs, levi_indices)
    reps = []
    for w in weyl_elements(rs, bound):
        wl = w.apply(lam)
        if all(pairing(wl, gamma) < 0 for gamma in par.levi_positive_roots):
            reps.append(w)
    return reps
