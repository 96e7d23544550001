"""The standard homology complex of a nilradical acting on a module.

Chains in degree p are spanned by pairs (T, b) where T is a p-subset of
the nilradical roots and b a module basis vector; the pair sits in the
weight block (sum of T) + weight(b).  The boundary is the usual
Chevalley-Eilenberg formula

    d(x_1^...^x_p (x) m) = sum_i (-1)^(i+1) x_1^..^x_i^..^x_p (x) x_i.m
        + sum_{i<j} (-1)^(i+j) [x_i,x_j]^x_1^..^x_i^..^x_j^..^x_p (x) m

which preserves weight blocks, so homology is computed block by block
with exact rational ranks.  The cochain side uses the dual coboundary on
Hom(Lambda^p n, M); a degree-p cochain supported on the subset T and
vector b has weight weight(b) - (sum of T).
"""

import itertools
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import linalg
from .errors import InvalidParameter


class HomologyTable:
    """Map (degree, weight) -> multiplicity for one variant."""

    __slots__ = ("variant", "entries")

    def __init__(self, variant, entries):
        if variant not in ("homology", "cohomology"):
            raise InvalidParameter("unknown table variant %r" % (variant,))
        self.variant = variant
        self.entries = dict(entries)

    @property
    def total_dims(self):
        out = {}
        for (p, _), m in self.entries.items():
            out[p] = out.get(p, 0) + m
        return out

    def sorted_entries(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def euler_characteristic(self):
        return sum((-1) ** p * m for (p, _), m in self.entries.items())

    def __eq__(self, other):
        return (isinstance(other, HomologyTable)
                and self.variant == other.variant
                and self.entries == other.entries)

    def __repr__(self):
        return "HomologyTable(%s, %d entries)" % (self.variant, len(self.entries))


class KoszulComplex:
    """Weight-graded chain spaces and boundary matrices.

    ``blocks[(p, weight)]`` lists the chain basis (subset tuple, module
    index); ``differentials[(p, weight)]`` is the sparse matrix of the
    boundary from that block into the (p-1, weight) block.
    """

    __slots__ = ("module", "parabolic", "blocks", "differentials", "weights")

    def __init__(self, module, parab, blocks, differentials, weights):
        self.module = module
        self.parabolic = parab
        self.blocks = blocks
        self.differentials = differentials
        self.weights = weights

    def block_dim(self, p, weight):
        return len(self.blocks.get((p, weight), ()))


def _insertion_sign(sorted_tuple, new_item):
    """Parity sign for wedging a new letter in front and resorting."""
    pos = 0
    for x in sorted_tuple:
        if x < new_item:
            pos += 1
    return -1 if pos % 2 else 1


def build_complex(module, parab):
    """Assemble the chain spaces and boundary matrices for (module, parab)."""
    alg = module.algebra
    if parab.rs is not alg.rs:
        raise InvalidParameter("module and parabolic live over different algebras")
    nil = parab.nilradical_roots
    d = len(nil)
    nil_index = {r.simple_coords: i for i, r in enumerate(nil)}
    subset_weight = {(): alg.rs.weight(*([0] * alg.rs.rank))}

    # Bracket table restricted to the nilradical (closure is a theorem;
    # trust but verify while assembling).
    pair_bracket = {}
    for i in range(d):
        for j in range(i + 1, d):
            total = tuple(a + b for a, b in zip(nil[i].simple_coords,
                                                nil[j].simple_coords))
            if alg.rs.is_root(total):
                if total not in nil_index:
                    raise AssertionError("nilradical is not bracket-closed")
                pair_bracket[(i, j)] = (nil_index[total],
                                        alg.n_constant(nil[i], nil[j]))

    action_cols = {i: module.action_columns(("e", nil[i].simple_coords))
                   for i in range(d)}

    blocks = {}
    for p in range(d + 1):
        for subset in itertools.combinations(range(d), p):
            wsum = subset_weight.get(subset)
            if wsum is None:
                wsum = subset_weight[subset[:-1]] + nil[subset[-1]].fw
                subset_weight[subset] = wsum
            for b in range(module.dimension):
                nu = module.basis_weights[b] + wsum
                blocks.setdefault((p, nu), []).append((subset, b))
    row_index = {key: {chain: r for r, chain in enumerate(chains)}
                 for key, chains in blocks.items()}

    differentials = {}
    for (p, nu), chains in blocks.items():
        if p == 0:
            continue
        target_rows = row_index.get((p - 1, nu), {})
        entries = {}
        for col, (subset, b) in enumerate(chains):
            # module-action terms
            for i_pos, t in enumerate(subset):
                sign = -1 if i_pos % 2 else 1  # (-1)^(i+1), i 1-based
                rest = subset[:i_pos] + subset[i_pos + 1:]
                for row_b, val in action_cols[t][b]:
                    row = target_rows[(rest, row_b)]
                    s = entries.get((row, col), Fraction(0)) + sign * val
                    if s:
                        entries[(row, col)] = s
                    elif (row, col) in entries:
                        del entries[(row, col)]
            # bracket terms
            for i_pos in range(len(subset)):
                for j_pos in range(i_pos + 1, len(subset)):
                    hit = pair_bracket.get((subset[i_pos], subset[j_pos]))
                    if hit is None:
                        continue
                    u, n = hit
                    rest = tuple(t for k, t in enumerate(subset)
                                 if k not in (i_pos, j_pos))
                    if u in rest:
                        continue
                    sign = (-1) ** (i_pos + j_pos)  # (-1)^(i+j) with 1-based i, j
                    coeff = sign * _insertion_sign(rest, u) * n
                    new_subset = tuple(sorted(rest + (u,)))
                    row = target_rows[(new_subset, b)]
                    s = entries.get((row, col), Fraction(0)) + coeff
                    if s:
                        entries[(row, col)] = s
                    elif (row, col) in entries:
                        del entries[(row, col)]
        differentials[(p, nu)] = entries

    weights = sorted({nu for (_, nu) in blocks})
    return KoszulComplex(module, parab, blocks, differentials, weights)


def _block_rank(args):
    entries, nrows, ncols = args
    if nrows == 0 or ncols == 0 or not entries:
        return 0
    dense = linalg.sparse_to_dense(entries, nrows, ncols)
    return linalg.matrix_rank(dense, ncols)


def _ranks(keyed_matrices, threads):
    keys = sorted(keyed_matrices)
    jobs = [keyed_matrices[k] for k in keys]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_block_rank, jobs))
    else:
        results = [_block_rank(j) for j in jobs]
    return dict(zip(keys, results))


def homology(complex_, threads=1):
    """Homology multiplicities, weight block by weight block."""
    d = complex_.parabolic.dim_nilradical
    jobs = {}
    for (p, nu), entries in complex_.differentials.items():
        jobs[(p, nu)] = (entries,
                         complex_.block_dim(p - 1, nu),
                         complex_.block_dim(p, nu))
    ranks = _ranks(jobs, threads)
    table = {}
    for (p, nu) in complex_.blocks:
        dim = complex_.block_dim(p, nu)
        r_out = ranks.get((p, nu), 0)
        r_in = ranks.get((p + 1, nu), 0)
        mult = dim - r_out - r_in
        if mult < 0:
            raise AssertionError("negative homology rank: boundary is broken")
        if mult:
            table[(p, nu)] = mult
    if d >= 1:
        chain_euler = sum((-1) ** p * complex_.block_dim(p, nu)
                          for (p, nu) in complex_.blocks)
        hom_euler = sum((-1) ** p * m for (p, _), m in table.items())
        if chain_euler != hom_euler:
            raise AssertionError("Euler characteristic mismatch")
    return HomologyTable("homology", table)


def _cochain_data(module, parab):
    alg = module.algebra
    nil = parab.nilradical_roots
    d = len(nil)
    nil_index = {r.simple_coords: i for i, r in enumerate(nil)}
    pairs_summing = {i: [] for i in range(d)}
    for a in range(d):
        for b in range(a + 1, d):
            total = tuple(x + y for x, y in zip(nil[a].simple_coords,
                                                nil[b].simple_coords))
            if total in nil_index:
                pairs_summing[nil_index[total]].append(
                    (a, b, alg.n_constant(nil[a], nil[b])))
    return nil, d, pairs_summing


def cohomology(module, parab, threads=1):
    """Cohomology of Hom(Lambda^p n, M) under the dual coboundary."""
    alg = module.algebra
    if parab.rs is not alg.rs:
        raise InvalidParameter("module and parabolic live over different algebras")
    nil, d, pairs_summing = _cochain_data(module, parab)
    action_cols = {i: module.action_columns(("e", nil[i].simple_coords))
                   for i in range(d)}

    blocks = {}
    subset_weight = {(): alg.rs.weight(*([0] * alg.rs.rank))}
    for p in range(d + 1):
        for subset in itertools.combinations(range(d), p):
            wsum = subset_weight.get(subset)
            if wsum is None:
                wsum = subset_weight[subset[:-1]] + nil[subset[-1]].fw
                subset_weight[subset] = wsum
            for b in range(module.dimension):
                nu = module.basis_weights[b] - wsum
                blocks.setdefault((p, nu), []).append((subset, b))
    row_index = {key: {chain: r for r, chain in enumerate(chains)}
                 for key, chains in blocks.items()}

    coboundaries = {}
    for (p, nu), chains in blocks.items():
        if p == d:
            continue
        target_rows = row_index.get((p + 1, nu), {})
        entries = {}

        def add(row, col, val):
            s = entries.get((row, col), Fraction(0)) + val
            if s:
                entries[(row, col)] = s
            elif (row, col) in entries:
                del entries[(row, col)]

        for col, (subset, b) in enumerate(chains):
            in_subset = set(subset)
            # (-1)^(i+1) x_i . f(... without x_i ...)
            for u in range(d):
                if u in in_subset:
                    continue
                new_subset = tuple(sorted(subset + (u,)))
                i_pos = new_subset.index(u)  # 0-based; sign (-1)^(i+1), 1-based
                sign = -1 if i_pos % 2 else 1
                for row_b, val in action_cols[u][b]:
                    add(target_rows[(new_subset, row_b)], col, sign * val)
            # (-1)^(i+j) f([x_i, x_j] ^ ...)
            for s_pos, s_idx in enumerate(subset):
                rest = subset[:s_pos] + subset[s_pos + 1:]
                rest_set = set(rest)
                eval_sign = _insertion_sign(rest, s_idx)
                for a, b2, n in pairs_summing[s_idx]:
                    if a in rest_set or b2 in rest_set:
                        continue
                    new_subset = tuple(sorted(rest + (a, b2)))
                    i_pos = new_subset.index(a)
                    j_pos = new_subset.index(b2)
                    sign = (-1) ** (i_pos + j_pos)  # (-1)^(i+j) with 1-based i, j
                    add(target_rows[(new_subset, b)], col,
                        sign * eval_sign * n)
        coboundaries[(p, nu)] = entries

    jobs = {}
    for (p, nu), entries in coboundaries.items():
        jobs[(p, nu)] = (entries,
                         len(blocks.get((p + 1, nu), ())),
                         len(blocks.get((p, nu), ())))
    ranks = _ranks(jobs, threads)
    table = {}
    for (p, nu) in blocks:
        dim = len(blocks[(p, nu)])
        r_out = ranks.get((p, nu), 0)
        r_in = ranks.get((p - 1, nu), 0)
        mult = dim - r_out - r_in
        if mult < 0:
            raise AssertionError("negative cohomology rank: coboundary is broken")
        if mult:
            table[(p, nu)] = mult
    return HomologyTable("cohomology", table)


def check_duality(hom_table, coh_table, parab):
    """Compare multiplicities under H_p = H^{d-p} (x) (top wedge of n).

    Returns a list of violation records; empty means the duality holds
    on the nose.  The top exterior power contributes the weight shift
    sigma = sum of the nilradical roots.
    """
    if hom_table.variant != "homology" or coh_table.variant != "cohomology":
        raise InvalidParameter("check_duality expects (homology, cohomology)")
    d = parab.dim_nilradical
    sigma = parab.sigma
    violations = []
    keys = set()
    for (p, nu) in hom_table.entries:
        keys.add((p, nu))
    for (q, nu) in coh_table.entries:
        keys.add((d - q, nu + sigma))
    for (p, nu) in sorted(keys, key=lambda k: (k[0], k[1])):
        left = hom_table.entries.get((p, nu), 0)
        right = coh_table.entries.get((d - p, nu - sigma), 0)
        if left != right:
            violations.append({"degree": p, "weight": nu,
                               "homology": left, "cohomology": right})
    return violations
