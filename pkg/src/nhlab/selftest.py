"""Built-in invariant suite, runnable from the command line.

Covers every module at rank <= 2 with small parameters; each check is a
named callable returning None on success and raising on failure.  The
CLI reports pass/fail counts and the first failure message per check.
"""

from fractions import Fraction

from . import chevalley, complexflag, koszul, kostant, repbuilder, rootsys
from .linalg import sparse_mul

_SYSTEMS = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]


def _check_root_system(type_label, rank):
    rs = rootsys.build_root_system(type_label, rank)
    for i in range(rank):
        assert rs.cartan[i][i] == 2
        for j in range(rank):
            if i != j:
                assert rs.cartan[i][j] <= 0
    assert all(c == 1 for c in rs.rho.coords)
    elements = rootsys.weyl_elements(rs)
    assert len(elements) == rs.weyl_order
    assert sum((-1) ** w.length for w in elements) == 0
    for w in elements:
        assert rootsys.length(w) == w.length
        for beta in rs.positive_roots:
            w.apply_root(beta)  # raises unless the image is again a root


def _check_reflection_involution(type_label, rank):
    rs = rootsys.build_root_system(type_label, rank)
    probes = [rs.rho, -rs.rho,
              rs.weight(*[Fraction(3, 2)] * rank),
              rs.weight(*[Fraction(-7, 3) + i for i in range(rank)])]
    for alpha in rs.positive_roots:
        for mu in probes:
            assert rootsys.reflect(alpha, rootsys.reflect(alpha, mu)) == mu


def _check_chevalley(type_label, rank):
    rs = rootsys.build_root_system(type_label, rank)
    alg = chevalley.build_chevalley(rs)
    labels = alg.basis
    for la in labels:
        for lb in labels:
            ab = alg.bracket_basis(la, lb)
            ba = alg.bracket_basis(lb, la)
            assert ab == {k: -v for k, v in ba.items()}
    for la in labels:
        for lb in labels:
            for lc in labels:
                acc = {}
                for x, y, z in ((la, lb, lc), (lb, lc, la), (lc, la, lb)):
                    inner = alg.bracket_basis(x, y)
                    for lbl, c in inner.items():
                        for lbl2, c2 in alg.bracket_basis(lbl, z).items():
                            acc[lbl2] = acc.get(lbl2, 0) + c * c2
                assert all(v == 0 for v in acc.values()), "Jacobi fails"


def _check_module(type_label, rank):
    rs = rootsys.build_root_system(type_label, rank)
    alg = chevalley.build_chevalley(rs)
    lam = rs.weight(*[-1 - (i % 2) for i in range(rank)])
    module = repbuilder.build_irrep(alg, lam)
    assert module.dimension == repbuilder.weyl_dimension(rs, lam)
    mults = module.weight_multiplicities()
    for w in rootsys.weyl_elements(rs):
        assert {w.apply(k): v for k, v in mults.items()} == mults
    n = module.dimension
    for la in alg.basis:
        for lb in alg.basis:
            want = {}
            for lbl, c in alg.bracket_basis(la, lb).items():
                for key, v in module.action[lbl].items():
                    want[key] = want.get(key, 0) + c * v
            got = sparse_mul(module.action[la], module.action[lb], n)
            for key, v in sparse_mul(module.action[lb], module.action[la], n).items():
                got[key] = got.get(key, 0) - v
                if not got[key]:
                    del got[key]
            assert {k: v for k, v in want.items() if v} == got


def _check_homology(type_label, rank):
    rs = rootsys.build_root_system(type_label, rank)
    alg = chevalley.build_chevalley(rs)
    lam = rs.weight(*[-2] * rank) if (type_label, rank) != ("G", 2) \
        else rs.weight(-1, -2)
    module = repbuilder.build_irrep(alg, lam)
    parab = rootsys.parabolic(rs, ())
    cx = koszul.build_complex(module, parab)
    d = parab.dim_nilradical
    for (p, nu), mat in cx.differentials.items():
        if (p + 1, nu) in cx.differentials:
            comp = sparse_mul(mat, cx.differentials[(p + 1, nu)],
                              cx.block_dim(p, nu))
            assert not comp, "boundary does not square to zero"
    h = koszul.homology(cx)
    assert h.euler_characteristic() == 0 or d == 0
    pred = kostant.predict_borel(rs, lam)
    assert kostant.compare(pred, h) == []
    c = koszul.cohomology(module, parab)
    assert koszul.check_duality(h, c, parab) == []


def _check_parabolic(type_label, rank):
    if rank < 2:
        return
    rs = rootsys.build_root_system(type_label, rank)
    alg = chevalley.build_chevalley(rs)
    lam = rs.weight(*[-2] * rank)
    module = repbuilder.build_irrep(alg, lam)
    for i in range(1, rank + 1):
        parab = rootsys.parabolic(rs, (i,))
        pred = kostant.predict_parabolic(rs, lam, (i,))
        h = koszul.homology(koszul.build_complex(module, parab))
        assert kostant.compare(pred, h) == []


def _check_chains(type_label, rank):
    rs = rootsys.build_root_system(type_label, rank)
    n = len(rs.positive_roots)
    lam = -2 * rs.rho
    chi = complexflag.CharacterParam.from_shifted(rs, lam)
    seen = {}
    for chain in complexflag.enumerate_chains(rs, n):
        pred = complexflag.predict_standard(rs, chi, chain)
        assert pred.degree == n - chain.weyl_element.length
        key = chain.weyl_element.word
        value = (pred.degree, pred.character_differential)
        assert seen.setdefault(key, value) == value
        assert complexflag.chi_w(chain) == chain.weyl_element.apply(rs.rho) - rs.rho
    assert len(seen) == rs.weyl_order


def checks():
    """The named check list run by the `selftest` command."""
    out = []
    for t, r in _SYSTEMS:
        name = "%s%d" % (t, r)
        out.append(("rootsys[%s]" % name,
                    lambda t=t, r=r: _check_root_system(t, r)))
        out.append(("reflections[%s]" % name,
                    lambda t=t, r=r: _check_reflection_involution(t, r)))
        out.append(("chevalley[%s]" % name,
                    lambda t=t, r=r: _check_chevalley(t, r)))
        out.append(("repbuilder[%s]" % name,
                    lambda t=t, r=r: _check_module(t, r)))
        out.append(("koszul-kostant[%s]" % name,
                    lambda t=t, r=r: _check_homology(t, r)))
        if r >= 2 and (t, r) != ("G", 2):
            out.append(("parabolic[%s]" % name,
                        lambda t=t, r=r: _check_parabolic(t, r)))
        if (t, r) in (("A", 1), ("A", 2)):
            out.append(("chains[%s]" % name,
                        lambda t=t, r=r: _check_chains(t, r)))
    return out


def run_all():
    """Run every check; returns (results, passed, failed)."""
    results = []
    passed = failed = 0
    for name, fn in checks():
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            results.append({"name": name, "status": "fail",
                            "detail": "%s: %s" % (type(exc).__name__, exc)})
            failed += 1
        else:
            results.append({"name": name, "status": "pass"})
            passed += 1
    return results, passed, failed
