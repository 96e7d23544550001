"""Combinatorial predictions for nilradical homology of irreducibles.

For the Borel case the prediction is one multiplicity-one entry per Weyl
element w, placed in degree length(w) at weight w(lambda) + rho.  For a
general parabolic the entries run over the coset representatives whose
action keeps lambda antidominant on the Levi, and each entry expands to
the full torus character of the Levi irreducible with that lowest
weight.  ``compare`` confronts an expanded prediction with a computed
table entry by entry.
"""

from .chevalley import build_chevalley
from .errors import InvalidParameter
from .koszul import HomologyTable
from .repbuilder import levi_restricted_multiplicities
from .rootsys import (DEFAULT_WEYL_BOUND, coset_reps,
                      is_antidominant_regular_integral, parabolic,
                      weyl_elements)


class KostantPrediction:
    """Extreme-weight entries plus the expanded multiplicity table."""

    __slots__ = ("rs", "lam", "parabolic", "entries", "expanded")

    def __init__(self, rs, lam, parab, entries, expanded):
        self.rs = rs
        self.lam = lam
        self.parabolic = parab
        self.entries = entries
        self.expanded = expanded

    def __repr__(self):
        return "KostantPrediction(%d entries)" % (len(self.entries),)


def predict_borel(rs, lam, bound=DEFAULT_WEYL_BOUND):
    """Borel-case prediction: one entry per Weyl group element.

    The degree-zero entry is always (0, lam + rho): the lowest weight.
    """
    if not is_antidominant_regular_integral(rs, lam):
        raise InvalidParameter(
            "prediction needs an antidominant regular integral weight")
    entries = []
    table = {}
    for w in weyl_elements(rs, bound):
        nu = w.apply(lam) + rs.rho
        entries.append((w.length, nu, w, 1))
        key = (w.length, nu)
        if key in table:
            raise AssertionError("extreme weights collide; weight not regular?")
        table[key] = 1
    expanded = HomologyTable("homology", table)
    return KostantPrediction(rs, lam, parabolic(rs, ()), tuple(entries), expanded)


def predict_parabolic(rs, lam, levi_indices, bound=DEFAULT_WEYL_BOUND):
    """Parabolic prediction with Levi constituents expanded to torus weights."""
    if not is_antidominant_regular_integral(rs, lam):
        raise InvalidParameter(
            "prediction needs an antidominant regular integral weight")
    parab = parabolic(rs, levi_indices)
    alg = build_chevalley(rs)
    entries = []
    table = {}
    for w in coset_reps(rs, levi_indices, lam, bound):
        nu = w.apply(lam) + rs.rho
        entries.append((w.length, nu, w, 1))
        for weight, mult in levi_restricted_multiplicities(alg, parab, nu).items():
            key = (w.length, weight)
            table[key] = table.get(key, 0) + mult
    expanded = HomologyTable("homology", table)
    return KostantPrediction(rs, lam, parab, tuple(entries), expanded)


def compare(prediction, computed):
    """Entry-by-entry discrepancy report; empty list means exact match."""
    if not isinstance(computed, HomologyTable):
        raise InvalidParameter("compare expects a HomologyTable")
    if computed.variant != prediction.expanded.variant:
        raise InvalidParameter("cannot compare tables of different variants")
    keys = set(prediction.expanded.entries) | set(computed.entries)
    report = []
    for key in sorted(keys, key=lambda k: (k[0], k[1])):
        want = prediction.expanded.entries.get(key, 0)
        got = computed.entries.get(key, 0)
        if want != got:
            report.append({"degree": key[0], "weight": key[1],
                           "predicted": want, "computed": got})
    return report
