"""Acceptance gate: one test per criterion, each recorded as a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the summary lines appear at the
end of the run) or ``python tests/test_acceptance.py`` for the lines alone.
"""

import time

import pytest

from qparity import partitions
from qparity.families import CongruenceClaim, quad_residues_mod
from qparity.identities import identity_ids, verify_identity
from qparity.parity import scan_zero_progressions, verify_congruence, verify_theorem
from qparity.series import ParitySeries

EXACT_IDS = ([f"slater.{e}" for e in ("eq7", "eq18", "eq23", "eq27", "eq29", "eq31", "eq32", "eq33",
                                      "eq36", "eq50")]
             + ["gauss", "cube", "cauchy.q2.q4"]
             + [f"jtp.{P}.{r}" for P, r in ((3, 1), (4, 1), (5, 2), (6, 1), (6, 2), (7, 1), (7, 2),
                                           (7, 3), (8, 3), (12, 2))])

CHARACTERIZED = ["c1", "c4", "c5", "c6", "c7", "c9", "c10"]
C8_FIRST = [0, 1, 2, 5, 7, 8, 12, 14, 15, 19, 21, 22, 26, 28, 29, 33, 35, 36, 40, 42, 43, 47]
C8_SECOND = [0, 2, 3, 7, 9, 10, 11, 14, 16, 17, 21, 23, 24, 28, 30, 31, 35, 37, 38, 42, 44, 45]
C9_OF_11 = [(11,), (9, 2), (8, 3), (7, 4), (7, 1, 1, 1, 1), (6, 5), (6, 3, 2), (5, 4, 2),
            (4, 3, 1, 1, 1, 1)]


def crit1():
    t0 = time.perf_counter()
    bad = [i for i in EXACT_IDS if verify_identity(i, 1000).status != "pass"]
    dt = time.perf_counter() - t0
    return not bad and dt < 60, f"{len(EXACT_IDS) - len(bad)}/{len(EXACT_IDS)} exact at N=1000, {dt:.1f}s"


def crit2():
    c2 = partitions.gf_series("c2", 11)[7]
    pairs2 = [p.parts for p in partitions.bruteforce_list("c2", 7)]
    c9 = partitions.gf_series("c9", 11)[11]
    pairs9 = sorted(p.parts for p in partitions.bruteforce_list("c9", 11))
    ok = c2 == 2 and pairs2 == [(6, 1), (3, 3, 1)] and c9 == 9 and pairs9 == sorted(C9_OF_11)
    return ok, f"c2(7)={c2} {pairs2}, c9(11)={c9}"


def crit3():
    tids = [f"T-{p}" for p in CHARACTERIZED] + ["T-c3-mod5"]
    bad = {t: verify_theorem(t, 2000).first_failure for t in tids}
    bad = {t: f for t, f in bad.items() if f is not None}
    return not bad, f"{len(tids) - len(bad)}/{len(tids)} characterizations at N=2000 {bad or ''}"


def crit3_c12():
    rep = verify_theorem("T-c12", 2000)
    return rep.passed, f"c12 support vs 6j^2+4j at N=2000: first_failure={rep.first_failure}"


def crit4():
    checks = [("T-c2", 2000), ("T-c3-mod11", 2000), ("T-c11-mod11", 2000), ("T-c8", 4900)]
    bad = {t: verify_theorem(t, n).first_failure for t, n in checks}
    bad = {t: f for t, f in bad.items() if f is not None}
    return not bad, f"{len(checks) - len(bad)}/{len(checks)} congruence families {bad or ''}"


def crit4_c12():
    rep = verify_theorem("C-c12-odd", 2000)
    return rep.passed, f"c12(2n+1) even at N=2000: first_failure={rep.first_failure}"


def crit5():
    t0 = time.perf_counter()
    bad = []
    for pid in partitions.ids():
        s = partitions.gf_series(pid, 60)
        for n in range(61):
            if partitions.bruteforce_count(pid, n) != s[n]:
                bad.append((pid, n))
    dt = time.perf_counter() - t0
    return not bad and dt < 600, f"12 ids x n<=60, mismatches={bad[:3]}, {dt:.1f}s"


def crit6():
    got = [quad_residues_mod(6, 1, 49), quad_residues_mod(10, 1, 49),
           quad_residues_mod(3, 1, 5), quad_residues_mod(1, 1, 5, delta=2)]
    want = [C8_FIRST, C8_SECOND, [0, 2, 4], [0, 1, 3]]
    return got == want, "mod 49 lists and mod 5 facts"


def crit7():
    import random

    got = {pid: scan_zero_progressions(partitions.gf_parity(pid, 2000), m, 20)
           for pid, m in (("c2", 5), ("c3", 11), ("c11", 11))}
    ok = got == {"c2": [2], "c3": [5, 7, 9], "c11": [5, 7, 9]}
    rng = random.Random(7)
    unsound = 0
    for _ in range(100):
        if rng.random() < 0.5:
            p = partitions.gf_parity(rng.choice(partitions.ids()), 2000)
        else:
            p = ParitySeries(2000, rng.getrandbits(2001) & rng.getrandbits(2001) & rng.getrandbits(2001))
        m = rng.randint(2, 60)
        for r in scan_zero_progressions(p, m, 20):
            unsound += not verify_congruence(p, CongruenceClaim(m, r)).passed
    return ok and unsound == 0, f"scans {got}, unsound outputs in 100 trials={unsound}"


def crit8():
    steps = [i for i in identity_ids() if i.startswith("step.")]
    bad = [i for i in steps if not verify_identity(i, 2000).passed]
    return len(steps) == 4 and not bad, f"{len(steps) - len(bad)}/{len(steps)} mod-2 chains at N=2000"


CRITERIA = [
    ("1 identity suite", crit1),
    ("2 published anchors c2(7), c9(11)", crit2),
    ("3 characterizations (c1,c3-mod5,c4..c7,c9,c10)", crit3),
    ("3 characterization c12", crit3_c12),
    ("4 congruences (c2,c3,c8,c11)", crit4),
    ("4 congruence c12(2n+1)", crit4_c12),
    ("5 oracle equivalence", crit5),
    ("6 residue lists", crit6),
    ("7 scanner rediscovery and soundness", crit7),
    ("8 mod-2 proof-step chains", crit8),
]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0].replace(" ", "_") for c in CRITERIA])
def test_criterion(name, check, criterion):
    ok, detail = check()
    criterion(name, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for name, check in CRITERIA:
        ok, detail = check()
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
