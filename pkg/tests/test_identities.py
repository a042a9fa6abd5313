import pytest

from qparity.builders import ProductSpec
from qparity.identities import (
    IdentityEntry,
    get_identity,
    identity_catalog,
    identity_ids,
    verify_entry,
    verify_identity,
)

SLATER = ["eq7", "eq18", "eq23", "eq27", "eq29", "eq31", "eq32", "eq33", "eq36", "eq50"]


def test_catalog_contents():
    ids = identity_ids()
    assert len(ids) == len(set(ids))
    assert [i for i in ids if i.startswith("jtp.")] == [
        "jtp.3.1", "jtp.4.1", "jtp.5.2", "jtp.6.1", "jtp.6.2",
        "jtp.7.1", "jtp.7.2", "jtp.7.3", "jtp.8.3", "jtp.12.2"]
    assert [f"slater.{s}" for s in SLATER] == [i for i in ids if i.startswith("slater.")]
    for need in ("gauss", "cube", "cauchy.q2.q4", "step.c1.chain", "step.c2.theta-split",
                 "step.c3.theta-split", "step.c8.pentagonal-split"):
        assert need in ids


def test_cauchy_printed_twice_is_one_entry():
    e = get_identity("cauchy.q2.q4")
    assert "andpage20" in e.aliases and "cauchy" in e.aliases
    assert sum(1 for x in identity_catalog() if "andpage20" in x.aliases) == 1


def test_unknown_identity_lists_known():
    with pytest.raises(KeyError, match="slater.eq7"):
        get_identity("nope")


@pytest.mark.parametrize("iid", ["slater.eq36", "slater.eq50"])
def test_slater_examples_at_500(iid):
    assert verify_identity(iid, 500).status == "pass"


@pytest.mark.parametrize("iid", [i for i in identity_ids() if not i.startswith("step.")])
def test_exact_identities(iid):
    rep = verify_identity(iid, 1000)
    assert rep.status == "pass", rep
    assert rep.first_failure is None


@pytest.mark.parametrize("iid", [i for i in identity_ids() if i.startswith("step.")])
def test_mod2_steps(iid):
    assert get_identity(iid).mode == "mod2"
    assert verify_identity(iid, 2000).passed


def test_dropping_a_factor_is_caught():
    e = get_identity("slater.eq50")
    rhs = ProductSpec(e.rhs.factors[:-1])
    rep = verify_entry(IdentityEntry("perturbed", e.lhs, rhs), 500)
    assert rep.status == "fail"
    assert isinstance(rep.first_failure, int) and 0 < rep.first_failure <= 500


def test_mod2_step_is_not_exact():
    # the chains only hold mod 2; exactly they already differ
    e = get_identity("step.c1.chain")
    assert verify_entry(IdentityEntry("exact", e.lhs, e.rhs), 200).status == "fail"


def test_report_json_shape():
    d = verify_identity("gauss", 100).to_dict()
    assert list(d) == ["id", "order", "status", "first_failure", "elapsed_ms"]
    assert d["id"] == "gauss" and d["order"] == 100
