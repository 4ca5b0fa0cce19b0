"""Property suites: algebra laws, axiom-system agreement, construction invariants."""

import pytest
from hypothesis import given, settings, strategies as st

from isgact import (
    build_globalization,
    build_seed_set,
    check_derived_propositions,
    close_equivalence,
    format_action,
    format_structure,
    idempotents,
    natural_leq,
    natural_leq_diagnostic,
    parse_action,
    parse_structure,
    seeds_related,
    validate_e_axioms,
    validate_p_axioms,
)
from isgact.catalog import catalog, random_partial_action

from worked_data import audit_equivalence_lemmas

CATALOG = catalog()
STRUCTURES = [entry.structure for entry in CATALOG]
ACTIONS = [ca.action for entry in CATALOG for ca in entry.actions]
GLOBAL_SLOTS = [
    (entry, i) for entry in CATALOG for i, ca in enumerate(entry.actions) if ca.global_tag
]

seeds = st.integers(min_value=0, max_value=2**32 - 1)
slots = st.sampled_from(GLOBAL_SLOTS)


# ---------------------------------------------------------------------------
# algebra laws, scanned exhaustively per structure


@pytest.mark.parametrize("isg", STRUCTURES, ids=[e.name for e in CATALOG])
def test_inverse_laws(isg):
    for s in isg.arrows:
        assert isg.inv(isg.inv(s)) == s
        assert isg.mul(s, isg.inv(s)) in idempotents(isg)
    for s, t in isg.table.composable_pairs():
        assert isg.inv(isg.mul(s, t)) == isg.mul(isg.inv(t), isg.inv(s))


@pytest.mark.parametrize("isg", STRUCTURES, ids=[e.name for e in CATALOG])
def test_idempotents_commute_and_sit_below_their_factors(isg):
    idem = idempotents(isg)
    for e in idem:
        for f in idem:
            if not isg.composable(e, f):
                continue
            assert isg.composable(f, e)
            ef = isg.mul(e, f)
            assert ef == isg.mul(f, e)
            assert natural_leq(isg, ef, e) and natural_leq(isg, ef, f)


@pytest.mark.parametrize("isg", STRUCTURES, ids=[e.name for e in CATALOG])
def test_conjugated_idempotents(isg):
    idem = idempotents(isg)
    for s in isg.arrows:
        for e in idem:
            if not isg.composable(s, e):
                continue
            conj = isg.mul(isg.mul(s, e), isg.inv(s))
            assert conj in idem
            assert natural_leq(isg, conj, isg.mul(s, isg.inv(s)))


@pytest.mark.parametrize("isg", STRUCTURES, ids=[e.name for e in CATALOG])
def test_natural_order_laws(isg):
    arrows = isg.arrows
    for s in arrows:
        for t in arrows:
            assert natural_leq_diagnostic(isg, s, t).agree, (s, t)
            assert natural_leq(isg, s, t) == natural_leq(isg, isg.inv(s), isg.inv(t))
    # compatibility with composition
    below = {t: [s for s in arrows if natural_leq(isg, s, t)] for t in arrows}
    for t1 in arrows:
        for t2 in arrows:
            if not isg.composable(t1, t2):
                continue
            for s1 in below[t1]:
                for s2 in below[t2]:
                    if not isg.composable(s1, s2):
                        continue
                    assert natural_leq(isg, isg.mul(s1, s2), isg.mul(t1, t2))


# ---------------------------------------------------------------------------
# actions: both axiom systems agree; derived facts hold


@pytest.mark.parametrize("action", ACTIONS)
def test_axiom_systems_agree_on_catalog_actions(action):
    assert validate_p_axioms(action).ok == validate_e_axioms(action).ok is True
    assert check_derived_propositions(action).ok


@pytest.mark.parametrize("action", ACTIONS)
def test_theta_pairs_invert_each_other(action):
    isg = action.semigroupoid
    for s in isg.arrows:
        for x in action.dom_of[s]:
            assert action.theta[s][action.theta[isg.inv(s)][x]] == x


@given(slot=slots, seed=seeds)
@settings(max_examples=60, deadline=None)
def test_seeded_restrictions_validate_under_both_systems(slot, seed):
    entry, index = slot
    action = random_partial_action(entry, index, seed)
    assert validate_p_axioms(action).ok
    assert validate_e_axioms(action).ok
    assert check_derived_propositions(action).ok


@given(slot=slots, seed=seeds)
@settings(max_examples=25, deadline=None)
def test_seeded_restrictions_round_trip_through_text(slot, seed):
    entry, index = slot
    action = random_partial_action(entry, index, seed)
    text = format_action(action, "ref.isgd")
    assert parse_action(text, entry.structure) == action
    structure_text = format_structure(entry.structure)
    assert parse_structure(structure_text).table == entry.structure.table


# ---------------------------------------------------------------------------
# the construction


@pytest.mark.parametrize("action", ACTIONS)
def test_seed_relation_is_reflexive_and_symmetric(action):
    seed_list = build_seed_set(action)
    for p in seed_list:
        assert seeds_related(action, p, p)
    for i, p in enumerate(seed_list):
        for q in seed_list[i + 1:]:
            assert seeds_related(action, p, q) == seeds_related(action, q, p)


@given(slot=slots, seed=seeds)
@settings(max_examples=25, deadline=None)
def test_lemma_audits_on_seeded_restrictions(slot, seed):
    entry, index = slot
    action = random_partial_action(entry, index, seed)
    quotient = close_equivalence(build_seed_set(action), action)
    audit_equivalence_lemmas(action, quotient)


@given(slot=slots, seed=seeds)
@settings(max_examples=25, deadline=None)
def test_globalizing_twice_stabilizes_the_class_count(slot, seed):
    entry, index = slot
    action = random_partial_action(entry, index, seed)
    first = build_globalization(action)
    second = build_globalization(first.global_action)
    assert len(second.global_action.carrier) == len(first.global_action.carrier)
