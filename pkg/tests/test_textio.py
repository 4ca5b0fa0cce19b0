import pytest

from isgact import (
    ParseError,
    ValidationFailure,
    format_action,
    format_structure,
    load_action,
    load_structure,
    parse_action,
    parse_structure,
    structure_ref,
)
from isgact.catalog import catalog, four_point_action, three_point_action


def test_fixture_structure_matches_the_builder(fixtures_dir, hybrid):
    loaded = load_structure(fixtures_dir / "eight_arrow.isgd")
    assert loaded == hybrid


def test_fixture_actions_match_the_builders(fixtures_dir, hybrid):
    action, isg = load_action(fixtures_dir / "four_point.pact")
    assert isg == hybrid
    assert action == four_point_action(hybrid)
    three, _ = load_action(fixtures_dir / "three_point_global.pact")
    assert three == three_point_action(hybrid)


def test_structure_round_trip_on_every_catalog_entry():
    for entry in catalog():
        text = format_structure(entry.structure)
        doc = parse_structure(text)
        assert doc.table == entry.structure.table
        assert doc.inverse == entry.structure.inverse_map()
        assert format_structure(entry.structure) == text  # printing is stable


def test_action_round_trip_on_every_catalog_action():
    for entry in catalog():
        for ca in entry.actions:
            text = format_action(ca.action, "ref.isgd")
            back = parse_action(text, entry.structure)
            assert back == ca.action
            assert format_action(back, "ref.isgd") == text


def test_structure_with_empty_mul_parses():
    text = "[objects]\nu\nv\n\n[arrows]\nf : u -> v\n\n[mul]\n"
    doc = parse_structure(text)
    assert doc.table.arrows == ("f",)
    assert doc.table.composable_pairs() == []


def test_mul_line_on_a_non_composable_pair_is_a_parse_error():
    text = "[objects]\nu\nv\n\n[arrows]\nf : u -> v\n\n[mul]\nf f = f\n"
    with pytest.raises(ParseError) as err:
        parse_structure(text)
    assert "not composable" in str(err.value)
    assert err.value.line == 9


def test_missing_composable_pair_is_a_parse_error():
    text = "[objects]\nu\n\n[arrows]\ne : u -> u\n\n[mul]\n"
    with pytest.raises(ParseError) as err:
        parse_structure(text)
    assert "without a product" in str(err.value)


def test_assorted_structure_parse_errors():
    with pytest.raises(ParseError, match="unknown object"):
        parse_structure("[objects]\nu\n\n[arrows]\ne : u -> w\n\n[mul]\n")
    with pytest.raises(ParseError, match="name : dom -> cod"):
        parse_structure("[objects]\nu\n\n[arrows]\ne u u\n\n[mul]\n")
    with pytest.raises(ParseError, match="unknown section"):
        parse_structure("[stuff]\n")
    with pytest.raises(ParseError, match="missing section"):
        parse_structure("[objects]\nu\n")
    with pytest.raises(ParseError, match="before any section"):
        parse_structure("u v\n")


def test_parse_error_positions_name_the_offending_token():
    text = "[objects]\nu\n\n[arrows]\ne : u -> u\n\n[mul]\ne e = ghost\n"
    with pytest.raises(ParseError) as err:
        parse_structure(text)
    assert err.value.line == 8
    assert err.value.col == 7   # "ghost" starts at column 7


def test_action_parse_errors(hybrid):
    good = format_action(four_point_action(hybrid), "eight_arrow.isgd")
    with pytest.raises(ParseError, match="structure = "):
        parse_action("[carrier] = 1\n", hybrid)
    with pytest.raises(ParseError, match="unknown arrow"):
        parse_action(good.replace("[map a]", "[map zz]"), hybrid)
    with pytest.raises(ParseError, match="missing \\[map a\\]"):
        parse_action("\n".join(l for l in good.splitlines() if not l.startswith("[map a]")), hybrid)
    with pytest.raises(ParseError, match="x->y"):
        parse_action(good.replace("1->4", "1=4"), hybrid)
    with pytest.raises(ParseError, match="not in the carrier"):
        parse_action(good.replace("[domain a] = 4", "[domain a] = 9"), hybrid)
    with pytest.raises(ParseError, match="duplicate"):
        parse_action(good.replace("[map a] = 1->4", "[map a] = 1->4 1->4"), hybrid)


def test_structure_ref_extraction(fixtures_dir):
    text = (fixtures_dir / "four_point.pact").read_text()
    assert structure_ref(text) == "eight_arrow.isgd"


def test_declared_inverse_mismatch_fails_loading(tmp_path, hybrid):
    inv = hybrid.inverse_map()
    inv["a"], inv["a*"] = "a", "a*"   # wrong on purpose
    text = format_structure(hybrid.table) + "\n[inverse]\n"
    text += "".join(f"{s} = {t}\n" for s, t in inv.items())
    target = tmp_path / "bad_inverse.isgd"
    target.write_text(text)
    with pytest.raises(ValidationFailure) as err:
        load_structure(target)
    assert "declared-inverse" in err.value.report.tags()


def test_loading_a_structure_without_inverses_reports_it(tmp_path):
    # a lone crossing arrow admits no pseudo-inverse at all
    target = tmp_path / "no_inverse.isgd"
    target.write_text("[objects]\nu\nv\n\n[arrows]\nf : u -> v\n\n[mul]\n")
    with pytest.raises(ValidationFailure) as err:
        load_structure(target)
    assert "no-inverse" in err.value.report.tags()
