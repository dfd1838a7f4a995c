"""Path and tree data model: validation, parsing, serialization."""

import pytest
from hypothesis import given

from peakmod import (
    DuplicatePositionError,
    FamilySpec,
    IllegalStepError,
    LatticePath,
    NegativeHeightError,
    NodeLabel,
    ParseError,
    PositionOutOfRangeError,
    PositionalTree,
    WrongEndHeightError,
    height_profile,
    level,
    parse_path,
    render_path,
    tree_from_json,
    tree_from_json_text,
    tree_to_json,
    validate,
)
from peakmod.core import DOWN, UP

from conftest import K2, MOTZKIN, k_dyck_paths


class TestFamilySpec:
    def test_basic(self):
        spec = FamilySpec(2, {1: 1, 3: 2}, end_height=5)
        assert spec.levels == ((1, 1), (3, 2))
        assert spec.ell == 2 and spec.residue == 1
        assert spec.color_count(3) == 2 and spec.color_count(2) == 0

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            FamilySpec(0)
        with pytest.raises(ValueError):
            FamilySpec(1, {0: 1})
        with pytest.raises(ValueError):
            FamilySpec(1, {1: 0})
        with pytest.raises(ValueError):
            FamilySpec(1, end_height=-1)

    def test_empty_level_map_means_no_level_steps(self):
        assert not FamilySpec(2).has_levels
        with pytest.raises(IllegalStepError):
            validate(FamilySpec(2), [level(1, 1), UP, UP, DOWN])


class TestValidate:
    def test_smallest_2_dyck(self):
        p = validate(K2, [UP, UP, DOWN])
        assert p.down_size == 1
        assert p.text() == "uud"

    def test_negative_height(self):
        with pytest.raises(NegativeHeightError):
            validate(K2, [UP, DOWN])

    def test_figure_path(self):
        p = parse_path("uuduuduud", K2)
        assert p.down_size == 3

    def test_wrong_end_height(self):
        with pytest.raises(WrongEndHeightError):
            validate(K2, [UP])
        # the same steps are fine when the family ends at height 1
        p = validate(FamilySpec(2, end_height=1), [UP])
        assert p.end_height == 1

    def test_level_color_range(self):
        spec = FamilySpec(1, {2: 2})
        validate(spec, [level(2, 2)])
        with pytest.raises(IllegalStepError):
            validate(spec, [level(2, 3)])

    def test_lifted_start(self):
        # lifted paths may open with a down-step; heights are re-checked
        # from the actual start
        p = validate(K2, [DOWN, UP, UP], start_height=2)
        assert p.end_height == 2
        assert height_profile(p) == [2, 0, 1, 2]
        with pytest.raises(NegativeHeightError):
            validate(K2, [DOWN, UP, UP], start_height=1)

    def test_ballot_up_count(self):
        spec = FamilySpec(2, end_height=1)
        p = parse_path("uudu", spec)
        assert p.up_count == 2 * p.down_size + 1


class TestHeightProfile:
    def test_uud(self):
        assert height_profile(parse_path("uud", K2)) == [0, 1, 2, 0]

    def test_empty(self):
        assert height_profile(LatticePath(K2)) == [0]

    def test_uuduud(self):
        assert height_profile(parse_path("uuduud", K2)) == \
            [0, 1, 2, 0, 1, 2, 0]

    def test_level_steps_are_one_transition(self):
        p = parse_path("ul1_1dl1_1l1_1", MOTZKIN)
        assert height_profile(p) == [0, 1, 1, 0, 0, 0]
        assert p.path_length == 5
        assert len(p.steps) == 5


class TestPathText:
    def test_round_trip(self):
        assert render_path(parse_path("uud", K2)) == "uud"

    def test_whitespace_is_ignored(self):
        assert parse_path("u u d", K2) == parse_path("uud", K2)

    def test_motzkin_tokens(self):
        p = parse_path("ul1_1dl1_1l1_1", MOTZKIN)
        assert render_path(p) == "ul1_1dl1_1l1_1"

    def test_long_level_token(self):
        spec = FamilySpec(1, {3: 2})
        p = parse_path("l3_2", spec)
        assert p.steps[0] == level(3, 2)
        assert p.path_length == 3

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_path("uxd", K2)
        assert err.value.position == 1
        with pytest.raises(ParseError) as err:
            parse_path("ul1d", MOTZKIN)
        assert err.value.position == 3

    @given(k_dyck_paths())
    def test_round_trip_property(self, path):
        assert parse_path(render_path(path), path.spec) == path

    def test_round_trip_with_levels(self):
        from peakmod import gen_kac
        specs = (MOTZKIN, FamilySpec(1, {2: 1}), FamilySpec(2, {1: 2, 3: 1}))
        for spec in specs:
            for L in range(6):
                for p in gen_kac(spec, L):
                    assert parse_path(render_path(p), spec) == p


class TestTrees:
    def test_single_node(self):
        t = PositionalTree(3)
        assert tree_to_json(t) == {}
        assert tree_from_json({}, 3) == t

    def test_two_children(self):
        t = PositionalTree(3, ((1, PositionalTree(3)), (3, PositionalTree(3))))
        assert tree_to_json(t) == {"1": {}, "3": {}}
        assert tree_from_json({"1": {}, "3": {}}, 3) == t

    def test_empty_tree(self):
        assert tree_to_json(None) is None
        assert tree_from_json(None, 3) is None

    def test_duplicate_position(self):
        with pytest.raises(DuplicatePositionError):
            PositionalTree(3, ((1, PositionalTree(3)),
                               (1, PositionalTree(3))))
        with pytest.raises(DuplicatePositionError):
            tree_from_json_text('{"1": {}, "1": {}}', 3)

    def test_position_out_of_range(self):
        with pytest.raises(PositionOutOfRangeError):
            PositionalTree(3, ((4, PositionalTree(3)),))
        with pytest.raises(PositionOutOfRangeError):
            tree_from_json({"0": {}}, 3)

    def test_labels_round_trip(self):
        for text in ("r", "p0_2", "dd_3"):
            assert NodeLabel.parse(text).json_str() == text
        t = PositionalTree(2, (), NodeLabel.parse("p1_4"))
        assert tree_from_json(tree_to_json(t), 2) == t

    def test_label_display(self):
        assert NodeLabel.parse("p1_2").display() == "1_2"
        assert NodeLabel.parse("dd_3").display() == "d_3"
        assert NodeLabel.parse("r").display() == "r"

    def test_ten_node_labeled_tree_round_trips(self, example_path):
        from peakmod import path_to_labeled_tree
        tree = path_to_labeled_tree(example_path)
        assert tree.node_count() == 10
        assert tree_from_json(tree_to_json(tree), 3) == tree
        import json
        text = json.dumps(tree_to_json(tree))
        assert tree_from_json_text(text, 3) == tree

    def test_edge_count_invariant(self):
        leaf = PositionalTree(3)
        t = PositionalTree(3, ((2, PositionalTree(3, ((1, leaf),))),
                               (3, leaf)))
        from peakmod import e_vector
        assert sum(e_vector(t)) == t.node_count() - 1
