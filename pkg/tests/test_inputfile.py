"""Input-file parser: grammar, positions, defaults, spec building."""

import pytest

from fibrekit import InputError, ParseError, load_spec, parse_input

X3_TEXT = """\
# power-series example
ring powerseries x y
I [3,0] [2,1] [0,3]
J [3,0] [0,3]
n_max 8
"""

SG_TEXT = """\
ring semigroup 4 5 6 7
I 4 5 6
J 4
"""


def err(text):
    with pytest.raises(ParseError) as excinfo:
        parse_input(text)
    return excinfo.value


class TestHappyPaths:
    def test_powerseries_document(self):
        doc = parse_input(X3_TEXT)
        assert doc.ring.variables == ("x", "y")
        assert doc.i_gens == [(3, 0), (2, 1), (0, 3)]
        assert doc.j_gens == [(3, 0), (0, 3)]
        assert doc.k_gens == "maximal"
        assert doc.n_max == 8
        assert doc.n_check is None
        assert doc.fmt == "text"

    def test_semigroup_document(self):
        doc = parse_input(SG_TEXT)
        assert doc.ring.generators == (4, 5, 6, 7)
        assert doc.i_gens == [4, 5, 6]
        assert doc.j_gens == [4]

    def test_spec_building(self):
        doc, spec = load_spec(X3_TEXT)
        assert spec.I == doc.ring.ideal([(3, 0), (2, 1), (0, 3)])
        assert spec.K == doc.ring.maximal_ideal()
        assert spec.n_max == 8

    def test_explicit_k_and_format(self):
        text = (
            "ring powerseries x y\n"
            "I [2,0] [0,2]\n"
            "K [1,0] [0,1]\n"
            "format tree\n"
        )
        doc, spec = load_spec(text)
        assert doc.fmt == "tree"
        assert spec.K == doc.ring.maximal_ideal()

    def test_k_maximal_keyword(self):
        text = "ring powerseries x y\nI [2,0] [0,2]\nK maximal\n"
        doc, spec = load_spec(text)
        assert spec.K == doc.ring.maximal_ideal()

    def test_comments_blanks_and_separators(self):
        text = (
            "\n"
            "# leading comment\n"
            "ring powerseries x y   # trailing comment\n"
            "\n"
            "I [3 0], [2 1], [0 3]\n"
        )
        doc = parse_input(text)
        assert doc.i_gens == [(3, 0), (2, 1), (0, 3)]

    def test_n_check_directive(self):
        text = "ring powerseries x y\nI [2,0] [0,2]\nn_check 9\n"
        assert parse_input(text).n_check == 9


class TestPositions:
    def test_semigroup_gcd_position(self):
        e = err("ring semigroup 4 6\nI 4\n")
        assert (e.line, e.column) == (1, 16)
        assert "gcd" in e.bare_message
        assert str(e).startswith("line 1, column 16: ")

    def test_unclosed_bracket_position(self):
        e = err("ring powerseries x y\nI [3,0\n")
        assert (e.line, e.column) == (2, 3)
        assert "unclosed" in e.bare_message

    def test_duplicate_directive(self):
        e = err("ring powerseries x y\nI [2,0]\nI [0,2]\n")
        assert e.line == 3
        assert "duplicate directive 'I'" in e.bare_message
        assert "first on line 2" in e.bare_message

    def test_missing_ring(self):
        e = err("I [2,0] [0,2]\n")
        assert "before the ring line" in e.bare_message
        e = err("n_max 3\n")
        assert (e.line, e.column) == (1, 1)
        assert "no ring line" in e.bare_message

    def test_missing_i(self):
        e = err("ring powerseries x y\n")
        assert (e.line, e.column) == (1, 1)
        assert "no I line" in e.bare_message


class TestDirectiveValidation:
    def test_unknown_directive(self):
        assert "unknown directive 'foo'" in err(
            "ring powerseries x y\nI [2,0] [0,2]\nfoo 1\n"
        ).bare_message

    def test_unknown_ring_model(self):
        assert "unknown ring model" in err("ring widget 3\nI 3\n").bare_message

    def test_ring_needs_model_and_args(self):
        assert "ring needs a model" in err("ring\nI 3\n").bare_message
        assert "variable names" in err("ring powerseries\nI 3\n").bare_message
        assert "semigroup needs generators" in err("ring semigroup\nI 3\n").bare_message

    def test_duplicate_variable_names(self):
        e = err("ring powerseries x x\nI [2,0]\n")
        assert "distinct" in e.bare_message

    def test_generator_shape_mismatches(self):
        assert "bracketed exponent vector" in err(
            "ring powerseries x y\nI 3\n"
        ).bare_message
        assert "bare integers" in err(
            "ring semigroup 4 5 6 7\nI [4]\n"
        ).bare_message
        assert "exponent vector has 3 entries" in err(
            "ring powerseries x y\nI [1,2,3]\n"
        ).bare_message
        assert "empty exponent vector" in err(
            "ring powerseries x y\nI []\n"
        ).bare_message
        assert "at least one generator" in err(
            "ring powerseries x y\nI\n"
        ).bare_message

    def test_semigroup_membership_enforced(self):
        e = err("ring semigroup 4 5 6 7\nI 3\n")
        assert "not a member" in e.bare_message

    def test_integer_validation(self):
        assert "expected an integer" in err(
            "ring powerseries x y\nI [2,a]\n"
        ).bare_message
        assert "integer >= 0" in err(
            "ring powerseries x y\nI [2,-1]\n"
        ).bare_message
        assert "n_max takes one integer" in err(
            "ring powerseries x y\nI [2,0] [0,2]\nn_max 3 4\n"
        ).bare_message
        assert "integer >= 0" in err(
            "ring powerseries x y\nI [2,0] [0,2]\nn_max -1\n"
        ).bare_message
        assert "integer >= 1" in err(
            "ring powerseries x y\nI [2,0] [0,2]\nn_check 0\n"
        ).bare_message

    def test_format_validation(self):
        assert "format is 'text' or 'tree'" in err(
            "ring powerseries x y\nI [2,0] [0,2]\nformat json\n"
        ).bare_message


class TestSemanticErrorsFromSpec:
    def test_j_not_inside_i(self):
        text = "ring powerseries x y\nI [2,0] [0,2]\nJ [1,0]\n"
        with pytest.raises(InputError) as excinfo:
            load_spec(text)
        assert "J must be contained" in str(excinfo.value)

    def test_parse_errors_are_input_errors(self):
        # the exit-code contract groups parse errors with input errors
        assert issubclass(ParseError, InputError)
        assert ParseError("x").exit_code == 3
