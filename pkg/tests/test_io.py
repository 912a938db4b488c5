from fractions import Fraction

import pytest

from octonode.core import FieldSpec
from octonode.errors import ParseError
from octonode.io import (format_triple, load_curve_spec, load_ideal, load_triple, parse_curve_spec_text,
                         parse_ideal_text, parse_triple_text)
from octonode.octic.triple import linear_forms_instance, random_triple


def test_ideal_file(samples):
    f = load_ideal(samples / "elim.ideal")
    assert f.ring.field.p is None and f.field_given
    assert len(f.polynomials) == 2


def test_field_override(samples):
    f = load_ideal(samples / "principal.ideal", FieldSpec(101))
    assert f.ring.field.p == 101


@pytest.mark.parametrize("text,line", [
    ("vars: x y\nx + \n", 2),
    ("x*y\n", 1),
    ("vars: x y\nfield: fp 12\n", 2),
    ("vars: x y\norder: lex\n", 2),
    ("field: q\n", 1),
    ("vars: x y\n# fine\nx^2\nx + z\n", 4),
])
def test_ideal_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as e:
        parse_ideal_text(text)
    assert e.value.line == line


def test_bad_token_reports_column():
    with pytest.raises(ParseError) as e:
        parse_ideal_text("vars: x y\nx + y $ 2\n")
    assert e.value.line == 2 and e.value.position is not None


@pytest.mark.parametrize("seed", range(3))
def test_triple_round_trip(seed):
    t = random_triple(seed % 5, seed, FieldSpec(32003))
    assert parse_triple_text(format_triple(t)) == t


def test_triple_rejects_wrong_degree():
    with pytest.raises(ParseError):
        parse_triple_text("a: 1\nf: z0^2\ng: z0^4\nh: z0^5\n")
    with pytest.raises(ParseError):
        parse_triple_text("a: 1\nf: z0^3\ng: z0^4\n")


def test_sample_triple_matches_generator(samples):
    t = load_triple(samples / "linforms48.triple")
    assert t == linear_forms_instance(2, 0, FieldSpec(32003)).triple


def test_sample_points_lie_on_the_triple(samples):
    t = load_triple(samples / "linforms48.triple", FieldSpec.rationals())
    pts = [tuple(Fraction(x) for x in line.split())
           for line in (samples / "linforms48.points").read_text().splitlines()
           if line.strip() and not line.startswith("#")]
    assert len(set(pts)) == 48
    assert all(p.evaluate(pt) == 0 for pt in pts for p in t.polynomials)


def test_curve_spec(samples):
    spec = load_curve_spec(samples / "twisted-cubic.spec")
    assert spec.degree == 3 and not spec.curve
    with pytest.raises(ParseError):
        parse_curve_spec_text("source: s t\ncurve: 0\ncomponent: s\n")
    with pytest.raises(ParseError):
        parse_curve_spec_text("source: s t\ntarget: s a b c\ncurve: 0\n" + "component: s\n" * 4)
