import random
from pathlib import Path

import pytest

from figrelabel.core.exceptions import (
    DuplicateFigureLine,
    EmptyOldLabel,
    MalformedNumber,
    MissingFigureLine,
    SpecSyntaxError,
    UnknownUnit,
)
from figrelabel.domain.entities.relabel import ExtraLabel, Length, Relabel, RelabelSpec
from figrelabel.services.relabel_spec import (
    convert_length,
    format_length,
    label_bytes,
    parse_spec,
    print_spec,
)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.mark.parametrize(
    "text, bp",
    [
        ("1bp", 1.0),
        ("72.27pt", 72.0),
        ("1in", 72.0),
        ("3truein", 216.0),
        ("-.3truein", -21.6),
        ("2.54cm", 72.0),
        ("25.4mm", 72.0),
        ("1.5cm", 1.5 * 72 / 2.54),
        ("+10bp", 10.0),
        ("1e1pt", 10 * 72 / 72.27),
    ],
)
def test_unit_conversion(text, bp):
    assert convert_length(text).bp_value == pytest.approx(bp, rel=1e-12)


def test_length_keeps_unit():
    assert convert_length("-1.5cm") == Length(-1.5, "cm")
    assert format_length(Length(-1.5, "cm")) == "-1.5cm"
    assert format_length(Length(3.0, "truein")) == "3truein"


@pytest.mark.parametrize(
    "text, error",
    [("12", UnknownUnit), ("3ft", UnknownUnit), ("1.2.3pt", MalformedNumber), ("pt", MalformedNumber), ("1e400pt", MalformedNumber)],
)
def test_bad_lengths(text, error):
    with pytest.raises(error):
        convert_length(text, line=4)


def test_five_label_spec():
    spec = parse_spec((FIXTURES / "five_labels.spec").read_text())
    assert spec.figure == "five_labels.eps"
    assert spec.width == Length(3, "truein")
    assert spec.font_name == "Helvetica"
    assert spec.font_size == Length(10, "bp")
    assert [type(d) for d in spec.directives] == [Relabel, Relabel, Relabel, ExtraLabel, Relabel, Relabel, ExtraLabel]
    first = spec.directives[0]
    assert (first.old, first.new, first.dx, first.dy) == (b"Ab", "A^b", Length(0, "pt"), Length(1, "pt"))
    assert spec.relabels[3].old == b'IP"'
    assert spec.relabels[3].new == "\\int P''"
    assert spec.extra_labels[0] == ExtraLabel(Length(-0.3, "truein"), Length(0.3, "truein"), "First extra label")
    assert spec.directives[4].line == 10


def test_defaults_and_comments():
    spec = parse_spec('# leading comment\nfigure a.eps  # trailing\nrelabel "x" "y # not a comment"\n')
    assert spec.width is None
    assert spec.font_name == "Helvetica"
    assert spec.font_size == Length(10, "bp")
    assert spec.relabels[0].new == "y # not a comment"
    assert spec.relabels[0].dx == Length.zero()


def test_old_label_bytes():
    spec = parse_spec('figure f.eps\nrelabel "\\xe9t\\xe9" "ete"\nrelabel "B\\\\c" "x"\n')
    assert spec.relabels[0].old == b"\xe9t\xe9"
    assert spec.relabels[1].old == b"B\\c"


def test_hex_escape_covers_every_byte():
    lines = ["figure f.eps"] + [f'relabel "\\x{byte:02X}" "b{byte}"' for byte in range(256)]
    spec = parse_spec("\n".join(lines))
    assert [r.old for r in spec.relabels] == [bytes([byte]) for byte in range(256)]


def test_label_bytes_beyond_latin1():
    assert label_bytes("\u00e9") == b"\xe9"
    assert label_bytes("\u2192") == "\u2192".encode("utf-8")


@pytest.mark.parametrize(
    "source, error, line",
    [
        ('relabel "a" "b"\n', MissingFigureLine, None),
        ("figure a.eps\nfigure b.eps\n", DuplicateFigureLine, 2),
        ('figure a.eps\n\nrelabel "" "b"\n', EmptyOldLabel, 3),
        ('figure a.eps\nrelabel "a" "b" offset 1pt\n', SpecSyntaxError, 2),
        ('figure a.eps\nrelabel "a" "b" shift 1pt 1pt\n', SpecSyntaxError, 2),
        ('figure a.eps\nrelabel a "b"\n', SpecSyntaxError, 2),
        ('figure a.eps\nrelabel "a" "b" offset 1 1pt\n', UnknownUnit, 2),
        ('figure a.eps\nextralabel 1pt 1furlong "t"\n', UnknownUnit, 2),
        ('figure a.eps\nextralabel 1..pt 1pt "t"\n', MalformedNumber, 2),
        ('figure a.eps\nrelabel "a\\q" "b"\n', SpecSyntaxError, 2),
        ('figure a.eps\nrelabel "a" "b\n', SpecSyntaxError, 2),
        ("figure a.eps\nwidth 1in\nwidth 2in\n", SpecSyntaxError, 3),
        ("figure a.eps\nfont Times\n", SpecSyntaxError, 2),
        ('figure a.eps\nfont "Times Roman" 12bp\n', SpecSyntaxError, 2),
        ('figure a.eps\nfont "Times-Roman" 12bp\n', SpecSyntaxError, 2),
        ("figure a.eps\nfont Times(x) 12bp\n", SpecSyntaxError, 2),
        ("figure a.eps\nfont /Times-Roman 12bp\n", SpecSyntaxError, 2),
        ("figure a.eps\nscale 2\n", SpecSyntaxError, 2),
    ],
)
def test_spec_errors(source, error, line):
    with pytest.raises(error) as info:
        parse_spec(source)
    assert info.value.line == line


def test_print_parse_round_trip_fixture():
    spec = parse_spec((FIXTURES / "five_labels.spec").read_text())
    assert parse_spec(print_spec(spec)) == spec


def _random_text(rng: random.Random, alphabet: str) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 6)))


def _random_length(rng: random.Random) -> Length:
    return Length(round(rng.uniform(-50, 50), rng.randint(0, 4)), rng.choice(["bp", "pt", "in", "truein", "cm", "mm"]))


def test_print_parse_round_trip_random():
    rng = random.Random(7)
    printable = 'abcXYZ 019"\\#^_\'\u00e9\u2192'
    for _ in range(200):
        directives = []
        for _ in range(rng.randint(0, 6)):
            if rng.random() < 0.7:
                old = bytes(rng.randrange(256) for _ in range(rng.randint(1, 4)))
                if rng.random() < 0.5:
                    directives.append(Relabel(old, _random_text(rng, printable)))
                else:
                    directives.append(
                        Relabel(old, _random_text(rng, printable), _random_length(rng), _random_length(rng))
                    )
            else:
                directives.append(ExtraLabel(_random_length(rng), _random_length(rng), _random_text(rng, printable)))
        spec = RelabelSpec(
            figure=rng.choice(["fig.eps", "dir/fig 2.eps"]),
            width=rng.choice([None, _random_length(rng)]),
            font_name=rng.choice(["Helvetica", "Times-Roman"]),
            font_size=Length(abs(_random_length(rng).value) + 1, "bp"),
            directives=tuple(directives),
        )
        assert parse_spec(print_spec(spec)) == spec


def test_acceptance_values_are_exact():
    assert convert_length("1cm").bp_value == pytest.approx(28.346457, abs=1e-5)
    assert convert_length("1in").bp_value == 72.0
    assert convert_length("72.27pt").bp_value == 72.0
    assert convert_length("-.3truein").bp_value == -21.6
    assert convert_length("2.54cm").bp_value == 72.0
    assert convert_length("25.4mm").bp_value == 72.0
    assert convert_length("0.1in").bp_value == 7.2


@pytest.mark.parametrize("unit", ["bp", "pt", "in", "truein", "cm", "mm"])
def test_conversion_is_linear(unit):
    assert convert_length(f"0{unit}").bp_value == 0
    one = convert_length(f"1{unit}").bp_value
    for factor in (2.5, -3.0, 0.125):
        assert convert_length(f"{factor}{unit}").bp_value == pytest.approx(factor * one, rel=1e-12)
