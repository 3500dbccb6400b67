from pathlib import Path

import pytest
from loguru import logger

from figrelabel.config.settings import SaveRestoreMode, UnknownOperatorMode, VmConfig
from figrelabel.core.exceptions import (
    InvalidExit,
    NoCurrentPoint,
    RangeCheck,
    SingularMatrix,
    StackUnderflow,
    StepBudgetExceeded,
    TypeMismatch,
    UndefinedName,
    UnsupportedOperator,
)
from figrelabel.domain.entities.geometry import IDENTITY, Matrix, Point
from figrelabel.services.label_table import LabelTable
from figrelabel.services.ps_vm import MARK, GraphicsState, PsMachine, PsString, execute, record_show

FIXTURES = Path(__file__).parent / "fixtures"
NEUTERED = VmConfig(save_restore_mode=SaveRestoreMode.NEUTERED)


def _run(source: str, config: VmConfig = None) -> PsMachine:
    return PsMachine(config).run(source.encode("latin-1"))


def _stack(source: str, config: VmConfig = None) -> list:
    values = []
    for value in _run(source, config).operand_stack:
        values.append(value.raw if isinstance(value, PsString) else value)
    return values


def _labels(name: str, config: VmConfig = None) -> list:
    result = execute((FIXTURES / name).read_bytes(), config)
    return [(record.raw, tuple(record.anchor)) for record in result.labels]


# --- operand stack and arithmetic --------------------------------------------

def test_add():
    assert _stack("3 4 add") == [7]


def test_roll():
    assert _stack("1 2 3 3 -1 roll") == [2, 3, 1]
    assert _stack("1 2 3 3 1 roll") == [3, 1, 2]
    assert _stack("1 2 3 0 5 roll") == [1, 2, 3]


@pytest.mark.parametrize(
    "source, expected",
    [
        ("1 2 2 copy", [1, 2, 1, 2]),
        ("1 2 3 1 index", [1, 2, 3, 2]),
        ("1 2 exch", [2, 1]),
        ("1 dup", [1, 1]),
        ("1 2 clear count", [0]),
        ("1 mark 2 3 cleartomark", [1]),
        ("7 2 idiv -7 2 idiv", [3, -3]),
        ("-7 2 mod 7 -2 mod", [-1, 1]),
        ("2.5 round -2.5 round 2.7 truncate -2.7 floor 2.1 ceiling", [3, -2, 2, -3, 3]),
        ("2 10 exp 100 log 16 sqrt", [1024, 2, 4]),
        ("1 2 lt (a) (b) lt 2 2 ge 1 1 ne", [True, True, True, False]),
        ("true false or true false and true not 5 3 xor 12 not", [True, False, False, 6, -13]),
        ("1 3 bitshift 16 -2 bitshift", [8, 4]),
        ("(12) cvi 3.9 cvi -3.9 cvi (2.5) cvr", [12, 3, -3, 2.5]),
    ],
)
def test_stack_and_math(source, expected):
    assert _stack(source) == expected


def test_atan_is_in_degrees():
    assert _stack("1 0 atan -1 0 atan 0 1 atan") == pytest.approx([90, 270, 0], abs=1e-12)


def test_counttomark():
    stack = _run("1 mark 2 3 counttomark").operand_stack
    assert stack[0] == 1
    assert stack[1] is MARK
    assert stack[2:] == [2, 3, 2]


def test_integer_results_are_floats():
    assert all(type(v) is float for v in _stack("3 4 add 7 2 idiv 5 neg"))


# --- composite and dictionary ------------------------------------------------

def test_array_sharing():
    assert _stack("/a [1 2] def /b a def b 0 9 put a 0 get") == [9]


def test_array_operators():
    assert _stack("[1 2 3] length") == [3]
    assert _stack("[1 2 3] aload pop") == [1, 2, 3]
    assert _stack("4 5 2 array astore aload pop") == [4, 5]
    assert _stack("[1 2 3 4] 1 2 getinterval aload pop") == [2, 3]
    assert _stack("/a [0 0 0] def a 1 [7 8] putinterval a aload pop") == [0, 7, 8]
    assert _stack("(abc) 1 get") == [98]
    assert _stack("3 string length") == [3]


def test_dictionary_operators():
    assert _stack("/d 4 dict def d /k 5 put d /k get d /k known d /z known") == [5, True, False]
    assert _stack("/x 1 def /x load") == [1]
    assert _stack("/x 1 def 5 dict begin /x 2 store end x") == [2]
    assert _stack("/nope where") == [False]
    assert _stack("/x 1 def /x where exch pop") == [True]
    assert _stack("userdict begin /y 3 def end y") == [3]


def test_end_keeps_permanent_dicts():
    with pytest.raises(StackUnderflow):
        _run("end")


def test_forall_over_string_and_dict():
    assert _stack("0 (ab) { add } forall") == [97 + 98]
    assert _stack("0 1 dict dup /k 3 put { exch pop add } forall") == [3]


def test_type_conversions():
    machine = _run("(foo) cvn 12 10 string cvs [1] cvx xcheck /n type")
    name, text, executable, type_name = machine.operand_stack
    assert name.name == b"foo" and name.literal
    assert text.raw == b"12"
    assert executable is True
    assert type_name.name == b"nametype"


# --- control -----------------------------------------------------------------

def test_control_flow():
    assert _stack("0 1 1 4 { add } for") == [10]
    assert _stack("0 3 { 1 add } repeat") == [3]
    assert _stack("0 { 1 add dup 5 ge { exit } if } loop") == [5]
    assert _stack("true { 1 } { 2 } ifelse false { 3 } if") == [1]
    assert _stack("{ 1 2 add } exec") == [3]
    assert _stack("0 -1 -3 { } for") == [0, -1, -2, -3]
    assert _stack("5 0 -1 3 { } for") == [5]


def test_quit_halts():
    machine = _run("1 quit 2")
    assert machine.operand_stack == [1]
    assert machine.result().halted


@pytest.mark.parametrize(
    "source, error",
    [
        ("pop", StackUnderflow),
        ("(a) 1 add", TypeMismatch),
        ("1 0 div", RangeCheck),
        ("1.5 { } repeat", TypeMismatch),
        ("-1 { } repeat", RangeCheck),
        ("exit", InvalidExit),
        ("1 2 3 5 index", RangeCheck),
        ("1 2 5 1 roll", StackUnderflow),
        ("[1 2] 5 get", RangeCheck),
        ("undefinedthing", UndefinedName),
        ("(x) show", NoCurrentPoint),
        ("0 0 scale 1 1 moveto (x) show", SingularMatrix),
        ("currentfile", UnsupportedOperator),
        ("eexec", UnsupportedOperator),
    ],
)
def test_errors(source, error):
    with pytest.raises(error):
        _run(source)


def test_error_is_positioned_at_the_failing_name():
    with pytest.raises(UndefinedName) as info:
        _run("1 2 add\n  frobnicate")
    assert info.value.offset == 10
    assert info.value.line == 2


@pytest.mark.parametrize(
    "source",
    [
        "1e400 round",
        "1e400 floor",
        "1e400 1e400 sub truncate",
        "-1e400 ceiling",
        "1e400 cvi",
        "(1e400) cvi",
        "1e400 { } repeat",
        "1e400 array",
        "1e400 sin",
        "1 1e400 bitshift",
        "70000 string",
        "/a /a cvx def a",
    ],
)
def test_overflowing_operands_raise_range_check(source):
    with pytest.raises(RangeCheck) as info:
        _run("1 1 moveto\n" + source)
    assert info.value.line == 2


def test_bitshift_drops_bits_past_the_word():
    assert _stack("1 1e9 bitshift 1 32 bitshift 1 31 bitshift -1 -40 bitshift") == [0, 0, 2.0 ** 31, 0]


def test_self_referencing_array_is_printable():
    messages = []
    sink = logger.add(messages.append, level="DEBUG", format="{message}")
    try:
        machine = _run("/a 1 array def a 0 a put a == a pstack")
    finally:
        logger.remove(sink)
    assert len(machine.operand_stack) == 1
    assert any("[...]" in message for message in messages)


def test_permissive_skips_undefined_names():
    config = VmConfig(unknown_operator_mode=UnknownOperatorMode.PERMISSIVE_NOOP)
    machine = _run("1 2 frobnicate add", config)
    assert machine.operand_stack == [3]
    assert "frobnicate" in str(machine.result().warnings[0])


def test_step_budget_small():
    machine = PsMachine(VmConfig(max_steps=1000))
    with pytest.raises(StepBudgetExceeded):
        machine.run(b"{ } loop")
    assert machine.steps_used == 1000


def test_empty_loop_hits_default_budget():
    machine = PsMachine()
    with pytest.raises(StepBudgetExceeded):
        machine.run(b"{} loop")
    assert machine.steps_used == VmConfig().max_steps


# --- show interception -------------------------------------------------------

def test_record_show_examples():
    table = LabelTable()
    state = GraphicsState(device_point=Point(72, 50))
    assert record_show(state, table, b"Bc") == 0
    assert table.records[0].anchor == (72, 50)
    assert state.device_point == (72, 50)

    scaled = GraphicsState(ctm=Matrix(2, 0, 0, 2, 0, 0), device_point=Point(72, 50))
    record_show(scaled, table, b"Bc")
    assert table.records[1].anchor == (72, 50)

    with pytest.raises(NoCurrentPoint):
        record_show(GraphicsState(), table, b"x")


def test_two_label_fixture():
    assert _labels("two_labels.eps") == [(b"Bc", (72, 50)), (b"Ab", (10, 20))]
    result = execute((FIXTURES / "two_labels.eps").read_bytes())
    assert [record.seq for record in result.labels] == [0, 1]


def test_ashow_consumes_all_operands():
    machine = _run("30 40 moveto 5 0 (P) ashow")
    assert machine.operand_stack == []
    assert [(r.raw, tuple(r.anchor)) for r in machine.table] == [(b"P", (30, 40))]


def test_show_does_not_advance_the_point():
    machine = _run("10 20 moveto (a) show (b) show currentpoint")
    assert machine.operand_stack == [10, 20]
    assert [tuple(r.anchor) for r in machine.table] == [(10, 20), (10, 20)]


def test_all_nine_show_operators():
    machine = _run((FIXTURES / "all_shows.eps").read_text("latin-1"))
    assert machine.operand_stack == []
    assert [(r.raw, tuple(r.anchor)) for r in machine.table] == [
        (f"s{i}".encode(), (10.0 * i, 10.0 * i)) for i in range(1, 10)
    ]


def test_five_label_fixture():
    assert _labels("five_labels.eps") == [
        (b"Ab", (40, 150)),
        (b"P", (20, 100)),
        (b"Bc", (150, 60)),
        (b'IP"', (90, 30)),
        (b"P'", (180, 120)),
    ]


@pytest.mark.parametrize(
    "name, expected",
    [
        ("scaled.eps", [(b"Bc", (72, 50)), (b"T", (10, 10)), (b"U", (2, 2))]),
        ("rotated.eps", [(b"R", (100, 110)), (b"D", (100, 100))]),
        ("nested_gsave.eps", [(b"In", (60, 10)), (b"Mid", (50, 0)), (b"Out", (10, 10))]),
        ("concat_matrix.eps", [(b"C", (30, 40)), (b"D", (40, 50)), (b"E", (32, 42))]),
        (
            "arcs_relative.eps",
            [(b"top", (100, 150)), (b"r", (110, 150)), (b"d", (110, 130)), (b"c", (140, 130)), (b"z", (110, 150))],
        ),
        (
            "duplicate_labels.eps",
            [(b"P", (30, 40)), (b"Q", (50, 50)), (b"P", (90, 90)), (b"P", (90, 90))],
        ),
        (
            "escapes.eps",
            [
                (b"A)b", (10, 10)),
                (b"AB", (20, 20)),
                (b"HI", (30, 30)),
                (b"tab\there", (40, 40)),
                (b"\xe9t\xe9", (50, 50)),
                (b"linecont", (60, 60)),
                (b"a(b)c", (70, 70)),
            ],
        ),
        (
            "loops_procs.eps",
            [
                (b"t", (20, 10)),
                (b"t", (30, 10)),
                (b"t", (40, 10)),
                (b"A", (100, 100)),
                (b"r", (5, 5)),
                (b"r", (5, 5)),
                (b"r", (5, 5)),
                (b"x1", (0, 0)),
                (b"x2", (0, 0)),
                (b"n", (20, 60)),
                (b"yes", (1, 1)),
            ],
        ),
        ("no_dsc.ps", [(b"Bc", (72, 50))]),
    ],
)
def test_fixture_anchors(name, expected):
    got = _labels(name)
    assert [raw for raw, _ in got] == [raw for raw, _ in expected]
    for (_, (x, y)), (_, (ex, ey)) in zip(got, expected):
        assert x == pytest.approx(ex, abs=1e-9)
        assert y == pytest.approx(ey, abs=1e-9)


def test_gnuplot_style_prologue():
    got = _labels("gnuplot_like.eps")
    assert [raw for raw, _ in got] == [b"0", b"x axis", b"y"]
    expected = [(95, 77.7), (250, 62.7), (100, 287.7)]
    for (_, (x, y)), (ex, ey) in zip(got, expected):
        assert x == pytest.approx(ex, abs=1e-9)
        assert y == pytest.approx(ey, abs=1e-9)


def test_stringwidth_warns_once():
    result = execute(b"(a) stringwidth (b) stringwidth")
    assert len(result.warnings) == 1
    assert "stringwidth" in result.warnings[0].message


def test_image_aborts_before_binary_data():
    with pytest.raises(UnsupportedOperator) as info:
        execute((FIXTURES / "image.eps").read_bytes())
    assert info.value.line == 6


# --- save / restore ------------------------------------------------------------

def test_save_restore_differential():
    assert _labels("save_restore.eps") == [(b"S", (10, 10)), (b"L", (10, 10))]
    assert _labels("save_restore.eps", NEUTERED) == [(b"S", (10, 10)), (b"L", (20, 20))]


def test_restore_undoes_scale_only_when_faithful():
    faithful = _run("save 2 2 scale restore")
    assert faithful.gstate.ctm == IDENTITY
    neutered = _run("save 2 2 scale restore", NEUTERED)
    assert neutered.gstate.ctm == Matrix(2, 0, 0, 2, 0, 0)


def test_neutered_save_is_invisible():
    a = _run("save pop", NEUTERED)
    b = _run("(noop) pop", NEUTERED)
    assert a.operand_stack == b.operand_stack == []
    assert a.gstate == b.gstate
    assert a.gsave_stack == b.gsave_stack
    assert a.save_snapshots == b.save_snapshots == {}


def test_restore_rejects_stale_save():
    with pytest.raises(RangeCheck):
        _run("save dup restore restore")


def test_open_gsave_is_reported():
    result = execute(b"gsave 1 1 moveto (a) show")
    assert any("gsave" in w.message for w in result.warnings)


def test_execute_is_deterministic():
    source = (FIXTURES / "gnuplot_like.eps").read_bytes()
    first = execute(source)
    second = execute(source)
    assert first.labels == second.labels
    assert first.steps_used == second.steps_used
    assert first.warnings == second.warnings


def test_lookup_debug_entry_point():
    machine = _run("/answer 42 def")
    assert machine.lookup(b"answer") == 42
    assert machine.lookup(b"missing") is None
