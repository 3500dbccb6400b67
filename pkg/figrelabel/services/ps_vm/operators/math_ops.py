"""
Arithmetic, comparison and logic operators

All numbers are doubles; integer-only operators insist on integral operands.
"""

import math

from figrelabel.core.constants import MAX_SHIFT
from figrelabel.core.exceptions import RangeCheck
from figrelabel.services.ps_vm.objects import PsString, ps_equal


def _binary(fn):
    def op(vm):
        b = vm.pop_number()
        a = vm.pop_number()
        vm.push(fn(a, b))
    return op


def _unary(fn):
    def op(vm):
        vm.push(fn(vm.pop_number()))
    return op


def op_div(vm):
    b = vm.pop_number()
    a = vm.pop_number()
    if b == 0:
        raise RangeCheck("division by zero")
    vm.push(a / b)


def op_idiv(vm):
    b = vm.pop_int()
    a = vm.pop_int()
    if b == 0:
        raise RangeCheck("division by zero")
    quotient = abs(a) // abs(b)
    vm.push(float(quotient if (a >= 0) == (b > 0) else -quotient))


def op_mod(vm):
    b = vm.pop_int()
    a = vm.pop_int()
    if b == 0:
        raise RangeCheck("mod by zero")
    vm.push(math.fmod(a, b))


def _finite_operand(vm) -> float:
    value = vm.pop_number()
    if not math.isfinite(value):
        raise RangeCheck(f"'{vm.operator_name}' of non-finite number {value}")
    return value


def _rounding(fn):
    def op(vm):
        vm.push(float(fn(_finite_operand(vm))))
    return op


def _trig(fn):
    def op(vm):
        vm.push(fn(math.radians(_finite_operand(vm))))
    return op


def op_sqrt(vm):
    value = vm.pop_number()
    if value < 0:
        raise RangeCheck(f"sqrt of negative number {value}")
    vm.push(math.sqrt(value))


def op_atan(vm):
    den = vm.pop_number()
    num = vm.pop_number()
    if num == 0 and den == 0:
        raise RangeCheck("atan of 0 0")
    vm.push(math.degrees(math.atan2(num, den)) % 360.0)


def op_exp(vm):
    exponent = vm.pop_number()
    base = vm.pop_number()
    if base < 0 and not exponent.is_integer():
        raise RangeCheck("negative base with fractional exponent")
    try:
        vm.push(float(base ** exponent))
    except (ZeroDivisionError, OverflowError):
        raise RangeCheck(f"{base} {exponent} exp is undefined") from None


def _log(fn):
    def op(vm):
        value = vm.pop_number()
        if value <= 0:
            raise RangeCheck(f"logarithm of non-positive number {value}")
        vm.push(fn(value))
    return op


def _comparable(vm):
    b = vm.pop()
    a = vm.pop()
    if type(a) is float and type(b) is float:
        return a, b
    if type(a) is PsString and type(b) is PsString:
        return a.raw, b.raw
    raise vm.type_error("two numbers or two strings", (a, b))


def _compare(fn):
    def op(vm):
        a, b = _comparable(vm)
        vm.push(fn(a, b))
    return op


def op_eq(vm):
    b = vm.pop()
    a = vm.pop()
    vm.push(ps_equal(a, b))


def op_ne(vm):
    b = vm.pop()
    a = vm.pop()
    vm.push(not ps_equal(a, b))


def _logical(bool_fn, int_fn):
    def op(vm):
        b = vm.pop()
        a = vm.pop()
        if type(a) is bool and type(b) is bool:
            vm.push(bool_fn(a, b))
            return
        vm.push(b)
        vm.push(a)
        a = vm.pop_int()
        b = vm.pop_int()
        vm.push(float(int_fn(a, b)))
    return op


def op_not(vm):
    value = vm.peek()
    if type(value) is bool:
        vm.pop()
        vm.push(not value)
        return
    vm.push(float(~vm.pop_int()))


def op_bitshift(vm):
    shift = vm.pop_int()
    value = vm.pop_int()
    if abs(shift) >= MAX_SHIFT:
        vm.push(0.0)
        return
    vm.push(float(value << shift if shift >= 0 else value >> -shift))


def op_cvi(vm):
    value = vm.pop()
    if type(value) is PsString:
        try:
            value = float(value.raw)
        except ValueError:
            raise vm.type_error("numeric string", value) from None
    if type(value) is not float:
        raise vm.type_error("number", value)
    if not math.isfinite(value):
        raise RangeCheck(f"cvi of non-finite number {value}")
    vm.push(float(math.trunc(value)))


def op_cvr(vm):
    value = vm.pop()
    if type(value) is PsString:
        try:
            value = float(value.raw)
        except ValueError:
            raise vm.type_error("numeric string", value) from None
    if type(value) is not float:
        raise vm.type_error("number", value)
    vm.push(value)


OPERATORS = {
    b"add": _binary(lambda a, b: a + b),
    b"sub": _binary(lambda a, b: a - b),
    b"mul": _binary(lambda a, b: a * b),
    b"div": op_div,
    b"idiv": op_idiv,
    b"mod": op_mod,
    b"neg": _unary(lambda a: -a),
    b"abs": _unary(abs),
    b"round": _rounding(lambda a: math.floor(a + 0.5)),
    b"truncate": _rounding(math.trunc),
    b"floor": _rounding(math.floor),
    b"ceiling": _rounding(math.ceil),
    b"sqrt": op_sqrt,
    b"atan": op_atan,
    b"sin": _trig(math.sin),
    b"cos": _trig(math.cos),
    b"exp": op_exp,
    b"ln": _log(math.log),
    b"log": _log(math.log10),
    b"eq": op_eq,
    b"ne": op_ne,
    b"gt": _compare(lambda a, b: a > b),
    b"ge": _compare(lambda a, b: a >= b),
    b"lt": _compare(lambda a, b: a < b),
    b"le": _compare(lambda a, b: a <= b),
    b"and": _logical(lambda a, b: a and b, lambda a, b: a & b),
    b"or": _logical(lambda a, b: a or b, lambda a, b: a | b),
    b"xor": _logical(lambda a, b: a != b, lambda a, b: a ^ b),
    b"not": op_not,
    b"bitshift": op_bitshift,
    b"cvi": op_cvi,
    b"cvr": op_cvr,
}
