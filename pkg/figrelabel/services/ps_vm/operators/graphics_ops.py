"""
Graphics state, CTM and path operators

Painting operators are skipped by arity. Path construction only tracks the
current point, which is stored in device space.
"""

from figrelabel.config.settings import SaveRestoreMode
from figrelabel.core.exceptions import NoCurrentPoint, RangeCheck
from figrelabel.domain.entities.geometry import (
    IDENTITY,
    Matrix,
    Point,
    concat_matrix,
    dtransform_delta,
    idtransform_delta,
    invert,
    itransform_point,
    multiply,
    rotation,
    scaling,
    transform_point,
    translation,
)
from figrelabel.services.ps_vm.graphics import GraphicsState
from figrelabel.services.ps_vm.objects import PsArray, SaveToken

# operands consumed by painting and appearance operators that draw nothing here
NO_OP_ARITY = {
    b"stroke": 0,
    b"fill": 0,
    b"eofill": 0,
    b"clip": 0,
    b"eoclip": 0,
    b"erasepage": 0,
    b"copypage": 0,
    b"setlinewidth": 1,
    b"setlinecap": 1,
    b"setlinejoin": 1,
    b"setmiterlimit": 1,
    b"setflat": 1,
    b"setgray": 1,
    b"setdash": 2,
    b"setrgbcolor": 3,
    b"sethsbcolor": 3,
    b"setcmykcolor": 4,
}


# ----------------------------------------------------------------- matrices

def matrix_from_array(vm, array: PsArray) -> Matrix:
    items = array.items
    if len(items) != 6:
        raise RangeCheck(f"matrix needs 6 elements, got {len(items)}")
    for item in items:
        if type(item) is not float:
            raise vm.type_error("numeric matrix", array)
    return Matrix.from_values(items)


def _store_matrix(array: PsArray, m: Matrix) -> PsArray:
    if len(array.items) != 6:
        raise RangeCheck(f"matrix needs 6 elements, got {len(array.items)}")
    array.items[:] = [float(v) for v in m.values()]
    return array


def _pop_matrix(vm) -> Matrix:
    return matrix_from_array(vm, vm.pop_array())


def _matrix_or_ctm(vm):
    """Pop an optional trailing matrix operand; None means use the CTM."""
    if type(vm.peek()) is PsArray:
        return _pop_matrix(vm)
    return None


def _ctm_op(make):
    """translate/scale/rotate: concat onto the CTM, or fill a matrix operand."""
    def op(vm):
        target = vm.pop() if type(vm.peek()) is PsArray else None
        m = make(vm)
        if target is None:
            vm.gstate.ctm = concat_matrix(vm.gstate.ctm, m)
        else:
            vm.push(_store_matrix(target, m))
    return op


def _make_translate(vm) -> Matrix:
    ty = vm.pop_number()
    return translation(vm.pop_number(), ty)


def _make_scale(vm) -> Matrix:
    sy = vm.pop_number()
    return scaling(vm.pop_number(), sy)


def _make_rotate(vm) -> Matrix:
    return rotation(vm.pop_number())


def op_concat(vm):
    vm.gstate.ctm = concat_matrix(vm.gstate.ctm, _pop_matrix(vm))


def op_matrix(vm):
    vm.push(PsArray([float(v) for v in IDENTITY.values()]))


def op_currentmatrix(vm):
    vm.push(_store_matrix(vm.pop_array(), vm.gstate.ctm))


def op_setmatrix(vm):
    vm.gstate.ctm = _pop_matrix(vm)


def op_identmatrix(vm):
    vm.push(_store_matrix(vm.pop_array(), IDENTITY))


def op_initmatrix(vm):
    vm.gstate.ctm = IDENTITY


def op_concatmatrix(vm):
    target = vm.pop_array()
    second = _pop_matrix(vm)
    first = _pop_matrix(vm)
    vm.push(_store_matrix(target, multiply(first, second)))


def op_invertmatrix(vm):
    target = vm.pop_array()
    vm.push(_store_matrix(target, invert(_pop_matrix(vm))))


def op_initgraphics(vm):
    vm.gstate = GraphicsState(font=vm.gstate.font, clip_depth=vm.gstate.clip_depth)


def _point_op(fn):
    """transform family: `x y` or `x y matrix`, pushing the mapped pair."""
    def op(vm):
        m = _matrix_or_ctm(vm)
        if m is None:
            m = vm.gstate.ctm
        y = vm.pop_number()
        x = vm.pop_number()
        result = fn(m, Point(x, y))
        vm.push(result.x)
        vm.push(result.y)
    return op


# ---------------------------------------------------------------- gsave/save

def op_gsave(vm):
    vm.gsave_stack.append(vm.gstate.copy())
    vm.gstate.clip_depth = len(vm.gsave_stack)


def op_grestore(vm):
    if not vm.gsave_stack:
        vm.warn("grestore without matching gsave ignored")
        return
    vm.gstate = vm.gsave_stack.pop()


def op_save(vm):
    if vm.config.save_restore_mode is SaveRestoreMode.NEUTERED:
        vm.push(False)
        return
    token = SaveToken()
    vm.save_snapshots[token.id] = (vm.gstate.copy(), list(vm.gsave_stack))
    vm.push(token)


def op_restore(vm):
    if vm.config.save_restore_mode is SaveRestoreMode.NEUTERED:
        vm.pop()
        return
    token = vm.pop()
    if type(token) is not SaveToken:
        raise vm.type_error("save object", token)
    snapshot = vm.save_snapshots.get(token.id)
    if snapshot is None:
        raise RangeCheck(f"save object {token.id} is no longer valid")
    state, gsaves = snapshot
    vm.gstate = state.copy()
    vm.gsave_stack = list(gsaves)
    for key in [key for key in vm.save_snapshots if key >= token.id]:
        del vm.save_snapshots[key]


# ---------------------------------------------------------------------- path

def _set_point(vm, user: Point, start: bool = False) -> None:
    state = vm.gstate
    state.device_point = transform_point(state.ctm, user)
    if start or state.path_start is None:
        state.path_start = state.device_point


def _require_point(vm) -> Point:
    if not vm.gstate.has_current_point:
        raise NoCurrentPoint(f"'{vm.operator_name}' needs a current point")
    return vm.gstate.current_point


def _pop_point(vm) -> Point:
    y = vm.pop_number()
    return Point(vm.pop_number(), y)


def op_moveto(vm):
    _set_point(vm, _pop_point(vm), start=True)


def op_rmoveto(vm):
    dx, dy = _pop_point(vm)
    x, y = _require_point(vm)
    _set_point(vm, Point(x + dx, y + dy), start=True)


def op_lineto(vm):
    target = _pop_point(vm)
    _require_point(vm)
    _set_point(vm, target)


def op_rlineto(vm):
    dx, dy = _pop_point(vm)
    x, y = _require_point(vm)
    _set_point(vm, Point(x + dx, y + dy))


def op_curveto(vm):
    end = _pop_point(vm)
    _pop_point(vm)
    _pop_point(vm)
    _require_point(vm)
    _set_point(vm, end)


def op_rcurveto(vm):
    dx, dy = _pop_point(vm)
    _pop_point(vm)
    _pop_point(vm)
    x, y = _require_point(vm)
    _set_point(vm, Point(x + dx, y + dy))


def op_closepath(vm):
    state = vm.gstate
    if state.path_start is not None:
        state.device_point = state.path_start


def op_newpath(vm):
    vm.gstate.clear_path()


def op_currentpoint(vm):
    x, y = _require_point(vm)
    vm.push(x)
    vm.push(y)


def op_arc(vm):
    end_angle = vm.pop_number()
    vm.pop_number()
    radius = vm.pop_number()
    cx, cy = _pop_point(vm)
    turn = rotation(end_angle)
    _set_point(vm, Point(cx + radius * turn.a, cy + radius * turn.b))


def op_showpage(vm):
    vm.gstate.clear_path()


def _no_op(arity: int):
    def op(vm):
        if arity:
            vm.require(arity)
            del vm.operand_stack[-arity:]
    return op


OPERATORS = {
    b"gsave": op_gsave,
    b"grestore": op_grestore,
    b"save": op_save,
    b"restore": op_restore,
    b"translate": _ctm_op(_make_translate),
    b"scale": _ctm_op(_make_scale),
    b"rotate": _ctm_op(_make_rotate),
    b"concat": op_concat,
    b"matrix": op_matrix,
    b"currentmatrix": op_currentmatrix,
    b"setmatrix": op_setmatrix,
    b"identmatrix": op_identmatrix,
    b"defaultmatrix": op_identmatrix,
    b"initmatrix": op_initmatrix,
    b"concatmatrix": op_concatmatrix,
    b"invertmatrix": op_invertmatrix,
    b"initgraphics": op_initgraphics,
    b"transform": _point_op(transform_point),
    b"itransform": _point_op(itransform_point),
    b"dtransform": _point_op(dtransform_delta),
    b"idtransform": _point_op(idtransform_delta),
    b"moveto": op_moveto,
    b"rmoveto": op_rmoveto,
    b"lineto": op_lineto,
    b"rlineto": op_rlineto,
    b"curveto": op_curveto,
    b"rcurveto": op_rcurveto,
    b"closepath": op_closepath,
    b"newpath": op_newpath,
    b"currentpoint": op_currentpoint,
    b"arc": op_arc,
    b"arcn": op_arc,
    b"showpage": op_showpage,
}
OPERATORS.update({name: _no_op(arity) for name, arity in NO_OP_ARITY.items()})
