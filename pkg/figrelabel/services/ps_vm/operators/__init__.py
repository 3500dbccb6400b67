"""
Built-in operator tables

Each module exposes OPERATORS, a mapping from operator name to a function
taking the machine. install_operators() binds them all into systemdict.
"""

from figrelabel.services.ps_vm.objects import NULL, Operator
from figrelabel.services.ps_vm.operators import (
    composite_ops,
    control_ops,
    dict_ops,
    graphics_ops,
    math_ops,
    stack_ops,
    text_ops,
    type_ops,
)

OPERATOR_MODULES = (
    stack_ops,
    math_ops,
    control_ops,
    composite_ops,
    dict_ops,
    type_ops,
    graphics_ops,
    text_ops,
)

CONSTANTS = {
    b"true": True,
    b"false": False,
    b"null": NULL,
}


def install_operators(machine) -> None:
    systemdict = machine.systemdict
    for module in OPERATOR_MODULES:
        for name, fn in module.OPERATORS.items():
            systemdict.define(name, Operator(name, fn))
    for name, value in CONSTANTS.items():
        systemdict.define(name, value)
