"""
Figure analysis pipeline

preview strip -> DSC header -> lazy tokenize -> interpret
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

from figrelabel.config.settings import VmConfig
from figrelabel.core.error_codes import ErrorCode
from figrelabel.core.exceptions import FigureIOError
from figrelabel.core.logging import get_logger
from figrelabel.domain.entities.relabel import RelabelSpec
from figrelabel.services.label_table import LabelTable
from figrelabel.services.ps_syntax.dsc import DocumentMeta, parse_dsc, strip_preview
from figrelabel.services.ps_syntax.tokenizer import iter_tokens
from figrelabel.services.ps_vm.machine import ExtractionResult, VmWarning, execute
from figrelabel.services.relabel_spec import parse_spec

logger = get_logger(__name__)


@dataclass(frozen=True)
class FigureAnalysis:
    source: bytes
    meta: DocumentMeta
    result: ExtractionResult

    @property
    def table(self) -> LabelTable:
        return self.result.table

    @property
    def warnings(self) -> Tuple[VmWarning, ...]:
        return self.result.warnings


def read_bytes(path: Union[str, Path]) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise FigureIOError(f"cannot read {path}: {exc.strerror or exc}") from exc


def write_bytes(path: Union[str, Path], data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise FigureIOError(
            f"cannot write {path}: {exc.strerror or exc}", code=ErrorCode.IO_WRITE_FAILED
        ) from exc


def load_spec(path: Union[str, Path]) -> RelabelSpec:
    raw = read_bytes(path)
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FigureIOError(f"{path} is not UTF-8 text") from exc
    return parse_spec(text)


def analyze_figure(source: bytes, config: Optional[VmConfig] = None) -> FigureAnalysis:
    """
    Extract every label from a figure

    Args:
        source: EPS/PS bytes, DOS preview wrapper allowed
        config: interpreter configuration

    Returns:
        FigureAnalysis with DSC metadata and the frozen label table

    Raises:
        FigRelabelError subclasses from the tokenizer, DSC parser or VM
    """
    program = strip_preview(source)
    meta = parse_dsc(program)
    result = execute(iter_tokens(program), config)
    for warning in result.warnings:
        logger.warning(str(warning))
    for raw, records in result.table.duplicates().items():
        logger.warning(
            f"label {raw!r} painted {len(records)} times; the first occurrence is used"
        )
    logger.info(
        f"extracted {len(result.labels)} label(s) in {result.steps_used} step(s)"
        + (" (halted)" if result.halted else "")
    )
    return FigureAnalysis(source=program, meta=meta, result=result)
