"""Extract, parse and classify function doc comments; build filtered corpora."""

from .classifier import backfill_python_types, classify
from .docparse import NotParseable, is_structured, parse_docstring, serialize
from .extractor import ExtractionError, SourceFile, extract_units
from .langid import detect, prepare_detection_text
from .model import (
    CorpusRecord,
    DocStyle,
    FunctionUnit,
    NatLang,
    ParsedDoc,
    SourceLang,
    StatsReport,
    StructureVerdict,
    Verdict,
    validate,
)
from .normalizer import normalize, repair_xml
from .pipeline import PipelineConfig, run

__version__ = "0.1.0"

__all__ = [
    "CorpusRecord",
    "DocStyle",
    "ExtractionError",
    "FunctionUnit",
    "NatLang",
    "NotParseable",
    "ParsedDoc",
    "PipelineConfig",
    "SourceFile",
    "SourceLang",
    "StatsReport",
    "StructureVerdict",
    "Verdict",
    "backfill_python_types",
    "classify",
    "detect",
    "extract_units",
    "is_structured",
    "normalize",
    "parse_docstring",
    "prepare_detection_text",
    "repair_xml",
    "run",
    "serialize",
    "validate",
]
