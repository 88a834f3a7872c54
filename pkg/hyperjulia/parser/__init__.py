"""映射规格解析器"""

from hyperjulia.parser.spec_parser import (
    dump_specs,
    load_document,
    parse_spec,
    parse_spec_text,
    validate_model,
)

__all__ = ["dump_specs", "load_document", "parse_spec", "parse_spec_text", "validate_model"]
