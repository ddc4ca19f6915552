from .abstract_json import dump_stratified, load_stratified, parse_laurent, parse_stratified, stratified_to_document
from .germ_json import dump_germ, germ_to_document, is_germ_document, load_germ, parse_germ, read_document
from .rationals import format_rational, parse_d, parse_rational
from .reports import Format, Report, render

__all__ = [
    "dump_stratified",
    "load_stratified",
    "parse_laurent",
    "parse_stratified",
    "stratified_to_document",
    "dump_germ",
    "germ_to_document",
    "is_germ_document",
    "load_germ",
    "parse_germ",
    "read_document",
    "format_rational",
    "parse_d",
    "parse_rational",
    "Format",
    "Report",
    "render",
]
