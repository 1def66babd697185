"""Command-line front end."""

from .main import build_parser, main
from .reports import Report

__all__ = ["Report", "build_parser", "main"]
