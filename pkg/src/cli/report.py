"""
Command reports: text lines plus a structured mirror for --json.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from config import EXIT_OK
from src.data.interchange import dumps, vector_to_list
from src.field.parsing import format_scalar
from src.linalg.matrix import Matrix


@dataclass
class Report:
    """
    Output of one subcommand.

    document is an interchange document emitted by constructive commands;
    it is written to --out when given and printed otherwise.
    """
    command: str
    lines: List[str] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = EXIT_OK
    document: Optional[Dict[str, Any]] = None

    def add(self, key: str, value, text: Optional[str] = None):
        """Record a value in data and, unless text is "", a line of text."""
        self.data[key] = value
        if text != "":
            self.lines.append(text if text is not None else f"{key}: {value}")

    def summary(self) -> str:
        return "\n".join(self.lines) + "\n" if self.lines else ""

    def render(self, json_output: bool, document_written: bool = False) -> str:
        """
        Text for stdout.

        In text mode a document that was not written to a file is printed on
        its own, so stdout can be saved and reloaded; the caller sends the
        summary to stderr in that case.
        """
        if json_output:
            payload = {"command": self.command, "exit_code": self.exit_code}
            payload.update(self.data)
            if self.document is not None and not document_written:
                payload["document"] = self.document
            return dumps(payload)
        if self.document is not None and not document_written:
            return dumps(self.document)
        return self.summary()

    def summary_on_stderr(self, json_output: bool, document_written: bool) -> bool:
        return not json_output and self.document is not None and not document_written


def format_vector(v: Sequence) -> str:
    return "(" + ", ".join(vector_to_list(v)) + ")"


def matrix_lines(m: Matrix, indent: str = "  ") -> List[str]:
    return [indent + "[" + ", ".join(format_scalar(x) for x in m.row(i)) + "]" for i in range(m.rows)]


def matrix_data(m: Matrix) -> List[List[str]]:
    return [vector_to_list(m.row(i)) for i in range(m.rows)]
