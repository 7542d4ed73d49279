"""
Per-run session settings for the command-line front end.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from config import DEFAULT_CONDUCTOR, MAX_CONDUCTOR, OUTPUT_MODE
from src.field.cyclotomic import CyclotomicContext, context_for
from src.utils.error_handling import ConfigurationException


logger = logging.getLogger(__name__)

OUTPUT_MODES = ("text", "json")


@dataclass
class SessionConfig:
    """
    Conductor, input files, command and output mode of one run.

    The conductor is fixed by the first loaded document (or the command
    line); every later document must declare the same one.
    """
    command: str
    conductor: Optional[int] = None
    output_mode: str = OUTPUT_MODE
    inputs: List[str] = field(default_factory=list)
    declared: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.output_mode not in OUTPUT_MODES:
            raise ConfigurationException(f"Unknown output mode: {self.output_mode}")
        if self.conductor is not None:
            self._check_range(self.conductor, "command line")

    @staticmethod
    def _check_range(conductor, source: str):
        if not isinstance(conductor, int) or isinstance(conductor, bool) or conductor < 1:
            raise ConfigurationException(f"{source}: conductor must be a positive integer, got {conductor!r}")
        if conductor > MAX_CONDUCTOR:
            raise ConfigurationException(f"{source}: conductor {conductor} exceeds MAX_CONDUCTOR={MAX_CONDUCTOR}")

    def register(self, source: str, conductor) -> CyclotomicContext:
        """
        Record the conductor declared by an input document.

        Args:
            source: File name or description of the document
            conductor: Value of its "conductor" field

        Returns:
            The session's field

        Raises:
            ConfigurationException: on an invalid or conflicting conductor
        """
        self._check_range(conductor, source)
        if self.conductor is None:
            self.conductor = conductor
            logger.debug(f"Conductor {conductor} fixed by {source}")
        elif conductor != self.conductor:
            raise ConfigurationException(
                f"{source} declares conductor {conductor}, but the session uses {self.conductor}"
            )
        self.declared[source] = conductor
        if source not in self.inputs:
            self.inputs.append(source)
        return self.context

    @property
    def context(self) -> CyclotomicContext:
        return context_for(self.conductor or DEFAULT_CONDUCTOR)

    @property
    def json_output(self) -> bool:
        return self.output_mode == "json"
