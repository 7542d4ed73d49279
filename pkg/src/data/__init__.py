"""Session settings and the JSON interchange format for the command line."""

from src.data.session import SessionConfig
