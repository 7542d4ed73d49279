#!/usr/bin/env python3
"""
Minimal import test for the Hopf image toolkit components.
"""

import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

MODULES = [
    ("config", "DEFAULT_CONDUCTOR"),
    ("src.utils.logging", "setup_logging"),
    ("src.utils.error_handling", "ErrorHandler"),
    ("src.field", "context_for"),
    ("src.linalg", "Matrix"),
    ("src.hopf", "HopfAlgebraData"),
    ("src.image", "hopf_image"),
    ("src.pointed", "pointed_criterion"),
    ("src.twisting", "twist_hopf"),
    ("src.tannaka", "tannaka_equality_check"),
    ("src.builders", "ake"),
    ("src.data.interchange", "hopf_to_document"),
    ("src.data.session", "SessionConfig"),
    ("src.cli", "run"),
]


def check_imports():
    """Import every component and report failures."""
    failures = []
    for module, name in MODULES:
        try:
            getattr(__import__(module, fromlist=[name]), name)
            print(f"✓ {module}.{name} imported")
        except Exception as e:
            print(f"✗ {module}.{name} import failed: {e}")
            failures.append(module)
    return failures


def check_objects():
    """Create the basic objects the command line relies on."""
    from src.data.session import SessionConfig
    from src.field import context_for
    from src.utils.error_handling import ErrorHandler

    session = SessionConfig("validate")
    print(f"✓ SessionConfig created (conductor {session.context.conductor})")
    ErrorHandler()
    print("✓ ErrorHandler created")
    ctx = context_for(12)
    print(f"✓ Q(zeta_12) created with degree {ctx.degree}")


def test_imports():
    assert check_imports() == []


def test_objects():
    check_objects()


if __name__ == "__main__":
    print("Testing imports...")
    failed = check_imports()
    print("\nTesting object creation...")
    check_objects()
    print("\nAll basic components tested!" if not failed else f"\n{len(failed)} imports failed")
