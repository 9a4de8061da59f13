"""
Main entry point for the preperm command line.
This file automatically loads environment variables from .env file.
"""
import os
import sys
from pathlib import Path

from dotenv import load_dotenv

env_file = Path(".env")
if env_file.exists():
    load_dotenv(env_file)

# Add src to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "src"))

from preperm.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
