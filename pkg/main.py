# main.py
import sys

from harness_2026.cli import main

if __name__ == "__main__":
    sys.exit(main())
