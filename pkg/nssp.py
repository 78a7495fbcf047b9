#!/usr/bin/env python3
"""
NSSP speech enhancement command line.

Usage:
    python nssp.py enhance noisy.wav enhanced.wav
    python nssp.py batch experiments.txt results.csv --workers 4
"""

import sys

from src.cli.main import main


if __name__ == '__main__':
    sys.exit(main())
