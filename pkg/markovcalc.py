#!/usr/bin/env python3
"""Launcher script for MarkovCalc."""

import sys

from markovcalc.cli import main

if __name__ == "__main__":
    sys.exit(main())
