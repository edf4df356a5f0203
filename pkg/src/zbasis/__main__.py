#!/usr/bin/env python3
"""
Main entry point for running zbasis as a module.
This allows running with `python -m zbasis`.
"""

if __name__ == "__main__":
    from .cli import main
    main()
