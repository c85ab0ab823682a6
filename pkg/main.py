"""
Main entry point for the Leech (co)homology toolkit.

Run with: python main.py --help
"""

from src.cli import app

if __name__ == "__main__":
    app()
