"""GHRS codes toolkit: Hermite Reed-Solomon codes in the NRT metric."""

__version__ = "0.1.0"
