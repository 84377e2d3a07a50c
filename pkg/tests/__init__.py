"""Tests package for the GHRS codes toolkit."""
