"""CLASSIC description logic reasoning."""
