"""Business logic: classification, structure, constructions, census and verification."""
