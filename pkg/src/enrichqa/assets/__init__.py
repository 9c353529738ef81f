"""Bundled desk-scale lexicon, grammar, corpus and questions."""
