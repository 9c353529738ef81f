from enum import StrEnum
from typing import Self


class Pos(StrEnum):
    NOUN = "NOUN"
    PROPN = "PROPN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    DET = "DET"
    PREP = "PREP"
    PRON = "PRON"
    CONJ = "CONJ"
    PUNCT = "PUNCT"
    NUM = "NUM"
    INTERROG = "INTERROG"

    @property
    def is_content(self) -> bool:
        return self in (Pos.NOUN, Pos.PROPN, Pos.VERB, Pos.ADJ, Pos.ADV, Pos.NUM)


class Relation(StrEnum):
    SUBJ = "SUBJ"
    VARG = "VARG"
    NMOD = "NMOD"
    NN = "NN"


class Feature(StrEnum):
    DIR = "DIR"
    INDIR = "INDIR"
    SPRED = "SPRED"


class ChunkKind(StrEnum):
    NP = "NP"
    VP = "VP"
    PP = "PP"
    AP = "AP"
    UNK = "UNK"


class Origin(StrEnum):
    ORIGINAL = "original"
    PARASYNONYM = "parasynonym"
    EXTERNAL = "external-synonym"
    DERIVATION = "derivation"


class Provenance(StrEnum):
    ORIGINAL = "original"
    DERIVED = "derived-rewrite"


class Granularity(StrEnum):
    SENTENCE = "sentence"
    PARAGRAPH = "paragraph"
    DOCUMENT = "document"


class FocusKind(StrEnum):
    EXPLICIT = "explicit-word"
    INTERROGATIVE = "interrogative-only"


class Condition(StrEnum):
    PLANCHER = "plancher", "Plancher", False, False, False
    SYN_NO_SEM = "syn-no-sem", "Synonymes (sans sémantique)", True, False, False
    SYN_SEM = "syn-sem", "Synonymes (avec sémantique)", True, True, False
    ALL = "all", "Tous les enrichissements", True, True, True

    label: str
    synonyms: bool
    sense_filter: bool
    derivations: bool

    def __new__(cls, value: str, label: str, synonyms: bool, sense_filter: bool, derivations: bool) -> Self:
        obj = str.__new__(cls, value)
        obj._value_ = value
        obj.label = label
        obj.synonyms = synonyms
        obj.sense_filter = sense_filter
        obj.derivations = derivations
        return obj
