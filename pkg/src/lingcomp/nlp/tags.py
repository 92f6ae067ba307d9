"""Penn Treebank tag handling and the coarse lexical classes.

Fine tags collapse into the four lexical-item classes used by the density
and sophistication measures; modals, pronouns, wh-adverbs and everything
else are function words (OTHER).
"""

from __future__ import annotations

from enum import Enum

# The full fine tag set accepted in training corpora (word tags plus the
# punctuation tags used by the Treebank).
PENN_TAGS = frozenset(
    {
        "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
        "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
        "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
        "VBZ", "WDT", "WP", "WP$", "WRB",
        ".", ",", ":", "(", ")", "``", "''", "$", "#", "-LRB-", "-RRB-",
    }
)


class LexicalClass(str, Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    OTHER = "OTHER"


_COARSE = {
    "NN": LexicalClass.NOUN,
    "NNS": LexicalClass.NOUN,
    "NNP": LexicalClass.NOUN,
    "NNPS": LexicalClass.NOUN,
    "VB": LexicalClass.VERB,
    "VBD": LexicalClass.VERB,
    "VBG": LexicalClass.VERB,
    "VBN": LexicalClass.VERB,
    "VBP": LexicalClass.VERB,
    "VBZ": LexicalClass.VERB,
    "JJ": LexicalClass.ADJ,
    "JJR": LexicalClass.ADJ,
    "JJS": LexicalClass.ADJ,
    "RB": LexicalClass.ADV,
    "RBR": LexicalClass.ADV,
    "RBS": LexicalClass.ADV,
}


def coarse_class(fine_tag: str) -> LexicalClass:
    """Collapse a fine tag into its lexical class; unknown tags are OTHER."""
    return _COARSE.get(fine_tag, LexicalClass.OTHER)
