"""
Parsing sentences to logical forms
==================================

The chart parser combines lexical entries with application, composition,
type raising and coordination, and groups full-span results by LF.
"""

from ccgsem import ParserConfig, derivation_trace, parse, parse_cat, readings, sample_lexicon

lex = sample_lexicon()

for sentence in [
    "john and bill run",
    "every man found a bone",
    "a farmer and every senator talk",
    "mary gave every dog a bone and some policeman a flower",
]:
    print(sentence)
    for r in readings(parse(lex, sentence.split()), parse_cat("s")):
        print("   ", r)

# A non-constituent fragment: raised subject composed with the verb.
(r,) = readings(parse(lex, ["harry", "found"]), parse_cat("s/np"))
print(derivation_trace(r.derivations[0]))

# Bounding coordination depth removes the argument-cluster reading.
bounded = ParserConfig(coord_depth_bound=1)
chart = parse(lex, "mary gave every dog a bone and some policeman a flower".split(), bounded)
print(len(readings(chart, parse_cat("s"))), "readings with coordination depth <= 1")
