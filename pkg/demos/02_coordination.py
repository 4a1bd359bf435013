"""
Generalized coordination
========================

One procedure covers every like-category coordination: descend under each
argument slot with a fresh constant, conjoin at the atomic result, then
abstract the constants back out.
"""

from ccgsem import FreshSource, coordinate, parse_cat, parse_term, phi_oracle, show_term
from ccgsem.terms import Const

AND = Const("and'")

# "John and Bill", both raised to s/(s\np)
raised = parse_cat("s/(s\\np)")
john = parse_term("lam p. (p john')")
bill = parse_term("lam p. (p bill')")
print(show_term(coordinate(raised, AND, john, bill, FreshSource())))

# "likes and hates", two transitive verbs
tv = parse_cat("(s\\np)/np")
like = parse_term("lam o. lam s. (like' s o)")
hate = parse_term("lam o. lam s. (hate' s o)")
result = coordinate(tv, AND, like, hate, FreshSource())
print(show_term(result))

# The same result built directly from the two-argument pointwise combinator.
f = parse_term("lam x. lam y. (and' x y)")
print(phi_oracle(2, f, like, hate) == result)

# Any connective works; the category decides how deep to descend.
print(show_term(coordinate(parse_cat("s\\np"), Const("or'"),
                           parse_term("lam s. (run' s)"), parse_term("lam s. (talk' s)"),
                           FreshSource())))
