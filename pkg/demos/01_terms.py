"""
Logical forms as lambda terms
=============================

Terms are nameless internally, so two LFs that differ only in bound-variable
names are the same value.
"""

from ccgsem import abstract_scoped, alpha_eq, beta_step, normalize, parse_term, show_term
from ccgsem.terms import App, FreshSource

# Parse a term that still contains a redex and watch it reduce one step at a time.
t = parse_term("lam x. ((lam sub. (found' sub x)) harry')")
print(show_term(t))
print(show_term(beta_step(t)))
print(show_term(normalize(t)))

# Bound names do not matter.
print(alpha_eq(parse_term("lam x. (run' x)"), parse_term("lam y. (run' y)")))

# A scoped constant behaves like a constant until it is abstracted back out.
src = FreshSource()
c = src.fresh()
body = normalize(App(App(parse_term("lam a. lam b. (and' (a john') (b bill'))"), c), c))
print(show_term(body))
print(show_term(abstract_scoped(c, body)))
