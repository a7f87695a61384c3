"""Fixed word lists used by the deterministic mock backends and seed extraction.

These lists are normative for the mock contracts: golden tests pin outputs
computed from them, so additions change pinned behavior and bump the mock
version.
"""

from __future__ import annotations

# Classic English stopword list (closed-class words only, frozen).
STOPWORDS = frozenset("""
a about above after again against all am an and any are aren as at be because
been before being below between both but by can cannot could couldn did didn
do does doesn doing don down during each few for from further had hadn has
hasn have haven having he her here hers herself him himself his how i if in
into is isn it its itself just me more most mustn must my myself no nor not of
off on once only or other ought our ours ourselves out over own same shan she
should shouldn so some such than that the their theirs them themselves then
there these they this those through to too under until up very was wasn we
were weren what when where which while who whom why will with won would
wouldn you your yours yourself yourselves
""".split())

# Head nouns that mark a span as denoting a person or body with agency;
# drives the Who/What template choice and seed-span eligibility.
ROLE_NOUNS = frozenset("""
manager managers engineer engineers officer officers director directors
leader leaders chair chairman chairperson head heads owner owners author
authors operator operators supplier suppliers customer customers contractor
contractors expert experts trainer trainers trainee trainees reviewer
reviewers inspector inspectors auditor auditors coordinator coordinators
representative representatives specialist specialists analyst analysts
administrator administrators board committee team secretariat agency
authority staff personnel stakeholder stakeholders evaluator evaluators
""".split())

# Auxiliary and modal verbs: anchor points for the mock's verb-phrase scan.
AUX_VERBS = frozenset("""
is are was were be been being has have had do does did shall should will
would can could may might must
""".split())

MONTHS = frozenset("""
january february march april may june july august september october november
december
""".split())
