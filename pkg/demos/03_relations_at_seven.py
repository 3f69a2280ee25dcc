"""The two linear relations among the f_lam for n = 7.

Prints a certified basis of the relations and checks that the two classical
identities

    4 f(2,2,1,1,1) = 3 f(3,1,1,1,1) + f(3,2,2)
    3 f(3,2,1,1)   = 2 f(4,1,1,1)   + f(4,3)

lie in its span.
"""

from symspan import Partition as P
from symspan.formats import certificates_to_json
from symspan.rank import in_span, make_certificate, nullspace_certificates

certs = nullspace_certificates(7)
print(certificates_to_json(7, certs))

first = {P((2, 2, 1, 1, 1)): 4, P((3, 1, 1, 1, 1)): -3, P((3, 2, 2)): -1}
second = {P((3, 2, 1, 1)): 3, P((4, 1, 1, 1)): -2, P((4, 3)): -1}
for rel in (first, second):
    cert = make_certificate(7, rel)
    print(cert.terms, "verified:", cert.verified, "in span:", in_span(rel, certs))

# The relation as a statement about characters, N = 0..15:
from symspan import series_row

a, b, c = (series_row(P(p), 15) for p in [(2, 2, 1, 1, 1), (3, 1, 1, 1, 1), (3, 2, 2)])
print([4 * x for x in a])
print([3 * y + z for y, z in zip(b, c)])
