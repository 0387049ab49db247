"""Golden regression fixtures for the documented text formats."""

from morava2.groups import quaternion_group
from morava2.presentations import build, presentation_text

Q8_TABLE = """\
8
0 1 2 3 4 5 6 7
1 2 3 0 5 6 7 4
2 3 0 1 6 7 4 5
3 0 1 2 7 4 5 6
4 7 6 5 2 1 0 3
5 4 7 6 3 2 1 0
6 5 4 7 0 3 2 1
7 6 5 4 1 0 3 2
"""

Q8_PRESENTATION = """\
family: q8
s: 1
variables: c:2 x:2 c2:4
period: 2
relations: 5
c^2
x^2
c^2 + c*c2
c^2 + c*x + x^2 + c2^2
x^2 + x*c2
"""

OCTA_S2_PRESENTATION = """\
family: octa
s: 2
variables: c:2 c2:4
period: 6
relations: 3
c^4
c^3*c2 + c*c2^2 + c^2
c2^10
"""


def test_q8_multiplication_table_golden():
    assert quaternion_group(1).table_dump() == Q8_TABLE


def test_presentation_dumps_golden():
    assert presentation_text(build("q8", 1)) == Q8_PRESENTATION
    assert presentation_text(build("octa", 2)) == OCTA_S2_PRESENTATION
