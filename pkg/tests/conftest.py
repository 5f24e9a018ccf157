
from mkhunt.catalog import SingularityClass


def all_classes(limit=50):
    out = [SingularityClass("A", k) for k in range(1, limit + 1)]
    out += [SingularityClass("D", k) for k in range(4, limit + 1)]
    out += [SingularityClass("E", k) for k in (6, 7, 8)]
    return out

