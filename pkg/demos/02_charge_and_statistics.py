"""Walk through the charge statistic and the (a, b) tableau statistics.

Charge is computed on words by splitting into standard subwords and summing
their individual charges.  The pair a_mu(T), b_mu(T) attaches exponents to
every standard tableau T so that summing q^a t^b over the tableaux of each
shape reproduces the Macdonald expansion of H_mu[X;q,t] term by term.
"""

from qtkostka.partitions import format_partition, partitions_of
from qtkostka.stats import stat_genfun, stat_pair, unbuild
from qtkostka.tableaux import charge, format_tableau, parse_tableau, standard_subwords, standard_tableaux
from qtkostka.vertex import macdonald


def charge_walkthrough() -> None:
    word = (7, 3, 4, 6, 2, 2, 3, 5, 1, 1, 1, 2, 4, 8)
    print(f"word: {word}")
    for sub in standard_subwords(word):
        print(f"  standard subword {sub} has charge {charge(sub)}")
    print(f"total charge: {charge(word)}")


def statistics_for(mu) -> None:
    print(f"\nstatistics for mu = ({format_partition(mu)})")
    for lam in partitions_of(sum(mu)):
        for tab in standard_tableaux(lam):
            a, b = stat_pair(mu, tab)
            print(f"  T = {format_tableau(tab)} of shape ({format_partition(lam)}): a={a} b={b}")
    assert stat_genfun(mu) == macdonald(mu)
    print(f"  sum of q^a t^b per shape = Schur expansion of H_({format_partition(mu)})")


def unbuild_chain() -> None:
    # peeling the tableau back down the tower of row/column insertions
    tab = parse_tableau("1,4,5/2,6/3")
    print(f"\nunbuilding {format_tableau(tab)} for mu = (2,2,2):")
    while tab:
        tab = unbuild(2, tab)
        print(f"  -> {format_tableau(tab) or '(empty)'}")


if __name__ == "__main__":
    charge_walkthrough()
    statistics_for((2, 1))
    statistics_for((2, 2))
    unbuild_chain()
