"""Print q,t-Kostka tables and check duality, shape by shape.

Every entry K_{lambda,mu}(q,t) is computed exactly: the coefficients live in
Z[q,t], never in floating point.  The table for |mu| = n has one column per
computable shape mu and one row per lambda.  The final section demonstrates
the duality K_{lambda,mu}(q,t) = q^n(mu') t^n(mu) K_{lambda',mu}(1/q,1/t),
realized here as an exponent-reversing operation on the polynomial.
"""

from qtkostka.partitions import conjugate, format_partition, partitions_of, weighted_size
from qtkostka.vertex import UnsupportedShapeError, kostka, macdonald


def show_table(n: int) -> None:
    shapes = partitions_of(n)
    supported = []
    for mu in shapes:
        try:
            macdonald(mu)
            supported.append(mu)
        except UnsupportedShapeError:
            print(f"  (skipping mu = {format_partition(mu)}: no vertex-operator route)")
    print(f"\nK_(lambda,mu)(q,t) for |mu| = {n}")
    width = max(len(format_partition(lam)) for lam in shapes) + 2
    header = " " * width + " | ".join(f"mu=({format_partition(mu)})" for mu in supported)
    print(header)
    for lam in shapes:
        cells = [str(kostka(lam, mu)) for mu in supported]
        print(f"({format_partition(lam)})".ljust(width) + " | ".join(cells))


def show_duality(n: int) -> None:
    print(f"\nduality at |mu| = {n}: K_(lambda,mu) from K_(lambda',mu) by reversing exponents")
    for mu in partitions_of(n):
        try:
            macdonald(mu)
        except UnsupportedShapeError:
            continue
        dq, dt = weighted_size(conjugate(mu)), weighted_size(mu)
        for lam in partitions_of(n):
            direct = kostka(lam, mu)
            flipped = kostka(conjugate(lam), mu).reverse(dq, dt)
            assert direct == flipped, (lam, mu)
        print(f"  mu = ({format_partition(mu)}): all {len(partitions_of(n))} entries agree")


if __name__ == "__main__":
    for n in (2, 3, 4):
        show_table(n)
    show_duality(5)
