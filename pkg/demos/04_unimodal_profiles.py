"""Group standard tableaux by type and print their a-statistic profiles.

Fixing mu and a type class (head tableau plus block letters), the number of
standard tableaux with a_mu(T) = k, as k runs from 0 upward, forms the
sequence printed on each line.  Every sequence observed for |mu| <= 8 rises
then falls; the script verifies that instead of assuming it.
"""

from qtkostka.partitions import format_partition, partitions_of
from qtkostka.stats import is_unimodal, unimodal_profile
from qtkostka.vertex import UnsupportedShapeError, classify_shape


def show_profile(mu) -> None:
    print(f"\nmu = ({format_partition(mu)})")
    for kind, seq in unimodal_profile(mu).items():
        verdict = "unimodal" if is_unimodal(seq) else "NOT UNIMODAL"
        print(f"  {kind.text():>18}  {','.join(map(str, seq))}  {verdict}")


def sweep(max_n: int) -> None:
    checked = 0
    for n in range(1, max_n + 1):
        for mu in partitions_of(n):
            try:
                kind = classify_shape(mu)
            except UnsupportedShapeError:
                continue
            if kind[0] != "direct":
                continue
            for seq in unimodal_profile(mu).values():
                assert is_unimodal(seq), (mu, seq)
                checked += 1
    print(f"\nverified {checked} type-class profiles up to size {max_n}: all unimodal")


if __name__ == "__main__":
    for mu in ((3, 1, 1, 1), (4, 1, 1), (3, 2, 2, 1)):
        show_profile(mu)
    sweep(8)
