"""Print the six jellyfish tableaux of {{2,3,6,10},{5,7,8,9},{1,4}} with inversion counts and signs."""

from pennant_webs.jellyfish import enumerate_jellyfish, invariant_polynomial, inversion_number, sign
from pennant_webs.setpartitions import SetPartition

BLOCK_ORDER = [(2, 3, 6, 10), (5, 7, 8, 9), (1, 4)]


def main():
    pi = SetPartition.of(BLOCK_ORDER)
    for t in enumerate_jellyfish(pi, BLOCK_ORDER):
        print("\n".join(" ".join(f"{x:>2}" if x else "  " for x in row) for row in t.grid()))
        print(f"reading word {t.reading_word()}  inv={inversion_number(t)}  sign={sign(t):+d}\n")
    print(f"[pi] has {len(invariant_polynomial(pi).terms)} monomials")


if __name__ == "__main__":
    main()
