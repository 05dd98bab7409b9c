"""Structure constants as polynomials in n.

Fix two class labels with no free fixed blocks (proper families) and pad
them with fixed blocks up to size n.  The coefficient of any padded
target in their product is then a polynomial in n, and its binomial-basis
coefficients are nonnegative integers that the universal product hands
over directly.
"""

from wreathcenter import PartitionFamily, format_family, multiply_group, pad_family
from wreathcenter.center import polynomial_structure


def fam(k, *components):
    return PartitionFamily.from_components(k, components)


left = fam(1, (2,))
structure = polynomial_structure(left, left)
print("binomial rows for C[2] * C[2] at k=1 (target, extra 1-parts) -> coefficient:")
for (gamma, r), coeff in structure.rows_sorted():
    print(f"    ({format_family(gamma)}, r={r}) -> {coeff}")
print()

empty = PartitionFamily.empty(1)
print("coefficient of the identity class as a function of n: C(n,2)")
for n in range(4, 9):
    value = structure.evaluate(empty, n)
    brute = multiply_group(pad_family(left, n), pad_family(left, n), n)
    check = brute.coefficient(pad_family(empty, n))
    print(f"    n={n}: evaluate -> {value:3d}, brute force -> {check:3d}, n(n-1)/2 = {n*(n-1)//2}")
print()

# A k=3 pair whose product has one genuinely linear coefficient.
a = fam(3, (), (1,), (1,))
b = fam(3, (), (), (1,))
structure3 = polynomial_structure(a, b)
gamma = fam(3, (), (1,), ())
print(f"k=3: coefficient of C{format_family(pad_family(gamma, 5))}-style targets grows as 2(n-1):")
for n in (3, 4, 5, 6):
    print(f"    n={n}: {structure3.evaluate(gamma, n)}")
