"""Products of class sums: in a fixed group and in the universal algebra.

The coefficient of a class sum in a product of two class sums counts
factorizations of a fixed representative.  Computing the same product
once and for all, independently of n, is done with k-partial
permutations: the universal expansion projects onto the group-level one
for every n at once.
"""

from wreathcenter import PartitionFamily, format_family, multiply_group, multiply_universal, pad_family
from wreathcenter.center import project


def fam(k, *components):
    return PartitionFamily.from_components(k, components)


def show(vector):
    for label, coeff in vector.items_sorted():
        print(f"    {coeff:3d} * C{format_family(label)}")


# Transpositions times transpositions in the plain symmetric group (k=1).
left = fam(1, (2,))
print("universal product, k=1:  C[2] * C[2]")
expansion = multiply_universal(left, left)
show(expansion)

print("projected to n=4 (coefficient of the identity class is C(4,2) = 6):")
show(project(expansion, 4))

print("independent in-group computation at n=4:")
show(multiply_group(fam(1, (2, 1, 1)), fam(1, (2, 1, 1)), 4))
print()

# A signed-pair (k=2) example: squaring the class of one joined 2-cycle.
two = fam(2, (), (2,))
print("universal product, k=2:  C[{[2]:[2]}] squared")
expansion2 = multiply_universal(two, two)
show(expansion2)

for n in (4, 5, 6):
    projected = project(expansion2, n)
    brute = multiply_group(pad_family(two, n), pad_family(two, n), n)
    assert projected == brute
    coeff = projected.coefficient(PartitionFamily.identity(2, n))
    print(f"  n={n}: identity coefficient {coeff} = n(n-1); agreement with brute force: yes")
print()

# One k=3 product from the triple-block group.
a = fam(3, (), (1,), (1,))
b = fam(3, (), (1,), ())
print("universal product, k=3:")
show(multiply_universal(a, b))
