"""Conjugacy classes of block-permutation groups.

Walks through the class structure of the group of permutations of [kn]
that send k-blocks to k-blocks: extracting the class label of a concrete
element, listing all classes with exact sizes, and confirming the size
formula against brute-force enumeration.
"""

from collections import Counter

from wreathcenter import BlockPermutation, class_size, families_with_size, format_family
from wreathcenter.blockperm import enumerate_group, group_order

# A permutation on 18 points with blocks of size 3.  Blocks 1 and 4 are
# braided into one six-cycle, blocks 2 and 5 are glued by a pattern that
# splits 2+1, block 3 is fixed pointwise, block 6 carries a 3-cycle.
omega = BlockPermutation(3, 6, (12, 10, 11, 13, 14, 15, 7, 8, 9, 1, 2, 3, 5, 4, 6, 17, 18, 16))

print("element:", omega.to_text())
print("induced permutation of blocks:", omega.quotient())
label = omega.type_of()
print("class label:", format_family(label))
print("class size:", class_size(label, 6))
print()

# Every class of the 8-element group with k = 2, n = 2, with sizes.
print("classes of the k=2, n=2 group (order %d):" % group_order(2, 2))
for fam in families_with_size(2, 2):
    print(f"  {format_family(fam):28s} size {class_size(fam, 2)}")
print()

# The formula never disagrees with counting.
k, n = 2, 3
buckets = Counter(w.type_of() for w in enumerate_group(k, n))
print(f"enumerated {group_order(k, n)} elements of the k={k}, n={n} group")
for fam, count in sorted(buckets.items(), key=lambda item: item[0].sort_key()):
    formula = class_size(fam, n)
    marker = "ok" if formula == count else "MISMATCH"
    print(f"  {format_family(fam):32s} counted {count:3d}  formula {formula:3d}  {marker}")
