# Group-ring arithmetic: convolution products, the circle product and
# the Lie bracket, all over index tables.

from jrl import GroupRing, builtin_group, builtin_ring
from jrl.groupring import circle, format_element, left_normed_jordan, lie_bracket

rg = GroupRing(builtin_ring("Z4"), builtin_group("D4"))
print(f"context {rg.name}: {rg.size} elements")

# elements are coefficient vectors indexed by group element; index 1 is
# a rotation and index 4 a reflection, so these two really do not commute
a = rg.element([0, 1, 0, 0, 2, 0, 0, 0])
b = rg.element([0, 0, 0, 3, 0, 1, 0, 0])
print("a      =", format_element(a))
print("b      =", format_element(b))
print("a*b    =", format_element(a * b))
print("b*a    =", format_element(b * a))  # group is non-abelian, so this differs

# circle product a o b = ab + ba is commutative even here
print("a o b  =", format_element(circle(a, b)))
print("b o a  =", format_element(circle(b, a)))

# bracket [a,b] = ab - ba measures exactly the failure to commute
print("[a,b]  =", format_element(lie_bracket(a, b)))

# left-normed circle products fold to the left: ((a o b) o c) o ...
c = rg.one()
chain = left_normed_jordan([a, b, c, a])
print("(((a o b) o 1) o a) =", format_element(chain))

# monomials embed single terms
m = rg.embed(3, 5)
print("monomial 3@5 squared:", format_element(m * m))
