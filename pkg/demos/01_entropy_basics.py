"""
Entropy, the zero-probability convention, and mutual information
================================================================

How much does one symbol of a discrete source tell you?  This walk-through
computes entropies and mutual informations for small hand-sized examples.
"""

import numpy as np

from chancap import (
    LogConfig,
    conditional_entropy,
    entropy,
    joint_entropy,
    mutual_information,
)

# A fair coin carries exactly one bit; a biased one carries less.
print("H(fair coin)    =", entropy([0.5, 0.5]))
print("H(90/10 coin)   =", entropy([0.9, 0.1]))
print("H(certainty)    =", entropy([1.0, 0.0]))

# Zeros in a distribution are harmless: 0 * log(0) counts as 0.  The library
# makes the choice of log(0) explicit (and irrelevant): any placeholder value
# gives the same entropy, because it is always multiplied by zero mass.
p = [0.5, 0.25, 0.25, 0.0]
for w in (0.0, -50.0, 7.0):
    print(f"H with log*(0)={w:+.0f}:", entropy(p, LogConfig(star_value=w)))

# Uniform distributions maximize entropy at log2(n).
for n in (2, 4, 8, 1024):
    print(f"H(uniform {n:>4}) = {entropy(np.full(n, 1.0 / n)):.12f}  (log2 = {np.log2(n):g})")

# Units follow the log base: bits for base 2, nats for base e.
print("H in bits:", entropy([0.3, 0.7]))
print("H in nats:", entropy([0.3, 0.7], LogConfig(base=np.e)))

# A joint distribution ties two variables together.  Its entropy never
# exceeds the sum of the marginal entropies; the gap is the mutual
# information, the information the variables share.
joint = np.array([[0.3, 0.2], [0.1, 0.4]])
hx = entropy(joint.sum(axis=1))
hy = entropy(joint.sum(axis=0))
hxy = joint_entropy(joint)
print("H(X) =", hx, " H(Y) =", hy, " H(X,Y) =", hxy)
print("I(X;Y) = H(X)+H(Y)-H(X,Y) =", mutual_information(joint))

# For an independent pair the joint factors and the information is zero.
indep = np.outer([0.4, 0.6], [0.2, 0.3, 0.5])
print("I(independent) =", mutual_information(indep))

# Conditional entropy: what remains unknown about the channel output once
# you know the input.  Row one is a clean 90/10 channel, row two pure noise.
q = [[0.9, 0.1], [0.5, 0.5]]
print("H(Y|X) =", conditional_entropy([0.5, 0.5], q))
