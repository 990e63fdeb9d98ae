"""
Helpers in `sympiso` are small functions used by the searches: splitting
candidate streams into shards for worker processes, and working with
permutations of qudit slots.
"""
