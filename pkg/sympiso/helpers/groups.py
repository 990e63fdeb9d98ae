from typing import Iterable, List, TypeVar

T = TypeVar('T')

"""
Below are functions that allocate candidates of an exhaustive search to
shards. Every shard is handed to one worker; the merged result must not
depend on how the candidates were spread, so consumers re-sort canonically.
"""


def shard_round_robin(candidates: Iterable[T], n_shards: int = 4) -> List[List[T]]:
    """
    Deal candidates to shards like cards: candidate i goes to shard i mod n_shards.

    :param candidates: Candidates in enumeration order.
    :param n_shards: Number of shards to make.
    :return: List of shards, none of them empty unless there are fewer candidates than shards.
    """
    if n_shards < 1:
        raise ValueError(f"need at least one shard, got {n_shards}")
    shards = [[] for _ in range(n_shards)]
    for index, candidate in enumerate(candidates):
        shards[index % n_shards].append(candidate)
    return [shard for shard in shards if shard]
