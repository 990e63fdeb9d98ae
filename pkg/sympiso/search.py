"""
Exhaustive searches in `sympiso` run over finite groups that are streamed in
a fixed order. A `ShardedSearch` spreads such a stream over worker processes
and merges the results back into a canonical order, so the answer never
depends on the number of workers.
"""
from itertools import chain
from typing import Any, Callable, Iterable, List, Optional, Sequence, TypeVar

from multiprocess.pool import Pool

from sympiso.helpers.groups import shard_round_robin

T = TypeVar('T')
R = TypeVar('R')


class ShardedSearch:
    """Filter or map candidate shards, optionally in a pool of worker processes.

    :param concurrent_workers: If > 1, run shards in {concurrent_workers}
        separate processes. If None, concurrent_workers is set to n_cpus.
        Defaults to 1.
    :param shards_per_worker: Number of shards handed to each worker.
    """

    def __init__(self, concurrent_workers: Optional[int] = 1, shards_per_worker: int = 4):
        self.concurrent_workers = concurrent_workers
        self.shards_per_worker = shards_per_worker
        self.pool = None if concurrent_workers == 1 else Pool(concurrent_workers)

    def __repr__(self):
        return f"<ShardedSearch with {self.concurrent_workers or 'all'} workers at {id(self)}>"

    def __enter__(self) -> 'ShardedSearch':
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self):
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None

    @property
    def n_shards(self) -> int:
        if self.pool is None:
            return 1
        return self.shards_per_worker * (self.concurrent_workers or self.pool._processes)

    def map_shards(self, func: Callable[[Any], R], shards: Sequence[Any]) -> List[R]:
        """Apply func to every shard; results come back in shard order."""
        if self.pool is None:
            return [func(shard) for shard in shards]
        return self.pool.map(func, shards)

    def filter(self, predicate: Callable[[T], bool], candidates: Iterable[T],
               key: Optional[Callable[[T], Any]] = None) -> List[T]:
        """Candidates satisfying predicate, sorted by key.

        :param key: Canonical sort key of the results. Defaults to the
            candidates' own ordering.
        """
        if self.pool is None:
            found = [candidate for candidate in candidates if predicate(candidate)]
        else:
            shards = shard_round_robin(candidates, n_shards=self.n_shards)
            found = list(chain.from_iterable(self.pool.map(lambda s: [c for c in s if predicate(c)], shards)))
        return sorted(found, key=key)


def resolve_search(search: Optional[ShardedSearch]) -> ShardedSearch:
    return search if search is not None else ShardedSearch(concurrent_workers=1)
