import itertools
import random

import pytest

from reference import assignment_F, assignment_optimal, distance_cost, random_tree, token_evacuation
from treesink.oracles import evac_time
from treesink.tree import EmptySet, path, star3
from treesink.validation import (TooLarge, best_partition, brute_force_F, brute_force_feasible,
                                 brute_force_optimal, cut_blocks)


def evac(inst):
    return lambda U, v: evac_time(inst, U, v)


def test_F_single_middle_sink():
    inst = path(3)
    assert brute_force_F(inst, evac(inst), {1}) == 1


def test_F_both_ends():
    inst = path(3)
    assert brute_force_F(inst, evac(inst), {0, 2}) == 1


def test_F_every_vertex_a_sink():
    rng = random.Random(0)
    for _ in range(10):
        inst = random_tree(rng, rng.randint(1, 8))
        assert brute_force_F(inst, evac(inst), range(inst.n)) == 0


def test_F_empty_sink_set():
    with pytest.raises(EmptySet):
        brute_force_F(path(3), evac(path(3)), [])


def test_optimal_path3_one_sink():
    inst = path(3)
    assert brute_force_optimal(inst, evac(inst), 1) == (1, (1,))


def test_optimal_path4_two_sinks():
    inst = path(4)
    f = evac(inst)
    cost, S = brute_force_optimal(inst, f, 2)
    assert cost == 1
    assert brute_force_F(inst, f, {1, 3}) == 1
    # every achiever, listed independently, starts with the returned set
    achievers = sorted(S2 for r in (1, 2) for S2 in itertools.combinations(range(4), r)
                       if assignment_F(inst, lambda U, v: token_evacuation(inst, U, v), S2) == 1)
    assert S == achievers[0] == (0, 2)


def test_optimal_path3_all_sinks():
    inst = path(3)
    assert brute_force_optimal(inst, evac(inst), 3) == (0, (0, 1, 2))


def test_too_large():
    inst = path(17)
    with pytest.raises(TooLarge):
        brute_force_F(inst, evac(inst), {0})
    with pytest.raises(TooLarge):
        brute_force_optimal(inst, evac(inst), 1)
    assert brute_force_F(path(5), evac(path(5)), {2}, cap=5) == 2


def test_cut_blocks():
    inst = path(4)
    assert sorted(map(sorted, cut_blocks(inst, [1]))) == [[0, 1], [2, 3]]
    assert cut_blocks(inst, []) == [{0, 1, 2, 3}]


def test_best_partition_blocks_attain_the_cost():
    inst = star3(k=2)
    cost, blocks = best_partition(inst, evac(inst), {0, 1})
    assert cost == 2
    assert sorted(s for _, s in blocks) == [0, 1]
    assert max(evac_time(inst, b, s) for b, s in blocks) == cost


def test_feasible_is_a_threshold_on_the_optimum():
    inst = path(4)
    assert not brute_force_feasible(inst, evac(inst), 1, 1)
    assert brute_force_feasible(inst, evac(inst), 1, 2)


@pytest.mark.parametrize("seed", range(3))
def test_F_matches_independent_assignment(seed):
    rng = random.Random(seed)
    for _ in range(30):
        inst = random_tree(rng, rng.randint(1, 7))
        S = rng.sample(range(inst.n), rng.randint(1, inst.n))
        for ref in (token_evacuation, distance_cost):
            f = lambda U, v: ref(inst, U, v)  # noqa: E731
            assert brute_force_F(inst, f, S) == assignment_F(inst, f, S)


def test_optimal_matches_independent_assignment():
    rng = random.Random(9)
    for _ in range(30):
        k = rng.randint(1, 3)
        inst = random_tree(rng, rng.randint(1, 7))
        f = lambda U, v: token_evacuation(inst, U, v)  # noqa: E731
        assert brute_force_optimal(inst, f, k) == assignment_optimal(inst, f, k)


def test_optimal_non_increasing_in_k():
    rng = random.Random(3)
    for _ in range(10):
        inst = random_tree(rng, rng.randint(2, 8))
        costs = [brute_force_optimal(inst, evac(inst), k)[0] for k in range(1, inst.n + 1)]
        assert costs == sorted(costs, reverse=True)
        assert costs[-1] == 0


def test_splitting_a_block_at_its_sink_keeps_the_value():
    # a block's cost is the max over the sides of its sink
    rng = random.Random(6)
    for _ in range(30):
        inst = random_tree(rng, rng.randint(2, 8))
        cost, blocks = best_partition(inst, evac(inst), rng.sample(range(inst.n), 2))
        for b, s in blocks:
            parts = [{s} | (b & side) for side in _sides(inst, s)]
            split = max((evac_time(inst, p, s) for p in parts), default=0)
            assert split == evac_time(inst, b, s)


def _sides(inst, v):
    out = []
    for y in inst.adj[v]:
        comp, stack = {y}, [y]
        while stack:
            a = stack.pop()
            for b in inst.adj[a]:
                if b != v and b not in comp:
                    comp.add(b)
                    stack.append(b)
        out.append(comp)
    return out
