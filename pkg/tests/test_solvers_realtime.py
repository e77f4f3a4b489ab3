import math

import pytest

from gridbench import (
    AlgorithmId,
    AllocationProbe,
    Coord,
    Grid,
    NoPathError,
    RandomGridSpec,
    astar_oracle,
    generate_random_grid,
    solve,
)
from gridbench.solvers import RealTimeAgent, SolverParams
from helpers import assert_valid_path, dijkstra_from

SQRT2 = math.sqrt(2)

REALTIME = (AlgorithmId.LRTA_STAR, AlgorithmId.RTAA_STAR)


@pytest.mark.parametrize("algo", REALTIME, ids=lambda a: a.value)
class TestBasics:
    def test_adjacent_goal_single_move(self, algo):
        g = Grid(4, 4, frozenset(), (1, 1), (2, 2))
        out = solve(g, algo)
        assert len(out.path) == 2
        assert out.path_cost in (1.0, pytest.approx(SQRT2))

    def test_empty_grid_single_episode_is_optimal(self, algo):
        # lookahead 250 covers the whole 5x5 grid, so the first episode
        # finds the straight diagonal
        out = solve(Grid(5, 5, frozenset(), (0, 0), (4, 4)), algo)
        assert out.path_cost == pytest.approx(4 * SQRT2)

    def test_executed_cost_lower_bounded_by_oracle(self, algo):
        for seed in range(15):
            g = generate_random_grid(RandomGridSpec(n=20, density=0.3, sg_distance=13, seed=seed))
            out = solve(g, algo)
            assert_valid_path(g, out.path, out.path_cost)
            assert out.path_cost >= astar_oracle(g).path_cost - 1e-9

    def test_small_lookahead_still_terminates(self, algo):
        g = generate_random_grid(RandomGridSpec(n=12, density=0.25, sg_distance=8, seed=3))
        out = solve(g, algo, SolverParams(lookahead=1))
        assert out.path[-1] == g.goal

    def test_no_path(self, algo):
        ring = {(2, 2), (3, 2), (4, 2), (2, 3), (4, 3), (2, 4), (3, 4), (4, 4)}
        g = Grid(6, 6, frozenset(Coord(*c) for c in ring), (0, 0), (3, 3))
        with pytest.raises(NoPathError):
            solve(g, algo)


class TestRtaaHeuristicUpdates:
    def test_consistency_preserved_after_each_episode(self):
        # with a consistent initial h, the bulk update keeps
        # h(s) <= c(s, s') + h(s') over the episode's expanded set
        for seed in range(6):
            g = generate_random_grid(RandomGridSpec(n=10, density=0.25, sg_distance=7, seed=seed))
            agent = RealTimeAgent(g, SolverParams(lookahead=12), AllocationProbe(), adaptive=True)
            for _ in range(400):
                done = agent.run_episode()
                for s in agent.last_closed:
                    hs = agent.h_value(s)
                    for n, c in g.neighbors8(s):
                        assert hs <= c + agent.h_value(n) + 1e-9
                if done:
                    break
            assert agent.done

    def test_updates_never_lower_h(self):
        g = generate_random_grid(RandomGridSpec(n=12, density=0.2, sg_distance=8, seed=1))
        agent = RealTimeAgent(g, SolverParams(lookahead=10), AllocationProbe(), adaptive=True)
        before = {
            (x, y): agent.h_value((x, y)) for x in range(12) for y in range(12)
        }
        while not agent.run_episode():
            pass
        for cell, h0 in before.items():
            assert agent.h_value(cell) >= h0 - 1e-9


class TestLrtaHeuristicUpdates:
    def test_learned_h_stays_admissible(self):
        for seed in range(8):
            g = generate_random_grid(RandomGridSpec(n=15, density=0.25, sg_distance=10, seed=seed))
            truth = dijkstra_from(g, g.goal)
            agent = RealTimeAgent(g, SolverParams(lookahead=20), AllocationProbe(), adaptive=False)
            while not agent.run_episode():
                pass
            for cell, d in truth.items():
                assert agent.h_value(cell) <= d + 1e-9, (seed, cell)

    def test_backup_is_local_fixpoint(self):
        # after an episode, every updated cell satisfies the one-step
        # dynamic-programming equation within the local space
        g = generate_random_grid(RandomGridSpec(n=12, density=0.2, sg_distance=8, seed=5))
        agent = RealTimeAgent(g, SolverParams(lookahead=15), AllocationProbe(), adaptive=False)
        agent.run_episode()
        for s in agent.last_closed:
            expected = min(c + agent.h_value(n) for n, c in g.neighbors8(s))
            assert agent.h_value(s) == pytest.approx(expected, abs=1e-9)


class TestTrajectories:
    def test_path_records_revisits(self):
        # a dead-end pocket forces the agent to back out; every executed
        # move must appear in the path
        blocked = {(1, 2), (2, 2), (3, 2), (3, 1), (3, 0)}
        g = Grid(6, 4, frozenset(Coord(*c) for c in blocked), (0, 0), (5, 0))
        out = solve(g, AlgorithmId.LRTA_STAR, SolverParams(lookahead=2))
        assert out.path[0] == g.start and out.path[-1] == g.goal
        for a, b in zip(out.path, out.path[1:]):
            assert max(abs(a[0] - b[0]), abs(a[1] - b[1])) == 1

    def test_expansion_budget_respected_per_episode(self):
        g = generate_random_grid(RandomGridSpec(n=15, density=0.2, sg_distance=10, seed=2))
        agent = RealTimeAgent(g, SolverParams(lookahead=7), AllocationProbe(), adaptive=True)
        while True:
            before = agent.expanded
            done = agent.run_episode()
            assert agent.expanded - before <= 7
            if done:
                break
