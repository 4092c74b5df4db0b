#include <doctest.h>

#include <algorithm>
#include <random>

#include "ceec/ceec.hpp"
#include "oracle.hpp"

using namespace ceec;

namespace {

NodeState make_node(int id, Region region, double residual, double x, double y) {
    NodeState node;
    node.id = id;
    node.region = region;
    node.tier = home_tier(region);
    node.x = x;
    node.y = y;
    node.initial_energy = std::max(residual, 2.0);
    node.residual_energy = residual;
    node.alive = residual > 0.0;
    return node;
}

} // namespace

TEST_CASE("region_average_energy averages alive nodes of the region") {
    std::vector<NodeState> nodes = {
        make_node(0, Region::LER, 0.5, 10, 80),
        make_node(1, Region::LER, 0.5, 20, 80),
        make_node(2, Region::LER, 0.5, 30, 80),
    };
    CHECK(region_average_energy(nodes, Region::LER) == doctest::Approx(0.5));

    nodes[0].residual_energy = 0.2;
    nodes[1].residual_energy = 0.4;
    nodes[2].residual_energy = 0.6;
    CHECK(region_average_energy(nodes, Region::LER) == doctest::Approx(0.4));

    std::vector<NodeState> singleton = {make_node(0, Region::MER, 0.37, 10, 50)};
    CHECK(region_average_energy(singleton, Region::MER) == doctest::Approx(0.37));

    // extinct region signals nullopt
    CHECK(!region_average_energy(singleton, Region::HER).has_value());
    std::vector<NodeState> dead = {make_node(0, Region::HER, 0.0, 10, 10)};
    CHECK(!region_average_energy(dead, Region::HER).has_value());
}

TEST_CASE("expected_cluster_heads keeps nodes at or above the average") {
    std::vector<NodeState> nodes = {
        make_node(0, Region::LER, 0.2, 10, 80),
        make_node(1, Region::LER, 0.4, 20, 80),
        make_node(2, Region::LER, 0.6, 30, 80),
    };
    CHECK(expected_cluster_heads(nodes, Region::LER, 0.4) == std::vector<int>{1, 2});

    for (auto& node : nodes) {
        node.residual_energy = 0.5;
    }
    CHECK(expected_cluster_heads(nodes, Region::LER, 0.5) == std::vector<int>{0, 1, 2});

    std::vector<NodeState> singleton = {make_node(0, Region::LER, 0.37, 10, 80)};
    CHECK(expected_cluster_heads(singleton, Region::LER, 0.37) == std::vector<int>{0});
}

TEST_CASE("finalize_cluster_heads cuts to ceil(p * alive) by energy rank") {
    NetworkConfig config;
    config.p = 0.1;

    // 30 alive nodes, 12 ECHs, expect the 3 highest-residual survivors.
    std::vector<NodeState> nodes;
    for (int id = 0; id < 30; ++id) {
        nodes.push_back(make_node(id, Region::LER, 0.1 + 0.01 * id, 50, 80));
    }
    std::vector<int> echs;
    for (int id = 18; id < 30; ++id) {
        echs.push_back(id);
    }
    const auto heads = finalize_cluster_heads(echs, nodes, config, Region::LER);
    CHECK(heads == std::vector<int>{27, 28, 29});

    // 5 alive: ceil(0.5) = 1, the single best ECH survives.
    std::vector<NodeState> five;
    for (int id = 0; id < 5; ++id) {
        five.push_back(make_node(id, Region::MER, 0.1 + 0.1 * id, 50, 50));
    }
    CHECK(finalize_cluster_heads({3, 4}, five, config, Region::MER) ==
          std::vector<int>{4});
    // fewer ECHs than the target: all kept
    CHECK(finalize_cluster_heads({4}, five, config, Region::MER) == std::vector<int>{4});
}

TEST_CASE("finalize tie-breaks by distance to BS then id") {
    NetworkConfig config;  // BS at (50, 100)
    config.p = 0.1;
    std::vector<NodeState> nodes;
    // ids 0..4 at equal residual; node 3 sits 10 m from the BS, node 1 40 m.
    nodes.push_back(make_node(0, Region::LER, 0.5, 50, 30));
    nodes.push_back(make_node(1, Region::LER, 0.5, 50, 60));
    nodes.push_back(make_node(2, Region::LER, 0.5, 50, 40));
    nodes.push_back(make_node(3, Region::LER, 0.5, 50, 90));
    nodes.push_back(make_node(4, Region::LER, 0.5, 50, 20));
    CHECK(finalize_cluster_heads({1, 3}, nodes, config, Region::LER) ==
          std::vector<int>{3});

    // equal residual and equal distance: lower id (10 alive, so k = 1)
    std::vector<NodeState> twins;
    twins.push_back(make_node(0, Region::LER, 0.5, 40, 90));
    twins.push_back(make_node(1, Region::LER, 0.5, 60, 90));  // mirrored, same d
    for (int id = 2; id < 10; ++id) {
        twins.push_back(make_node(id, Region::LER, 0.4, 50, 70));
    }
    CHECK(finalize_cluster_heads({0, 1}, twins, config, Region::LER) ==
          std::vector<int>{0});
}

TEST_CASE("associate_members joins the nearest head of the own region") {
    NetworkConfig config;
    std::vector<NodeState> nodes = {
        make_node(0, Region::LER, 0.5, 50, 95),   // head, 5 m from node 2
        make_node(1, Region::LER, 0.5, 50, 70),   // head, 20 m from node 2
        make_node(2, Region::LER, 0.5, 50, 90),   // member
        make_node(3, Region::MER, 0.5, 50, 50),   // lone MER head
        make_node(4, Region::MER, 0.5, 10, 40),   // MER member
        make_node(5, Region::MER, 0.5, 90, 60),   // MER member
    };
    const auto assignment = associate_members(nodes, {0, 1, 3}, config);
    CHECK(assignment.membership[2] == 0);
    CHECK(assignment.membership[4] == 3);
    CHECK(assignment.membership[5] == 3);
    CHECK(assignment.membership[0] == -1);

    // exactly equidistant heads: lower id wins
    std::vector<NodeState> tie = {
        make_node(0, Region::LER, 0.5, 50, 90),
        make_node(1, Region::LER, 0.5, 50, 90),   // irrelevant bystander
        make_node(2, Region::LER, 0.5, 50, 90),
        make_node(3, Region::LER, 0.5, 40, 80),   // head
        make_node(4, Region::LER, 0.5, 60, 80),   // head, mirrored
        make_node(5, Region::LER, 0.5, 40, 80),
        make_node(6, Region::LER, 0.5, 40, 80),
        make_node(7, Region::LER, 0.5, 60, 80),   // head, same spot as 4
    };
    const auto a = associate_members(tie, {3, 7}, NetworkConfig{});
    CHECK(a.membership[0] == 3);
    CHECK(a.membership[2] == 3);

    // region with alive members but no head signals the orphaned region
    std::vector<NodeState> orphan = {
        make_node(0, Region::LER, 0.5, 50, 90),
        make_node(1, Region::HER, 0.5, 50, 10),
    };
    CHECK_THROWS_AS(associate_members(orphan, {0}, NetworkConfig{}),
                    OrphanedRegionError);
    try {
        associate_members(orphan, {0}, NetworkConfig{});
    } catch (const OrphanedRegionError& e) {
        CHECK(e.region() == Region::HER);
    }
}

TEST_CASE("ceec_select on a fresh 99-node network picks 4 heads per region") {
    NetworkConfig config;
    config.n1 = config.n2 = config.n3 = 33;
    config.seed = 42;
    Rng rng(config.seed);
    const auto nodes = deploy(config, rng);

    const auto assignment = ceec_select(nodes, config, 1);
    CHECK(assignment.round == 1);
    CHECK(assignment.heads.size() == 12);

    int per_region[3] = {0, 0, 0};
    for (const int id : assignment.heads) {
        per_region[static_cast<int>(nodes[static_cast<std::size_t>(id)].region)]++;
    }
    CHECK(per_region[0] == 4);
    CHECK(per_region[1] == 4);
    CHECK(per_region[2] == 4);

    // every fresh node ties the region average, so all are ECHs
    for (const Region region : {Region::LER, Region::MER, Region::HER}) {
        const auto avg = region_average_energy(nodes, region);
        REQUIRE(avg.has_value());
        CHECK(expected_cluster_heads(nodes, region, *avg).size() == 33);
    }

    // members always share their head's region
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const int head = assignment.membership[id];
        if (head >= 0) {
            CHECK(nodes[id].region == nodes[static_cast<std::size_t>(head)].region);
        }
    }
}

TEST_CASE("ceec_select with a single alive node makes it head of itself") {
    NetworkConfig config;
    config.n1 = 1;
    config.n2 = 0;
    config.n3 = 0;
    Rng rng(3);
    const auto nodes = deploy(config, rng);
    const auto assignment = ceec_select(nodes, config, 5);
    CHECK(assignment.heads == std::vector<int>{0});
    CHECK(assignment.membership[0] == -1);

    auto dead = nodes;
    dead[0].alive = false;
    dead[0].residual_energy = 0.0;
    CHECK_THROWS_AS(ceec_select(dead, config, 6), NetworkDeadError);
}

TEST_CASE("every finally selected head has residual at or above its region average") {
    NetworkConfig config;
    config.n1 = config.n2 = config.n3 = 33;
    Rng rng(9);
    auto nodes = deploy(config, rng);
    // perturb residuals deterministically
    Rng perturb(99);
    for (auto& node : nodes) {
        node.residual_energy *= perturb.uniform(0.2, 1.0);
    }
    const auto assignment = ceec_select(nodes, config, 2);
    for (const int id : assignment.heads) {
        const auto& head = nodes[static_cast<std::size_t>(id)];
        const auto avg = region_average_energy(nodes, head.region);
        REQUIRE(avg.has_value());
        CHECK(head.residual_energy >= *avg);
    }
}

TEST_CASE("selection is invariant under node-list permutation") {
    NetworkConfig config;
    config.n1 = config.n2 = config.n3 = 20;
    Rng rng(17);
    auto nodes = deploy(config, rng);
    Rng perturb(18);
    for (auto& node : nodes) {
        node.residual_energy *= perturb.uniform(0.3, 1.0);
    }

    const auto reference = ceec_select(nodes, config, 3);

    auto shuffled = nodes;
    std::mt19937 shuffle_rng(4);
    std::shuffle(shuffled.begin(), shuffled.end(), shuffle_rng);
    const auto permuted = ceec_select(shuffled, config, 3);

    CHECK(reference.heads == permuted.heads);
    CHECK(reference.membership == permuted.membership);
}

TEST_CASE("ceec_select matches the exhaustive-ranking oracle on small networks") {
    NetworkConfig config;
    Rng rng(20240903);
    for (int trial = 0; trial < 40; ++trial) {
        config.p = rng.uniform(0.05, 0.35);
        auto nodes = testing::random_small_network(rng, config);
        bool any_alive = false;
        for (const auto& node : nodes) {
            any_alive = any_alive || node.alive;
        }
        if (!any_alive) {
            nodes[0].residual_energy = 0.5;
            nodes[0].alive = true;
        }
        const auto got = ceec_select(nodes, config, trial);
        const auto expected = testing::oracle_select(nodes, config);
        CHECK(got.heads == expected.heads);
        CHECK(got.membership == expected.membership);
    }
}
