#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyprv/hyp_diagram.hpp"

using namespace hyprv;

TEST_CASE("central vertex formulas") {
    PermutationPair c3 = central_vertex(3);
    CHECK(c3.top_position(-2) == 1);
    CHECK(c3.top_position(0) == 2);
    CHECK(c3.top_position(2) == 3);
    CHECK(c3.bottom_position(2) == 1);
    CHECK(c3.bottom_position(0) == 2);
    CHECK(c3.bottom_position(-2) == 3);
    PermutationPair c4 = central_vertex(4);
    CHECK(c4.top_position(3) == 4);
    CHECK(c4.bottom_position(3) == 1);
    CHECK_THROWS_AS(central_vertex(1), BadDimensionError);
}

TEST_CASE("involution fixes the central vertex and conjugates the moves") {
    for (int d = 2; d <= 8; ++d) {
        PermutationPair c = central_vertex(d);
        CHECK(involution(c) == c);
        HypDiagram hyp(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            CHECK(involution(involution(pi)) == pi);
            CHECK(involution(rauzy_move(pi, ArrowKind::Bottom)) == rauzy_move(involution(pi), ArrowKind::Top));
        }
    }
}

TEST_CASE("involution swaps t and b in the word") {
    for (int d : {4, 6}) {
        HypDiagram hyp(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            HypWord w = hyp.word_of(pi);
            std::transform(w.begin(), w.end(), w.begin(), [](char c) { return c == 't' ? 'b' : 't'; });
            CHECK(hyp.word_of(involution(pi)) == w);
        }
    }
}

TEST_CASE("injections: I_{d+1} o j_b o I_d = j_t and word prefixes") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d), hyp1(d + 1);
        for (const PermutationPair& pi : hyp.vertices()) {
            CHECK(involution(inject(involution(pi), ArrowKind::Bottom)) == inject(pi, ArrowKind::Top));
            CHECK(hyp1.word_of(inject(pi, ArrowKind::Top)) == "t" + hyp.word_of(pi));
            CHECK(hyp1.word_of(inject(pi, ArrowKind::Bottom)) == "b" + hyp.word_of(pi));
        }
    }
}

TEST_CASE("inject rejects pairs outside the class") {
    // an irreducible pair of d=4 that is not in R_4: R_4 has 7 vertices,
    // while there are more irreducible pairs; find one by brute force
    HypDiagram hyp(4);
    std::vector<Letter> letters{3, 1, -1, -3};
    std::vector<Letter> top{-3, -1, 1, 3};
    int found = 0;
    std::vector<Letter> perm = letters;
    std::sort(perm.begin(), perm.end());
    do {
        try {
            PermutationPair cand(top, perm);
            if (!in_hyp_class(cand)) {
                CHECK_THROWS_AS(inject(cand, ArrowKind::Top), NotInClassError);
                CHECK_THROWS_AS(hyp.word_of(cand), NotInClassError);
                ++found;
            }
        } catch (const Error&) {
        }
    } while (std::next_permutation(perm.begin(), perm.end()) && found < 3);
    CHECK(found > 0);
}

TEST_CASE("word correspondence is a bijection") {
    for (int d = 2; d <= 10; ++d) {
        HypDiagram hyp(d);
        CHECK(hyp.size() == (size_t{1} << (d - 1)) - 1);
        std::set<HypWord> words(hyp.words().begin(), hyp.words().end());
        CHECK(words.size() == hyp.size());
        for (const HypWord& w : hyp.words()) {
            CHECK(static_cast<int>(w.size()) < d - 1);
            CHECK(hyp.word_of(hyp.vertex_of(w)) == w);
        }
        CHECK(hyp.word_of(central_vertex(d)).empty());
        CHECK_THROWS_AS(hyp.vertex_of(std::string(static_cast<size_t>(d) - 1, 't')), WordTooLongError);
    }
}

TEST_CASE("word_of agrees with the inject-recursion oracle") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            auto w = detail::word_recursive(pi);
            REQUIRE(w.has_value());
            CHECK(*w == hyp.word_of(pi));
        }
    }
}

TEST_CASE("word update rules for moves, including the wrap rule") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            HypWord w = hyp.word_of(pi);
            for (ArrowKind k : {ArrowKind::Top, ArrowKind::Bottom})
                CHECK(hyp.word_of(rauzy_move(pi, k)) == word_after_move(w, k, d));
        }
    }
}

TEST_CASE("winners from the word agree with winner_loser") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            auto [tw, bw] = hyp.winners_at(pi);
            CHECK(tw == winner_loser(pi, ArrowKind::Top).first);
            CHECK(bw == winner_loser(pi, ArrowKind::Bottom).first);
            CHECK(tw > bw);  // d-1-2w_b > 1-d+2w_t always
        }
    }
}

TEST_CASE("winner formula spot values") {
    HypDiagram hyp(4);
    // W = "b": top winner d-1-2w_b = 1
    CHECK(hyp.winners_at(hyp.vertex_of("b")).first == 1);
    // W = "bt": winners (1, -1)
    auto [tw, bw] = hyp.winners_at(hyp.vertex_of("bt"));
    CHECK(tw == 1);
    CHECK(bw == -1);
    // central vertex: (d-1, 1-d)
    auto [tc, bc] = hyp.winners_at(central_vertex(4));
    CHECK(tc == 3);
    CHECK(bc == -3);
}

TEST_CASE("simple paths: length, endpoints, simplicity") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            DiagramPath p = hyp.simple_path_to(pi);
            CHECK(p.start() == central_vertex(d));
            CHECK(p.end() == pi);
            CHECK(p.length() == hyp.word_of(pi).size());
            std::set<PermutationPair> seen{p.start()};
            for (const DiagramStep& s : p.steps()) CHECK(seen.insert(s.to()).second);
        }
    }
}

TEST_CASE("elementary loops") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d);
        auto loops = hyp.elementary_loops();
        for (const ElementaryLoop& loop : loops) {
            CHECK(loop.length + static_cast<int>(loop.base_word.size()) == d - 1);
            DiagramPath p = loop_path(loop);
            CHECK(p.is_loop());
            // all arrows share the kind and the winner
            for (const DiagramStep& s : p.steps()) {
                CHECK(s.arrow.kind == loop.kind);
                CHECK(s.arrow.winner == loop.winner);
            }
            // base has the minimal word length on the loop
            std::set<PermutationPair> vertices;
            PermutationPair cur = loop.base;
            for (int i = 0; i < loop.length; ++i) {
                vertices.insert(cur);
                if (i) CHECK(hyp.word_of(cur).size() > loop.base_word.size());
                cur = rauzy_move(cur, loop.kind);
            }
            CHECK(vertices.size() == static_cast<size_t>(loop.length));  // simple
        }
    }
    auto loops2 = elementary_loops(2);
    CHECK(loops2.size() == 2);
    CHECK(loops2[0].length == 1);
    CHECK(loops2[1].length == 1);
    CHECK(loops2[0].base == central_vertex(2));
}

TEST_CASE("pure cycle length formulas d - pi_b(alpha_t), d - pi_t(alpha_b)") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            Letter at = pi.top().back(), ab = pi.bottom().back();
            int top_len = 1;
            for (PermutationPair cur = rauzy_move(pi, ArrowKind::Top); cur != pi; cur = rauzy_move(cur, ArrowKind::Top))
                ++top_len;
            CHECK(top_len == d - pi.bottom_position(at));
            int bot_len = 1;
            for (PermutationPair cur = rauzy_move(pi, ArrowKind::Bottom); cur != pi;
                 cur = rauzy_move(cur, ArrowKind::Bottom))
                ++bot_len;
            CHECK(bot_len == d - pi.top_position(ab));
        }
    }
}

TEST_CASE("R_{d+1} is the disjoint union of the center and both injections") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d), hyp1(d + 1);
        std::set<PermutationPair> expected;
        expected.insert(central_vertex(d + 1));
        for (const PermutationPair& pi : hyp.vertices()) {
            CHECK(expected.insert(inject(pi, ArrowKind::Top)).second);
            CHECK(expected.insert(inject(pi, ArrowKind::Bottom)).second);
        }
        std::set<PermutationPair> actual(hyp1.vertices().begin(), hyp1.vertices().end());
        CHECK(expected == actual);
    }
}

TEST_CASE("recursion relations between moves and injections") {
    for (int d = 2; d <= 8; ++d) {
        HypDiagram hyp(d);
        PermutationPair center = central_vertex(d);
        for (const PermutationPair& pi : hyp.vertices()) {
            // R_t o j_b o R_t^{-1} = j_b and R_b o j_t o R_b^{-1} = j_t
            CHECK(rauzy_move(inject(rauzy_move_inverse(pi, ArrowKind::Top), ArrowKind::Bottom), ArrowKind::Top) ==
                  inject(pi, ArrowKind::Bottom));
            CHECK(rauzy_move(inject(rauzy_move_inverse(pi, ArrowKind::Bottom), ArrowKind::Top), ArrowKind::Bottom) ==
                  inject(pi, ArrowKind::Top));
            // same-kind relation away from the center, and the center rule
            for (ArrowKind k : {ArrowKind::Top, ArrowKind::Bottom}) {
                PermutationPair lhs = rauzy_move(inject(rauzy_move_inverse(pi, k), k), k);
                if (pi == center)
                    CHECK(lhs == central_vertex(d + 1));
                else
                    CHECK(lhs == inject(pi, k));
            }
        }
    }
}

TEST_CASE("BFS class equals the recursive construction") {
    for (int d = 2; d <= 8; ++d) {
        RauzyClass cls = rauzy_class(central_vertex(d));
        std::set<PermutationPair> bfs(cls.vertices.begin(), cls.vertices.end());
        auto rec = recursive_class_vertices(d);
        std::set<PermutationPair> recset(rec.begin(), rec.end());
        CHECK(rec.size() == recset.size());
        CHECK(bfs == recset);
        HypDiagram hyp(d);
        std::set<PermutationPair> wordset(hyp.vertices().begin(), hyp.vertices().end());
        CHECK(bfs == wordset);
    }
}
