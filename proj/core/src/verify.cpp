#include "klrc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "klrc/errors.hpp"

namespace klrc {

namespace {

constexpr size_t kWitnessLimit = 25;

class Checker {
  public:
    explicit Checker(VerificationReport& report) : report_(report) {}

    template <typename MessageFn>
    void check(bool condition, MessageFn&& message) {
        report_.checks += 1;
        if (condition) return;
        report_.violations += 1;
        report_.passed = false;
        if (report_.witnesses.size() < kWitnessLimit) {
            report_.witnesses.push_back(message());
        }
    }

  private:
    VerificationReport& report_;
};

std::string describe(const CrystalGraph& g, size_t node) {
    std::ostringstream out;
    out << "node " << node << " nu=(";
    const RootVector& nu = g.nodes[node].content;
    for (int j = 0; j < nu.rank(); ++j) {
        if (j > 0) out << ",";
        out << nu[j];
    }
    out << ")";
    return out.str();
}

CrystalNodePtr tensorized(const CrystalGraph& g, size_t node) {
    const std::vector<int>& trimmed = g.nodes[node].coords;
    const size_t rank = static_cast<size_t>(g.datum.rank());
    const size_t factors = trimmed.size() + rank;  // one clean padding cycle
    CrystalNodePtr acc;
    for (size_t k = 0; k < factors; ++k) {
        const int vertex = static_cast<int>(k % rank);
        const int a = k < trimmed.size() ? trimmed[k] : 0;
        CrystalNodePtr factor = make_elementary(vertex, -static_cast<long long>(a));
        acc = acc ? make_tensor(factor, acc) : factor;
    }
    if (g.lambda) {
        acc = make_tensor(acc, make_weight_shift(*g.lambda));
    }
    return acc;
}

void run_suite_c(const CrystalGraph& g, Checker& checker) {
    const int rank = g.datum.rank();
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        CrystalNodePtr tensor = tensorized(g, v);
        for (int i = 0; i < rank; ++i) {
            const NodeStats stats = binf_stats(g, v, i);
            const long long generic_eps = crystal_eps(g.datum, tensor, i);
            const long long generic_phi = crystal_phi(g.datum, tensor, i);
            const long long generic_wt = crystal_weight_pairing(g.datum, tensor, i);
            const long long graph_phi = g.lambda ? *stats.phi_lambda : stats.phi;
            // C1 plus agreement between the generic tensor recursion and the
            // string-coordinate sweep.
            checker.check(
                generic_phi == generic_eps + generic_wt && generic_eps == stats.eps &&
                    generic_phi == graph_phi,
                [&] {
                    std::ostringstream out;
                    out << "C1 " << describe(g, v) << " i=" << g.datum.label(i)
                        << " eps=" << generic_eps << "/" << stats.eps
                        << " phi=" << generic_phi << "/" << graph_phi << " wt=" << generic_wt;
                    return out.str();
                });
            // C5: a minus-infinity phi forbids both operators.
            checker.check(!is_neg_infinity(generic_phi) ||
                              (g.lower_target[v][static_cast<size_t>(i)] == CrystalGraph::kAbsent &&
                               g.raise_target[v][static_cast<size_t>(i)] == CrystalGraph::kAbsent),
                          [&] { return "C5 " + describe(g, v); });
        }
    }
    for (const CrystalEdge& edge : g.edges) {
        const int i = edge.label;
        const NodeStats from = binf_stats(g, edge.from, i);
        const NodeStats to = binf_stats(g, edge.to, i);
        // C3: the lowering operator steps eps, phi, and the weight.
        checker.check(
            to.eps == from.eps + 1 && to.phi == from.phi - 1 &&
                g.nodes[edge.to].content ==
                    g.nodes[edge.from].content.plus_alpha(i),
            [&] {
                std::ostringstream out;
                out << "C3 " << describe(g, edge.from) << " -" << g.datum.label(i) << "-> "
                    << describe(g, edge.to);
                return out.str();
            });
        // C4 (one direction): raising undoes the recorded lowering edge.
        checker.check(g.raise_target[edge.to][static_cast<size_t>(i)] ==
                          static_cast<long long>(edge.from),
                      [&] {
                          std::ostringstream out;
                          out << "C4 raise(lower) " << describe(g, edge.from) << " -"
                              << g.datum.label(i) << "-> " << describe(g, edge.to);
                          return out.str();
                      });
    }
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        for (int i = 0; i < rank; ++i) {
            const long long u = g.raise_target[v][static_cast<size_t>(i)];
            if (u == CrystalGraph::kAbsent) continue;
            const NodeStats from = binf_stats(g, v, i);
            const NodeStats to = binf_stats(g, static_cast<size_t>(u), i);
            // C2: the raising operator steps eps and phi the other way.
            checker.check(to.eps == from.eps - 1 && to.phi == from.phi + 1,
                          [&] {
                              std::ostringstream out;
                              out << "C2 " << describe(g, v) << " raise " << g.datum.label(i);
                              return out.str();
                          });
            // C4 (other direction): lowering undoes the raising.
            checker.check(g.lower_target[static_cast<size_t>(u)][static_cast<size_t>(i)] ==
                              static_cast<long long>(v),
                          [&] {
                              std::ostringstream out;
                              out << "C4 lower(raise) " << describe(g, v) << " raise "
                                  << g.datum.label(i);
                              return out.str();
                          });
        }
    }
}

void run_suite_ks(const CrystalGraph& g, Checker& checker) {
    const int rank = g.datum.rank();
    size_t zero_weight_nodes = 0;
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        const CrystalNodeData& node = g.nodes[v];
        bool nonnegative = true;
        for (int c : node.content.coefficients()) nonnegative = nonnegative && c >= 0;
        // B1: weights lie in the negative root cone.
        checker.check(nonnegative, [&] { return "B1 " + describe(g, v); });
        if (node.content.height() == 0) zero_weight_nodes += 1;
        bool some_positive = false;
        for (int i = 0; i < rank; ++i) {
            const NodeStats stats = binf_stats(g, v, i);
            // B4: eps is a genuine integer (never minus infinity).
            checker.check(!is_neg_infinity(stats.eps) && stats.eps >= 0,
                          [&] { return "B4 " + describe(g, v); });
            // B5: the vertex-first replay stays inside the honest crystal.
            const std::vector<int>& replay = node.vertex_coords[static_cast<size_t>(i)];
            bool replay_ok = node.eps_vee[static_cast<size_t>(i)] >= 0;
            for (int a : replay) replay_ok = replay_ok && a >= 0;
            checker.check(replay_ok, [&] {
                return "B5 " + describe(g, v) + " i=" + g.datum.label(i);
            });
            if (node.eps_vee[static_cast<size_t>(i)] > 0) some_positive = true;
            // B6: peeling the vertex factor lands back in the crystal.
            std::vector<int> peeled(replay.begin() + (replay.empty() ? 0 : 1), replay.end());
            peeled = trim_coords(std::move(peeled));
            if (!g.lambda) {
                checker.check(g.find(peeled).has_value(), [&] {
                    return "B6 " + describe(g, v) + " i=" + g.datum.label(i);
                });
            }
        }
        // B3: the highest node has eps = eps_vee = 0 everywhere.
        if (v == 0) {
            bool all_zero = true;
            for (int i = 0; i < rank; ++i) {
                all_zero = all_zero && binf_stats(g, v, i).eps == 0 &&
                           node.eps_vee[static_cast<size_t>(i)] == 0;
            }
            checker.check(all_zero, [&] { return std::string("B3 highest node"); });
        } else {
            // B7: every other node is seen by some vertex-first embedding.
            checker.check(some_positive, [&] { return "B7 " + describe(g, v); });
        }
    }
    // B2: the zero weight space is exactly the highest node.
    checker.check(zero_weight_nodes == 1 && g.nodes[0].content.height() == 0,
                  [&] { return std::string("B2 zero-weight node count"); });
}

void run_suite_psi(const CrystalGraph& g, Checker& checker) {
    const int rank = g.datum.rank();
    std::vector<StringModel> vertex_models;
    vertex_models.reserve(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        vertex_models.emplace_back(g.datum,
                                   vertex_first_sequence(g.datum, i, g.truncation_length + 1));
    }
    for (const CrystalEdge& edge : g.edges) {
        for (int i = 0; i < rank; ++i) {
            const std::vector<int>& source =
                g.nodes[edge.from].vertex_coords[static_cast<size_t>(i)];
            const std::vector<int>& target =
                g.nodes[edge.to].vertex_coords[static_cast<size_t>(i)];
            std::vector<int> moved = trim_coords(vertex_models[static_cast<size_t>(i)].apply_lower(
                expand_coords(source, g.truncation_length + 1), edge.label));
            checker.check(moved == target, [&] {
                std::ostringstream out;
                out << "PSI " << describe(g, edge.from) << " -" << g.datum.label(edge.label)
                    << "-> " << describe(g, edge.to) << " via " << g.datum.label(i);
                return out.str();
            });
        }
    }
}

void run_suite_jump(const CrystalGraph& g, Checker& checker) {
    const int rank = g.datum.rank();
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        for (int i = 0; i < rank; ++i) {
            checker.check(binf_stats(g, v, i).jump >= 0,
                          [&] { return "JUMP>=0 " + describe(g, v) + " i=" + g.datum.label(i); });
        }
    }
    for (const CrystalEdge& edge : g.edges) {
        const long long before = binf_stats(g, edge.from, edge.label).jump;
        const long long after = binf_stats(g, edge.to, edge.label).jump;
        checker.check(after == std::max<long long>(0, before - 1), [&] {
            std::ostringstream out;
            out << "JUMP step " << describe(g, edge.from) << " -" << g.datum.label(edge.label)
                << "-> " << describe(g, edge.to) << " " << before << "=>" << after;
            return out.str();
        });
    }
}

void run_suite_epsjump(const CrystalGraph& g, Checker& checker) {
    const int rank = g.datum.rank();
    for (const CrystalEdge& edge : g.edges) {
        for (int i = 0; i < rank; ++i) {
            const long long before = g.nodes[edge.from].eps_vee[static_cast<size_t>(i)];
            const long long after = g.nodes[edge.to].eps_vee[static_cast<size_t>(i)];
            if (i == edge.label) {
                checker.check(after == before || after == before + 1, [&] {
                    std::ostringstream out;
                    out << "EPSVEE step " << describe(g, edge.from) << " -"
                        << g.datum.label(edge.label) << "-> " << describe(g, edge.to);
                    return out.str();
                });
            } else {
                checker.check(after == before, [&] {
                    std::ostringstream out;
                    out << "EPSVEE const " << describe(g, edge.from) << " -"
                        << g.datum.label(edge.label) << "-> " << describe(g, edge.to) << " via "
                        << g.datum.label(i);
                    return out.str();
                });
                if (g.lambda) {
                    const long long eps_before = binf_stats(g, edge.from, i).eps;
                    const long long eps_after = binf_stats(g, edge.to, i).eps;
                    const long long drop = g.datum.a(i, edge.label);
                    checker.check(
                        eps_after <= eps_before && eps_after >= eps_before - drop, [&] {
                            std::ostringstream out;
                            out << "EPS window " << describe(g, edge.from) << " -"
                                << g.datum.label(edge.label) << "-> " << describe(g, edge.to)
                                << " via " << g.datum.label(i) << " " << eps_before << "=>"
                                << eps_after;
                            return out.str();
                        });
                }
            }
        }
    }
}

}  // namespace

std::string to_string(VerificationSuite suite) {
    switch (suite) {
        case VerificationSuite::C: return "C";
        case VerificationSuite::KS: return "KS";
        case VerificationSuite::PSI: return "PSI";
        case VerificationSuite::JUMP: return "JUMP";
        case VerificationSuite::EPSJUMP: return "EPSJUMP";
    }
    return "?";
}

VerificationSuite suite_from_string(const std::string& name) {
    if (name == "C") return VerificationSuite::C;
    if (name == "KS") return VerificationSuite::KS;
    if (name == "PSI") return VerificationSuite::PSI;
    if (name == "JUMP") return VerificationSuite::JUMP;
    if (name == "EPSJUMP") return VerificationSuite::EPSJUMP;
    throw Error(ErrorCode::UsageError, "unknown verification suite: " + name);
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << "suite=" << to_string(suite) << " checks=" << checks << " violations=" << violations
        << " " << (passed ? "PASS" : "FAIL");
    return out.str();
}

VerificationReport verify_axioms(const CrystalGraph& g, VerificationSuite suite) {
    VerificationReport report;
    report.suite = suite;
    Checker checker(report);
    switch (suite) {
        case VerificationSuite::C: run_suite_c(g, checker); break;
        case VerificationSuite::KS: run_suite_ks(g, checker); break;
        case VerificationSuite::PSI: run_suite_psi(g, checker); break;
        case VerificationSuite::JUMP: run_suite_jump(g, checker); break;
        case VerificationSuite::EPSJUMP: run_suite_epsjump(g, checker); break;
    }
    return report;
}

}  // namespace klrc
