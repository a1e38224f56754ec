#include "klrc/cyclotomic.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "klrc/errors.hpp"
#include "klrc/rowspace.hpp"
#include "klrc/word.hpp"

namespace klrc {

CyclotomicCaps CyclotomicCaps::from_environment() {
    CyclotomicCaps caps;
    if (const char* env = std::getenv("KLR_CRYSTAL_CAP_MB")) {
        char* end = nullptr;
        const long long value = std::strtoll(env, &end, 10);
        if (end != env && value >= 0) {
            caps.memory_cap_mb = value;
        }
    }
    return caps;
}

namespace {

void enumerate_dot_vectors(const CartanDatum& d, const Word& src, size_t r, long long remaining,
                           std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (r == src.size()) {
        if (remaining == 0) {
            out.push_back(current);
        }
        return;
    }
    const long long b = d.bilinear(src[r], src[r]);
    for (long long k = 0; k * b <= remaining; ++k) {
        current[r] = static_cast<int>(k);
        enumerate_dot_vectors(d, src, r + 1, remaining - k * b, current, out);
    }
    current[r] = 0;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<Permutation> result;
    Permutation w = identity_permutation(m);
    do {
        result.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return result;
}

// Per-degree column space of all basis monomials together with the echelon
// span of the ideal elements found so far.
struct DegreeSpace {
    std::vector<PbwMonomial> columns;
    std::map<PbwMonomial, size_t> index;
    RowSpace rows{0};
};

class IdealClosure {
  public:
    IdealClosure(const KlrAlgebra& algebra, std::vector<Word> words,
                 std::vector<Permutation> perms, long long window_min, long long window_max,
                 long long memory_cap_mb)
        : algebra_(algebra),
          words_(std::move(words)),
          perms_(std::move(perms)),
          window_min_(window_min),
          window_max_(window_max),
          memory_cap_entries_(memory_cap_mb * 1024 * 1024 / 48) {}

    DegreeSpace& space_for(long long degree) {
        auto it = spaces_.find(degree);
        if (it != spaces_.end()) {
            return it->second;
        }
        DegreeSpace space;
        for (const Word& src : words_) {
            for (const Permutation& w : perms_) {
                const long long base = psi_degree(algebra_.datum(), w, src);
                if (base > degree) {
                    continue;
                }
                std::vector<std::vector<int>> dots;
                std::vector<int> current(src.size(), 0);
                enumerate_dot_vectors(algebra_.datum(), src, 0, degree - base, current, dots);
                if (dots.empty()) {
                    continue;
                }
                const std::vector<int> canonical = canonical_reduced_word(w);
                for (auto& a : dots) {
                    space.columns.push_back(PbwMonomial{src, canonical, std::move(a)});
                }
            }
        }
        std::sort(space.columns.begin(), space.columns.end());
        for (size_t c = 0; c < space.columns.size(); ++c) {
            space.index.emplace(space.columns[c], c);
        }
        space.rows = RowSpace(space.columns.size());
        return spaces_.emplace(degree, std::move(space)).first->second;
    }

    // Inserts a homogeneous element into its degree space; enqueues it when
    // the rank grows.  Elements outside the degree window are dropped.
    void offer(const KlrElement& element, std::vector<KlrElement>& queue) {
        if (element.is_zero()) {
            return;
        }
        const auto degree = algebra_.homogeneous_degree(element);
        if (!degree) {
            throw Error(ErrorCode::UsageError, "ideal closure fed a non-homogeneous element");
        }
        if (*degree < window_min_ || *degree > window_max_) {
            return;
        }
        DegreeSpace& space = space_for(*degree);
        std::vector<Rational> row(space.columns.size(), Rational(0));
        for (const auto& [monomial, coeff] : element.terms()) {
            row[space.index.at(monomial)] = coeff;
        }
        if (space.rows.insert(std::move(row))) {
            used_entries_ += space.columns.size();
            if (used_entries_ > memory_cap_entries_) {
                throw Error(ErrorCode::CapExceeded,
                            "ideal closure exceeded the memory cap of " +
                                std::to_string(memory_cap_entries_ * 48 / (1024 * 1024)) + " MB");
            }
            queue.push_back(element);
        }
    }

    bool contains_monomial(const PbwMonomial& monomial, long long degree) {
        DegreeSpace& space = space_for(degree);
        auto it = space.index.find(monomial);
        if (it == space.index.end()) {
            return false;
        }
        std::vector<Rational> row(space.columns.size(), Rational(0));
        row[it->second] = 1;
        return space.rows.contains(std::move(row));
    }

  private:
    const KlrAlgebra& algebra_;
    std::vector<Word> words_;
    std::vector<Permutation> perms_;
    long long window_min_;
    long long window_max_;
    long long memory_cap_entries_;
    long long used_entries_ = 0;
    std::map<long long, DegreeSpace> spaces_;
};

}  // namespace

CyclotomicPresentation cyclotomic_build(const KlrAlgebra& algebra, const RootVector& nu,
                                        const DominantWeight& lambda,
                                        const CyclotomicCaps& caps) {
    const CartanDatum& d = algebra.datum();
    if (nu.rank() != d.rank() || lambda.rank() != d.rank()) {
        throw Error(ErrorCode::UsageError, "nu and Lambda must match the datum's rank");
    }
    CyclotomicPresentation presentation;
    presentation.nu = nu;
    presentation.lambda = lambda;

    const int m = nu.height();
    if (m == 0) {
        presentation.nilpotency_witness = 0;
        presentation.total_dimension = 1;
        presentation.graded_dimension[0] = 1;
        presentation.basis_by_degree[0] = {PbwMonomial{{}, {}, {}}};
        presentation.ideal_rank_by_degree[0] = 0;
        return presentation;
    }

    const std::vector<Word> words = words_of_content(nu);
    const std::vector<Permutation> perms = all_permutations(m);

    long long min_psi = 0;
    long long max_psi = 0;
    for (const Word& src : words) {
        for (const Permutation& w : perms) {
            const long long degree = psi_degree(d, w, src);
            min_psi = std::min(min_psi, degree);
            max_psi = std::max(max_psi, degree);
        }
    }
    long long max_diag = 0;
    long long max_abs_off = 0;
    for (int i = 0; i < d.rank(); ++i) {
        max_diag = std::max(max_diag, d.bilinear(i, i));
        for (int j = 0; j < d.rank(); ++j) {
            if (i != j) {
                max_abs_off = std::max(max_abs_off, -d.bilinear(i, j));
            }
        }
    }
    long long max_sum_diag = 0;
    for (const Word& src : words) {
        long long sum = 0;
        for (int letter : src) {
            sum += d.bilinear(letter, letter);
        }
        max_sum_diag = std::max(max_sum_diag, sum);
    }
    long long max_seed_degree = 0;
    for (const Word& src : words) {
        max_seed_degree = std::max(
            max_seed_degree, static_cast<long long>(lambda[src[0]]) * d.bilinear(src[0], src[0]));
    }
    // Negative-degree crossings allow ideal elements to pass above their final
    // degree before coming back down; one crossing chain on each side wanders
    // by at most this much.
    const long long slack = static_cast<long long>(m) * (m - 1) * max_abs_off;

    for (int witness_cap = 1; witness_cap <= caps.max_dot_exponent; ++witness_cap) {
        const long long quotient_top =
            max_psi + static_cast<long long>(witness_cap - 1) * max_sum_diag;
        const long long witness_top = static_cast<long long>(witness_cap) * max_diag;
        const long long window_max =
            std::max({quotient_top, witness_top, max_seed_degree}) + slack;

        IdealClosure closure(algebra, words, perms, min_psi, window_max, caps.memory_cap_mb);
        std::vector<KlrElement> queue;
        for (const Word& src : words) {
            KlrElement seed = algebra.idempotent(src);
            for (int k = 0; k < lambda[src[0]]; ++k) {
                seed = algebra.right_dot(seed, 0);
            }
            closure.offer(seed, queue);
        }
        while (!queue.empty()) {
            const KlrElement element = std::move(queue.back());
            queue.pop_back();
            for (int strand = 0; strand < m; ++strand) {
                closure.offer(algebra.left_dot(strand, element), queue);
                closure.offer(algebra.right_dot(element, strand), queue);
            }
            for (int t = 0; t + 1 < m; ++t) {
                closure.offer(algebra.left_crossing(t, element), queue);
                closure.offer(algebra.right_crossing(element, t), queue);
            }
        }

        auto dots_in_ideal = [&](int strand, int k) {
            for (const Word& src : words) {
                PbwMonomial monomial{src, {}, std::vector<int>(src.size(), 0)};
                monomial.dot_powers[strand] = k;
                const long long degree =
                    static_cast<long long>(k) * d.bilinear(src[strand], src[strand]);
                if (!closure.contains_monomial(monomial, degree)) {
                    return false;
                }
            }
            return true;
        };

        int witness = -1;
        for (int k = 0; k <= witness_cap; ++k) {
            bool all_strands = true;
            for (int strand = 0; strand < m && all_strands; ++strand) {
                all_strands = dots_in_ideal(strand, k);
            }
            if (all_strands) {
                witness = k;
                break;
            }
        }
        if (witness < 0) {
            continue;
        }

        presentation.nilpotency_witness = witness;
        const long long top =
            (witness == 0) ? min_psi - 1
                           : max_psi + static_cast<long long>(witness - 1) * max_sum_diag;
        for (long long degree = min_psi; degree <= top; ++degree) {
            DegreeSpace& space = closure.space_for(degree);
            if (space.columns.empty()) {
                continue;
            }
            const size_t rank = space.rows.rank();
            presentation.ideal_rank_by_degree[degree] = rank;
            const long long dim = static_cast<long long>(space.columns.size()) -
                                  static_cast<long long>(rank);
            if (dim > 0) {
                presentation.graded_dimension[degree] = dim;
                presentation.total_dimension += dim;
                std::vector<PbwMonomial>& basis = presentation.basis_by_degree[degree];
                for (size_t c = 0; c < space.columns.size(); ++c) {
                    if (space.rows.pivot_rows().find(c) == space.rows.pivot_rows().end()) {
                        basis.push_back(space.columns[c]);
                    }
                }
            }
        }
        for (int strand = 0; strand < m; ++strand) {
            int least = witness;
            for (int k = 0; k <= witness; ++k) {
                if (dots_in_ideal(strand, k)) {
                    least = k;
                    break;
                }
            }
            presentation.strand_nilpotency.push_back(least);
        }
        return presentation;
    }
    throw Error(ErrorCode::CapExceeded,
                "no dot-nilpotency witness found with exponents up to " +
                    std::to_string(caps.max_dot_exponent));
}

int dot_nilpotency(const CyclotomicPresentation& presentation, int strand) {
    if (strand < 0 || strand >= static_cast<int>(presentation.strand_nilpotency.size())) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "strand " + std::to_string(strand) + " out of range");
    }
    return presentation.strand_nilpotency[strand];
}

}  // namespace klrc
