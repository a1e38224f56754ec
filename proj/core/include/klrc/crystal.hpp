#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "klrc/cartan.hpp"

namespace klrc {

// Sentinel for eps/phi values of minus infinity (crystal axiom C5); chosen so
// that sums of a few sentinels cannot wrap around.
inline constexpr long long kNegInfinity = std::numeric_limits<long long>::min() / 4;

inline bool is_neg_infinity(long long value) { return value <= kNegInfinity / 2; }

// Generic crystal element: an elementary node b_i(n), a weight-shift node
// t_Lambda, or a binary tensor.  Immutable; shared subtrees are fine.
struct CrystalNode {
    enum class Kind { Elementary, WeightShift, Tensor };

    Kind kind;
    int vertex = -1;        // Elementary: the vertex i of b_i(n)
    long long position = 0; // Elementary: the integer n
    DominantWeight lambda;  // WeightShift
    std::shared_ptr<const CrystalNode> left;   // Tensor
    std::shared_ptr<const CrystalNode> right;  // Tensor
};

using CrystalNodePtr = std::shared_ptr<const CrystalNode>;

CrystalNodePtr make_elementary(int vertex, long long position);
CrystalNodePtr make_weight_shift(DominantWeight lambda);
CrystalNodePtr make_tensor(CrystalNodePtr left, CrystalNodePtr right);

bool crystal_equal(const CrystalNodePtr& a, const CrystalNodePtr& b);

long long crystal_eps(const CartanDatum& d, const CrystalNodePtr& node, int i);
long long crystal_phi(const CartanDatum& d, const CrystalNodePtr& node, int i);

// <h_i, wt(node)>
long long crystal_weight_pairing(const CartanDatum& d, const CrystalNodePtr& node, int i);

// Kashiwara raising/lowering operators; nullptr encodes the zero symbol.
CrystalNodePtr crystal_raise(const CartanDatum& d, const CrystalNodePtr& node, int i);
CrystalNodePtr crystal_lower(const CartanDatum& d, const CrystalNodePtr& node, int i);

// Tie-breaking rule for the lowering operator inside StringModel.  The
// corrupted variant exists only so the verification suite can demonstrate it
// catches a wrong tensor rule; it must never be used for real computations.
enum class LoweringRule { Standard, CorruptedTie };

// Truncated tensor power of elementary crystals B_{j_{L-1}} x ... x B_{j_0}
// presented through string coordinates: coords[k] = a_k >= 0 encodes the
// factor b_{j_k}(-a_k), with factor 0 rightmost.  All statistics follow the
// tensor-product rule evaluated by a single right-to-left sweep.
class StringModel {
  public:
    StringModel(const CartanDatum& d, std::vector<int> sequence,
                LoweringRule rule = LoweringRule::Standard);

    const CartanDatum& datum() const { return datum_; }
    const std::vector<int>& sequence() const { return sequence_; }
    size_t length() const { return sequence_.size(); }

    long long eps(const std::vector<int>& coords, int i) const;
    long long phi(const std::vector<int>& coords, int i) const;
    long long weight_pairing(const std::vector<int>& coords, int i) const;

    // nu with wt(coords) = -nu.
    RootVector content(const std::vector<int>& coords) const;

    // f~_i; routing into the guard region (the leftmost cycle of the
    // truncation) throws TruncationExceeded so callers can regrow.
    std::vector<int> apply_lower(const std::vector<int>& coords, int i) const;

    // e~_i; nullopt encodes the zero symbol.  Coordinates of the result may
    // be negative for inputs outside B(infinity); callers decide membership.
    std::optional<std::vector<int>> apply_raise(const std::vector<int>& coords, int i) const;

  private:
    // Factor-level statistics of b_{j_k}(-a_k) for vertex i.
    long long factor_eps(int k, int a, int i) const;
    long long factor_phi(int k, int a, int i) const;
    long long factor_weight(int k, int a, int i) const;

    CartanDatum datum_;
    std::vector<int> sequence_;
    LoweringRule rule_;
};

// The infinite sequence J0 cycles the vertices in label order; truncated to
// `length` factors (factor 0 rightmost carries vertex 0).
std::vector<int> reference_sequence(const CartanDatum& d, size_t length);

// J^i = (i, then J0): factor 0 carries vertex i.
std::vector<int> vertex_first_sequence(const CartanDatum& d, int i, size_t length);

}  // namespace klrc
