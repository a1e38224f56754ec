#include "klrc/crystal.hpp"

#include <algorithm>
#include <utility>

#include "klrc/errors.hpp"

namespace klrc {

namespace {

long long safe_add(long long value, long long delta) {
    return is_neg_infinity(value) ? kNegInfinity : value + delta;
}

long long safe_sub(long long value, long long delta) {
    return is_neg_infinity(value) ? kNegInfinity : value - delta;
}

}  // namespace

CrystalNodePtr make_elementary(int vertex, long long position) {
    auto node = std::make_shared<CrystalNode>();
    node->kind = CrystalNode::Kind::Elementary;
    node->vertex = vertex;
    node->position = position;
    return node;
}

CrystalNodePtr make_weight_shift(DominantWeight lambda) {
    auto node = std::make_shared<CrystalNode>();
    node->kind = CrystalNode::Kind::WeightShift;
    node->lambda = std::move(lambda);
    return node;
}

CrystalNodePtr make_tensor(CrystalNodePtr left, CrystalNodePtr right) {
    if (!left || !right) {
        throw Error(ErrorCode::UsageError, "tensor factors must be nonzero crystal nodes");
    }
    auto node = std::make_shared<CrystalNode>();
    node->kind = CrystalNode::Kind::Tensor;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

bool crystal_equal(const CrystalNodePtr& a, const CrystalNodePtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case CrystalNode::Kind::Elementary:
            return a->vertex == b->vertex && a->position == b->position;
        case CrystalNode::Kind::WeightShift:
            return a->lambda == b->lambda;
        case CrystalNode::Kind::Tensor:
            return crystal_equal(a->left, b->left) && crystal_equal(a->right, b->right);
    }
    return false;
}

long long crystal_eps(const CartanDatum& d, const CrystalNodePtr& node, int i) {
    if (!node) throw Error(ErrorCode::UsageError, "eps of the zero symbol is undefined");
    switch (node->kind) {
        case CrystalNode::Kind::Elementary:
            return node->vertex == i ? -node->position : kNegInfinity;
        case CrystalNode::Kind::WeightShift:
            return kNegInfinity;
        case CrystalNode::Kind::Tensor: {
            const long long left = crystal_eps(d, node->left, i);
            const long long right = safe_sub(crystal_eps(d, node->right, i),
                                             crystal_weight_pairing(d, node->left, i));
            return std::max(left, right);
        }
    }
    return kNegInfinity;
}

long long crystal_phi(const CartanDatum& d, const CrystalNodePtr& node, int i) {
    if (!node) throw Error(ErrorCode::UsageError, "phi of the zero symbol is undefined");
    switch (node->kind) {
        case CrystalNode::Kind::Elementary:
            return node->vertex == i ? node->position : kNegInfinity;
        case CrystalNode::Kind::WeightShift:
            return kNegInfinity;
        case CrystalNode::Kind::Tensor: {
            const long long left = safe_add(crystal_phi(d, node->left, i),
                                            crystal_weight_pairing(d, node->right, i));
            const long long right = crystal_phi(d, node->right, i);
            return std::max(left, right);
        }
    }
    return kNegInfinity;
}

long long crystal_weight_pairing(const CartanDatum& d, const CrystalNodePtr& node, int i) {
    if (!node) throw Error(ErrorCode::UsageError, "weight of the zero symbol is undefined");
    switch (node->kind) {
        case CrystalNode::Kind::Elementary:
            return node->position * d.cartan_pairing(i, node->vertex);
        case CrystalNode::Kind::WeightShift:
            return node->lambda[i];
        case CrystalNode::Kind::Tensor:
            return crystal_weight_pairing(d, node->left, i) +
                   crystal_weight_pairing(d, node->right, i);
    }
    return 0;
}

CrystalNodePtr crystal_raise(const CartanDatum& d, const CrystalNodePtr& node, int i) {
    if (!node) return nullptr;
    switch (node->kind) {
        case CrystalNode::Kind::Elementary:
            if (node->vertex != i) return nullptr;
            return make_elementary(node->vertex, node->position + 1);
        case CrystalNode::Kind::WeightShift:
            return nullptr;
        case CrystalNode::Kind::Tensor: {
            const long long left_phi = crystal_phi(d, node->left, i);
            const long long right_eps = crystal_eps(d, node->right, i);
            if (left_phi >= right_eps) {
                CrystalNodePtr raised = crystal_raise(d, node->left, i);
                return raised ? make_tensor(raised, node->right) : nullptr;
            }
            CrystalNodePtr raised = crystal_raise(d, node->right, i);
            return raised ? make_tensor(node->left, raised) : nullptr;
        }
    }
    return nullptr;
}

CrystalNodePtr crystal_lower(const CartanDatum& d, const CrystalNodePtr& node, int i) {
    if (!node) return nullptr;
    switch (node->kind) {
        case CrystalNode::Kind::Elementary:
            if (node->vertex != i) return nullptr;
            return make_elementary(node->vertex, node->position - 1);
        case CrystalNode::Kind::WeightShift:
            return nullptr;
        case CrystalNode::Kind::Tensor: {
            const long long left_phi = crystal_phi(d, node->left, i);
            const long long right_eps = crystal_eps(d, node->right, i);
            if (left_phi > right_eps) {
                CrystalNodePtr lowered = crystal_lower(d, node->left, i);
                return lowered ? make_tensor(lowered, node->right) : nullptr;
            }
            CrystalNodePtr lowered = crystal_lower(d, node->right, i);
            return lowered ? make_tensor(node->left, lowered) : nullptr;
        }
    }
    return nullptr;
}

StringModel::StringModel(const CartanDatum& d, std::vector<int> sequence, LoweringRule rule)
    : datum_(d), sequence_(std::move(sequence)), rule_(rule) {
    const int rank = datum_.rank();
    for (int vertex : sequence_) {
        if (vertex < 0 || vertex >= rank) {
            throw Error(ErrorCode::IndexOutOfRange, "string model factor vertex out of range");
        }
    }
    std::vector<char> seen(static_cast<size_t>(rank), 0);
    for (int vertex : sequence_) seen[static_cast<size_t>(vertex)] = 1;
    for (int i = 0; i < rank; ++i) {
        if (!seen[static_cast<size_t>(i)]) {
            throw Error(ErrorCode::UsageError,
                        "string model sequence must mention every vertex");
        }
    }
}

long long StringModel::factor_eps(int k, int a, int i) const {
    return sequence_[static_cast<size_t>(k)] == i ? a : kNegInfinity;
}

long long StringModel::factor_phi(int k, int a, int i) const {
    return sequence_[static_cast<size_t>(k)] == i ? -static_cast<long long>(a) : kNegInfinity;
}

long long StringModel::factor_weight(int k, int a, int i) const {
    return -static_cast<long long>(a) *
           datum_.cartan_pairing(i, sequence_[static_cast<size_t>(k)]);
}

long long StringModel::eps(const std::vector<int>& coords, int i) const {
    if (coords.size() != sequence_.size()) {
        throw Error(ErrorCode::UsageError, "coordinate vector length mismatch");
    }
    // Right-to-left sweep of the tensor rule; the truncation is padded with
    // b_j(0) factors conceptually continuing upward, which clamps the total
    // at zero.
    long long value = kNegInfinity;
    for (size_t k = 0; k < coords.size(); ++k) {
        const int a = coords[k];
        value = safe_sub(value, factor_weight(static_cast<int>(k), a, i));
        value = std::max(value, factor_eps(static_cast<int>(k), a, i));
    }
    return std::max<long long>(0, value);
}

long long StringModel::phi(const std::vector<int>& coords, int i) const {
    // phi = eps + <h_i, wt> for the semi-infinite model.
    return eps(coords, i) + weight_pairing(coords, i);
}

long long StringModel::weight_pairing(const std::vector<int>& coords, int i) const {
    if (coords.size() != sequence_.size()) {
        throw Error(ErrorCode::UsageError, "coordinate vector length mismatch");
    }
    long long total = 0;
    for (size_t k = 0; k < coords.size(); ++k) {
        total += factor_weight(static_cast<int>(k), coords[k], i);
    }
    return total;
}

RootVector StringModel::content(const std::vector<int>& coords) const {
    if (coords.size() != sequence_.size()) {
        throw Error(ErrorCode::UsageError, "coordinate vector length mismatch");
    }
    std::vector<int> nu(static_cast<size_t>(datum_.rank()), 0);
    for (size_t k = 0; k < coords.size(); ++k) {
        nu[static_cast<size_t>(sequence_[k])] += coords[k];
    }
    return RootVector(std::move(nu));
}

std::vector<int> StringModel::apply_lower(const std::vector<int>& coords, int i) const {
    if (coords.size() != sequence_.size()) {
        throw Error(ErrorCode::UsageError, "coordinate vector length mismatch");
    }
    const long long rank = datum_.rank();
    const long long length = static_cast<long long>(sequence_.size());
    // Keep two full clean cycles above the occupied region so the truncated
    // sweep agrees with the semi-infinite model.  The corrupted rule skips
    // the guard: it exists only to exercise negative tests and must still
    // terminate deterministically.
    if (rule_ == LoweringRule::Standard) {
        for (long long k = length - 1; k >= std::max<long long>(0, length - 2 * rank); --k) {
            if (coords[static_cast<size_t>(k)] != 0) {
                throw Error(ErrorCode::TruncationExceeded,
                            "string coordinates reached the truncation guard region");
            }
        }
    }
    // suffix_eps[k] = eps_i of factors k-1 .. 0 (the strict suffix below k).
    std::vector<long long> suffix_eps(coords.size() + 1, kNegInfinity);
    for (size_t k = 0; k < coords.size(); ++k) {
        long long value = safe_sub(suffix_eps[k], factor_weight(static_cast<int>(k), coords[k], i));
        suffix_eps[k + 1] = std::max(value, factor_eps(static_cast<int>(k), coords[k], i));
    }
    for (long long k = length - 1; k >= 0; --k) {
        const long long phi_here = factor_phi(static_cast<int>(k), coords[static_cast<size_t>(k)], i);
        const long long eps_below = suffix_eps[static_cast<size_t>(k)];
        const bool fires = (rule_ == LoweringRule::CorruptedTie) ? (phi_here >= eps_below)
                                                                 : (phi_here > eps_below);
        if (fires) {
            if (rule_ == LoweringRule::Standard && k >= length - rank) {
                throw Error(ErrorCode::TruncationExceeded,
                            "lowering operator touched the final truncation cycle");
            }
            std::vector<int> result = coords;
            result[static_cast<size_t>(k)] += 1;
            return result;
        }
    }
    throw Error(ErrorCode::UsageError, "lowering operator found no insertion point");
}

std::optional<std::vector<int>> StringModel::apply_raise(const std::vector<int>& coords,
                                                         int i) const {
    if (coords.size() != sequence_.size()) {
        throw Error(ErrorCode::UsageError, "coordinate vector length mismatch");
    }
    if (eps(coords, i) <= 0) return std::nullopt;
    std::vector<long long> suffix_eps(coords.size() + 1, kNegInfinity);
    for (size_t k = 0; k < coords.size(); ++k) {
        long long value = safe_sub(suffix_eps[k], factor_weight(static_cast<int>(k), coords[k], i));
        suffix_eps[k + 1] = std::max(value, factor_eps(static_cast<int>(k), coords[k], i));
    }
    for (long long k = static_cast<long long>(coords.size()) - 1; k >= 0; --k) {
        const long long phi_here = factor_phi(static_cast<int>(k), coords[static_cast<size_t>(k)], i);
        if (phi_here >= suffix_eps[static_cast<size_t>(k)]) {
            std::vector<int> result = coords;
            result[static_cast<size_t>(k)] -= 1;
            return result;
        }
    }
    throw Error(ErrorCode::UsageError, "raising operator found no removal point");
}

std::vector<int> reference_sequence(const CartanDatum& d, size_t length) {
    std::vector<int> sequence(length);
    const int rank = d.rank();
    for (size_t k = 0; k < length; ++k) sequence[k] = static_cast<int>(k) % rank;
    return sequence;
}

std::vector<int> vertex_first_sequence(const CartanDatum& d, int i, size_t length) {
    if (i < 0 || i >= d.rank()) {
        throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
    }
    std::vector<int> sequence(length);
    sequence[0] = i;
    const int rank = d.rank();
    for (size_t k = 1; k < length; ++k) sequence[k] = static_cast<int>(k - 1) % rank;
    return sequence;
}

}  // namespace klrc
