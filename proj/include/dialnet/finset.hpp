#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dialnet {

// Upper bound on the size of any constructed carrier or exponential.
struct Limits {
    std::size_t cap = 4096;
};

// A finite set {0, ..., size-1}, optionally labelled with distinct strings.
class FinSet {
  public:
    FinSet() = default;
    explicit FinSet(std::size_t size) : size_(size) {}
    // Throws semantic_error on duplicate labels.
    explicit FinSet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool has_labels() const noexcept { return labels_ != nullptr; }

    // The label, or the decimal index for unlabelled sets.
    std::string label(std::size_t i) const;
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::span<const std::string> labels() const;

    // Labels take part in equality only when both sides carry them.
    friend bool operator==(const FinSet& a, const FinSet& b);

  private:
    struct Labels {
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::size_t size_ = 0;
    std::shared_ptr<const Labels> labels_;
};

FinSet singleton_set();

// Row-major pairing: (i, j) -> i * |B| + j. Labels "(a,b)".
FinSet product_set(const FinSet& a, const FinSet& b, const Limits& limits = {});
// Left block first: inl(i) = i, inr(j) = |A| + j. Labels "left.a" / "right.b".
FinSet coproduct_set(const FinSet& a, const FinSet& b, const Limits& limits = {});

inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t second_size) { return i * second_size + j; }
inline std::pair<std::size_t, std::size_t> split_pair(std::size_t k, std::size_t second_size) {
    return {k / second_size, k % second_size};
}

// A total function dom -> cod stored as a table of codomain indices.
class FnTable {
  public:
    // Throws shape_mismatch on wrong length or out-of-range entries.
    FnTable(FinSet dom, FinSet cod, std::vector<std::size_t> table);

    static FnTable identity(const FinSet& a);
    static FnTable constant(const FinSet& dom, const FinSet& cod, std::size_t value);

    const FinSet& dom() const noexcept { return dom_; }
    const FinSet& cod() const noexcept { return cod_; }
    std::span<const std::size_t> table() const noexcept { return table_; }
    std::size_t operator()(std::size_t i) const { return table_[i]; }
    std::size_t at(std::size_t i) const;

    // Pointwise equality over equal domain and codomain sizes.
    friend bool operator==(const FnTable& a, const FnTable& b);

  private:
    FinSet dom_;
    FinSet cod_;
    std::vector<std::size_t> table_;
};

// g after f; throws shape_mismatch unless f.cod and g.dom have equal sizes.
FnTable compose_fn(const FnTable& g, const FnTable& f);

FnTable project_first(const FinSet& a, const FinSet& b, const Limits& limits = {});
FnTable project_second(const FinSet& a, const FinSet& b, const Limits& limits = {});
FnTable inject_left(const FinSet& a, const FinSet& b, const Limits& limits = {});
FnTable inject_right(const FinSet& a, const FinSet& b, const Limits& limits = {});
FnTable swap_fn(const FinSet& a, const FinSet& b, const Limits& limits = {});
FnTable diagonal_fn(const FinSet& a, const Limits& limits = {});
// f x g : U x V -> U' x V'
FnTable product_fn(const FnTable& f, const FnTable& g, const Limits& limits = {});
// <f, g> : W -> U x V
FnTable pairing_fn(const FnTable& f, const FnTable& g, const Limits& limits = {});
// [f, g] : U + V -> W
FnTable copairing_fn(const FnTable& f, const FnTable& g, const Limits& limits = {});

// The set X^V of all functions V -> X, indexed lexicographically by table
// (entry 0 most significant). Index k's table has entry v equal to digit v of
// k written in base |X| with |V| digits.
class Exponential {
  public:
    // Throws cap_exceeded when |X|^|V| > limits.cap.
    Exponential(FinSet base, FinSet target, const Limits& limits = {});

    const FinSet& base() const noexcept { return base_; }
    const FinSet& target() const noexcept { return target_; }
    std::size_t size() const noexcept { return size_; }
    // Carrier view; labelled fn<k> when base and target are labelled.
    const FinSet& as_set() const noexcept { return set_; }

    std::size_t eval(std::size_t index, std::size_t v) const { return (index / weights_[v]) % target_.size(); }
    FnTable decode(std::size_t index) const;
    std::size_t encode(std::span<const std::size_t> table) const;
    std::size_t encode(const FnTable& f) const;

  private:
    FinSet base_;
    FinSet target_;
    std::size_t size_;
    std::vector<std::size_t> weights_;
    FinSet set_;
};

// Checked |X|^|V|; throws cap_exceeded above limits.cap.
std::size_t exponential_size(std::size_t base_size, std::size_t target_size, const Limits& limits = {});

// All functions V -> X in lexicographic order of their tables.
std::vector<FnTable> exponential(const FinSet& base, const FinSet& target, const Limits& limits = {});

// Evaluates function number fn_index of X^V at v.
std::size_t eval_pair(std::size_t fn_index, std::size_t v, const FinSet& base, const FinSet& target,
                      const Limits& limits = {});

// h : U x V -> Z  becomes  U -> Z^V, and back.
FnTable curry_fn(const FnTable& h, const FinSet& u, const FinSet& v, const Limits& limits = {});
FnTable uncurry_fn(const FnTable& g, const FinSet& v, const FinSet& z, const Limits& limits = {});

}  // namespace dialnet
