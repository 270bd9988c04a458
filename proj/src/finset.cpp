#include "dialnet/finset.hpp"

#include "dialnet/error.hpp"

namespace dialnet {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, const Limits& limits, const char* what) {
    std::size_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw cap_exceeded(what, SIZE_MAX, limits.cap);
    if (r > limits.cap) throw cap_exceeded(what, r, limits.cap);
    return r;
}

void require_same_size(const FinSet& a, const FinSet& b, const char* what) {
    if (a.size() != b.size())
        throw shape_mismatch(std::string(what) + ": sizes " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()) + " differ");
}

}  // namespace

// ---- FinSet ----------------------------------------------------------------

FinSet::FinSet(std::vector<std::string> labels) : size_(labels.size()) {
    auto data = std::make_shared<Labels>();
    data->index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!data->index.emplace(labels[i], i).second) throw semantic_error("duplicate label '" + labels[i] + "'");
    }
    data->names = std::move(labels);
    labels_ = std::move(data);
}

std::string FinSet::label(std::size_t i) const {
    if (i >= size_) throw shape_mismatch("element " + std::to_string(i) + " out of range for set of size " +
                                         std::to_string(size_));
    return labels_ ? labels_->names[i] : std::to_string(i);
}

std::optional<std::size_t> FinSet::index_of(const std::string& label) const {
    if (!labels_) return std::nullopt;
    auto it = labels_->index.find(label);
    if (it == labels_->index.end()) return std::nullopt;
    return it->second;
}

std::span<const std::string> FinSet::labels() const {
    if (!labels_) return {};
    return labels_->names;
}

bool operator==(const FinSet& a, const FinSet& b) {
    if (a.size_ != b.size_) return false;
    if (!a.labels_ || !b.labels_ || a.labels_ == b.labels_) return true;
    return a.labels_->names == b.labels_->names;
}

FinSet singleton_set() { return FinSet(1); }

FinSet product_set(const FinSet& a, const FinSet& b, const Limits& limits) {
    auto n = checked_mul(a.size(), b.size(), limits, "product set");
    if (!a.has_labels() || !b.has_labels()) return FinSet(n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) labels.push_back("(" + x + "," + y + ")");
    return FinSet(std::move(labels));
}

FinSet coproduct_set(const FinSet& a, const FinSet& b, const Limits& limits) {
    auto n = a.size() + b.size();
    if (n < a.size()) throw cap_exceeded("coproduct set", SIZE_MAX, limits.cap);
    if (n > limits.cap) throw cap_exceeded("coproduct set", n, limits.cap);
    if (!a.has_labels() || !b.has_labels()) return FinSet(n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& x : a.labels()) labels.push_back("left." + x);
    for (const auto& y : b.labels()) labels.push_back("right." + y);
    return FinSet(std::move(labels));
}

// ---- FnTable ---------------------------------------------------------------

FnTable::FnTable(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size())
        throw shape_mismatch("function table has " + std::to_string(table_.size()) + " entries for a domain of size " +
                             std::to_string(dom_.size()));
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] >= cod_.size())
            throw shape_mismatch("function table entry " + std::to_string(i) + " = " + std::to_string(table_[i]) +
                                 " outside codomain of size " + std::to_string(cod_.size()));
}

FnTable FnTable::identity(const FinSet& a) {
    std::vector<std::size_t> t(a.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return FnTable(a, a, std::move(t));
}

FnTable FnTable::constant(const FinSet& dom, const FinSet& cod, std::size_t value) {
    return FnTable(dom, cod, std::vector<std::size_t>(dom.size(), value));
}

std::size_t FnTable::at(std::size_t i) const {
    if (i >= table_.size()) throw shape_mismatch("argument " + std::to_string(i) + " outside domain");
    return table_[i];
}

bool operator==(const FnTable& a, const FnTable& b) {
    return a.dom_.size() == b.dom_.size() && a.cod_.size() == b.cod_.size() && a.table_ == b.table_;
}

FnTable compose_fn(const FnTable& g, const FnTable& f) {
    require_same_size(f.cod(), g.dom(), "compose_fn");
    std::vector<std::size_t> t(f.dom().size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
    return FnTable(f.dom(), g.cod(), std::move(t));
}

FnTable project_first(const FinSet& a, const FinSet& b, const Limits& limits) {
    auto ab = product_set(a, b, limits);
    std::vector<std::size_t> t(ab.size());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = k / b.size();
    return FnTable(std::move(ab), a, std::move(t));
}

FnTable project_second(const FinSet& a, const FinSet& b, const Limits& limits) {
    auto ab = product_set(a, b, limits);
    std::vector<std::size_t> t(ab.size());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = k % b.size();
    return FnTable(std::move(ab), b, std::move(t));
}

FnTable inject_left(const FinSet& a, const FinSet& b, const Limits& limits) {
    std::vector<std::size_t> t(a.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return FnTable(a, coproduct_set(a, b, limits), std::move(t));
}

FnTable inject_right(const FinSet& a, const FinSet& b, const Limits& limits) {
    std::vector<std::size_t> t(b.size());
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = a.size() + j;
    return FnTable(b, coproduct_set(a, b, limits), std::move(t));
}

FnTable swap_fn(const FinSet& a, const FinSet& b, const Limits& limits) {
    auto ab = product_set(a, b, limits);
    auto ba = product_set(b, a, limits);
    std::vector<std::size_t> t(ab.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) t[pair_index(i, j, b.size())] = pair_index(j, i, a.size());
    return FnTable(std::move(ab), std::move(ba), std::move(t));
}

FnTable diagonal_fn(const FinSet& a, const Limits& limits) {
    auto aa = product_set(a, a, limits);
    std::vector<std::size_t> t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) t[i] = pair_index(i, i, a.size());
    return FnTable(a, std::move(aa), std::move(t));
}

FnTable product_fn(const FnTable& f, const FnTable& g, const Limits& limits) {
    auto dom = product_set(f.dom(), g.dom(), limits);
    auto cod = product_set(f.cod(), g.cod(), limits);
    std::vector<std::size_t> t(dom.size());
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        for (std::size_t j = 0; j < g.dom().size(); ++j)
            t[pair_index(i, j, g.dom().size())] = pair_index(f(i), g(j), g.cod().size());
    return FnTable(std::move(dom), std::move(cod), std::move(t));
}

FnTable pairing_fn(const FnTable& f, const FnTable& g, const Limits& limits) {
    require_same_size(f.dom(), g.dom(), "pairing_fn");
    auto cod = product_set(f.cod(), g.cod(), limits);
    std::vector<std::size_t> t(f.dom().size());
    for (std::size_t w = 0; w < t.size(); ++w) t[w] = pair_index(f(w), g(w), g.cod().size());
    return FnTable(f.dom(), std::move(cod), std::move(t));
}

FnTable copairing_fn(const FnTable& f, const FnTable& g, const Limits& limits) {
    require_same_size(f.cod(), g.cod(), "copairing_fn");
    auto dom = coproduct_set(f.dom(), g.dom(), limits);
    std::vector<std::size_t> t;
    t.reserve(dom.size());
    for (auto x : f.table()) t.push_back(x);
    for (auto x : g.table()) t.push_back(x);
    return FnTable(std::move(dom), f.cod(), std::move(t));
}

// ---- exponentials ----------------------------------------------------------

std::size_t exponential_size(std::size_t base_size, std::size_t target_size, const Limits& limits) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < base_size; ++i) {
        if (__builtin_mul_overflow(n, target_size, &n)) throw cap_exceeded("exponential", SIZE_MAX, limits.cap);
        if (n > limits.cap) {
            // Report the full requirement when it is representable.
            std::size_t full = n;
            bool overflow = false;
            for (std::size_t k = i + 1; k < base_size && !overflow; ++k)
                overflow = __builtin_mul_overflow(full, target_size, &full);
            throw cap_exceeded("exponential", overflow ? SIZE_MAX : full, limits.cap);
        }
        if (n == 0) return 0;
    }
    return n;
}

Exponential::Exponential(FinSet base, FinSet target, const Limits& limits)
    : base_(std::move(base)), target_(std::move(target)), size_(exponential_size(base_.size(), target_.size(), limits)) {
    weights_.assign(base_.size(), 1);
    for (std::size_t v = base_.size(); v-- > 1;) weights_[v - 1] = weights_[v] * target_.size();
    if (base_.has_labels() && target_.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(size_);
        for (std::size_t k = 0; k < size_; ++k) labels.push_back("fn" + std::to_string(k));
        set_ = FinSet(std::move(labels));
    } else {
        set_ = FinSet(size_);
    }
}

FnTable Exponential::decode(std::size_t index) const {
    if (index >= size_) throw shape_mismatch("exponential index " + std::to_string(index) + " out of range");
    std::vector<std::size_t> t(base_.size());
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = eval(index, v);
    return FnTable(base_, target_, std::move(t));
}

std::size_t Exponential::encode(std::span<const std::size_t> table) const {
    if (table.size() != base_.size()) throw shape_mismatch("table length does not match exponential base");
    std::size_t k = 0;
    for (std::size_t v = 0; v < table.size(); ++v) {
        if (table[v] >= target_.size()) throw shape_mismatch("table entry outside exponential target");
        k += table[v] * weights_[v];
    }
    return k;
}

std::size_t Exponential::encode(const FnTable& f) const {
    require_same_size(f.dom(), base_, "Exponential::encode");
    require_same_size(f.cod(), target_, "Exponential::encode");
    return encode(f.table());
}

std::vector<FnTable> exponential(const FinSet& base, const FinSet& target, const Limits& limits) {
    Exponential e(base, target, limits);
    std::vector<FnTable> out;
    out.reserve(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) out.push_back(e.decode(k));
    return out;
}

std::size_t eval_pair(std::size_t fn_index, std::size_t v, const FinSet& base, const FinSet& target,
                      const Limits& limits) {
    Exponential e(base, target, limits);
    if (fn_index >= e.size()) throw shape_mismatch("function index " + std::to_string(fn_index) + " out of range");
    if (v >= base.size()) throw shape_mismatch("argument " + std::to_string(v) + " out of range");
    return e.eval(fn_index, v);
}

FnTable curry_fn(const FnTable& h, const FinSet& u, const FinSet& v, const Limits& limits) {
    if (h.dom().size() != u.size() * v.size()) throw shape_mismatch("curry_fn: domain is not U x V");
    Exponential zv(v, h.cod(), limits);
    std::vector<std::size_t> t(u.size());
    std::vector<std::size_t> row(v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) row[j] = h(pair_index(i, j, v.size()));
        t[i] = zv.encode(row);
    }
    return FnTable(u, zv.as_set(), std::move(t));
}

FnTable uncurry_fn(const FnTable& g, const FinSet& v, const FinSet& z, const Limits& limits) {
    Exponential zv(v, z, limits);
    require_same_size(g.cod(), zv.as_set(), "uncurry_fn");
    auto dom = product_set(g.dom(), v, limits);
    std::vector<std::size_t> t(dom.size());
    for (std::size_t i = 0; i < g.dom().size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) t[pair_index(i, j, v.size())] = zv.eval(g(i), j);
    return FnTable(std::move(dom), z, std::move(t));
}

}  // namespace dialnet
