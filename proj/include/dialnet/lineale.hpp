#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dialnet {

enum class carrier_kind : std::uint8_t { boolean, kleene, natural, integer, unit_interval, pair };

// Shape of a lineale carrier: one of the base kinds, or a product of two shapes.
// Textual form: bool2, kleene3, nat, int, prob, prod(<tag>,<tag>).
class LinealeTag {
  public:
    explicit LinealeTag(carrier_kind kind);
    static LinealeTag product(LinealeTag first, LinealeTag second);

    carrier_kind kind() const noexcept { return kind_; }
    const LinealeTag& first() const;
    const LinealeTag& second() const;

    std::string to_string() const;
    static LinealeTag parse(std::string_view text);

    friend bool operator==(const LinealeTag& a, const LinealeTag& b);

  private:
    carrier_kind kind_;
    std::shared_ptr<const std::pair<LinealeTag, LinealeTag>> factors_;
};

// Exact rational in [0, 1], always in lowest terms with a positive denominator.
class UnitFraction {
  public:
    UnitFraction() = default;
    // Throws value_error when num/den is not in [0, 1] or den == 0.
    static UnitFraction make(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    UnitFraction operator*(const UnitFraction& other) const;
    // Caller guarantees the quotient stays in [0, 1].
    UnitFraction operator/(const UnitFraction& other) const;

    bool is_zero() const noexcept { return num_ == 0; }
    friend bool operator==(const UnitFraction&, const UnitFraction&) = default;
    friend bool operator<(const UnitFraction& a, const UnitFraction& b);
    friend bool operator<=(const UnitFraction& a, const UnitFraction& b) { return !(b < a); }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  private:
    UnitFraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

enum class Kleene : std::int8_t { no = -1, unknown = 0, yes = 1 };

// An element of some lineale. The payload shape determines the carrier; the
// lineale structure (order, tensor, hom) lives in LinealeSpec.
class LinealeValue {
  public:
    using pair_type = std::pair<LinealeValue, LinealeValue>;

    LinealeValue() : payload_(false) {}

    static LinealeValue boolean(bool b);
    static LinealeValue kleene(Kleene k);
    static LinealeValue kleene(int k);  // throws value_error outside {-1,0,1}
    static LinealeValue natural(std::uint64_t n);
    static LinealeValue integer(std::int64_t z);
    static LinealeValue fraction(UnitFraction q);
    static LinealeValue fraction(std::int64_t num, std::int64_t den);
    static LinealeValue pair(LinealeValue first, LinealeValue second);

    carrier_kind kind() const noexcept { return static_cast<carrier_kind>(payload_.index()); }

    bool as_boolean() const;
    Kleene as_kleene() const;
    std::uint64_t as_natural() const;
    std::int64_t as_integer() const;
    const UnitFraction& as_fraction() const;
    const LinealeValue& first() const;
    const LinealeValue& second() const;

    // True when the payload shape matches tag.
    bool has_shape(const LinealeTag& tag) const;
    LinealeTag shape() const;

    friend bool operator==(const LinealeValue& a, const LinealeValue& b);

  private:
    struct Natural {
        std::uint64_t value;
        bool operator==(const Natural&) const = default;
    };
    struct Integer {
        std::int64_t value;
        bool operator==(const Integer&) const = default;
    };
    using Payload = std::variant<bool, Kleene, Natural, Integer, UnitFraction, std::shared_ptr<const pair_type>>;

    explicit LinealeValue(Payload p) : payload_(std::move(p)) {}
    Payload payload_;
};

// Canonical text: true|false, -1|0|1, decimal integers, p/q (0 and 1 print bare), (v1,v2).
std::string format_value(const LinealeValue& v);
// Throws value_error when text is not a value of the given carrier.
LinealeValue parse_value(const LinealeTag& tag, std::string_view text);

// (L, order, tensor, unit, hom). Immutable; share through LinealePtr.
class LinealeSpec {
  public:
    using Relation = std::function<bool(const LinealeValue&, const LinealeValue&)>;
    using Binary = std::function<LinealeValue(const LinealeValue&, const LinealeValue&)>;
    using Sampler = std::function<LinealeValue(std::mt19937_64&, std::uint64_t)>;

    struct Operations {
        Relation leq;
        Binary tensor;
        Binary imp;
        Sampler sample;
        // Whole carrier when finite; enables exhaustive law checks.
        std::optional<std::vector<LinealeValue>> elements;
    };

    LinealeSpec(std::string name, LinealeTag carrier, LinealeValue unit, std::string description, Operations ops);

    const std::string& name() const noexcept { return name_; }
    const LinealeTag& carrier() const noexcept { return carrier_; }
    const LinealeValue& unit() const noexcept { return unit_; }
    const std::string& description() const noexcept { return description_; }
    const Operations& operations() const noexcept { return ops_; }

    // All four throw tag_mismatch when an argument is not on this carrier.
    bool leq(const LinealeValue& a, const LinealeValue& b) const;
    LinealeValue tensor(const LinealeValue& a, const LinealeValue& b) const;
    LinealeValue imp(const LinealeValue& a, const LinealeValue& b) const;

    // Deterministic given the generator state. bound > 0 limits |integers| and
    // fraction denominators; finite carriers are sampled uniformly.
    LinealeValue sample(std::mt19937_64& rng, std::uint64_t bound) const;
    LinealeValue sample(std::uint64_t seed, std::uint64_t bound) const;

    bool accepts(const LinealeValue& v) const { return v.has_shape(carrier_); }
    void require(const LinealeValue& v) const;

    std::optional<std::span<const LinealeValue>> elements() const;
    LinealeValue parse(std::string_view text) const { return parse_value(carrier_, text); }

  private:
    std::string name_;
    LinealeTag carrier_;
    LinealeValue unit_;
    std::string description_;
    Operations ops_;
};

using LinealePtr = std::shared_ptr<const LinealeSpec>;

// The two-element Boolean lineale: order false < true, tensor = and, unit true.
LinealePtr bool2();
// {-1, 0, 1}: usual order, tensor = min, unit 1.
LinealePtr kleene3();
// Natural numbers with the opposite order, tensor = +, unit 0, truncated subtraction.
LinealePtr nat();
// Integers with the usual order, built from the ordered additive group.
LinealePtr integers();
// [0, 1] with the usual order, tensor = product, truncated division.
LinealePtr prob();

struct PoGroup {
    std::string name;
    LinealeTag carrier{carrier_kind::integer};
    LinealeValue unit;
    std::string description;
    LinealeSpec::Relation leq;
    LinealeSpec::Binary op;
    std::function<LinealeValue(const LinealeValue&)> inverse;
    LinealeSpec::Sampler sample;
};

// imp(a, b) = op(b, inverse(a)). Axioms are not verified here; run the law suite.
LinealePtr from_pogroup(PoGroup group);
// The additive integer group with the given order: usual (<=) or reversed (>=).
PoGroup integer_group(bool reversed_order);

// Componentwise structure on pairs.
LinealePtr product_lineale(LinealePtr first, LinealePtr second);

// Standard lineale for a tag (products built recursively).
LinealePtr lineale_for(const LinealeTag& tag);
LinealePtr lineale_for(std::string_view tag_text);

// Same lineale with imp replaced; used to test that law checks are not vacuous.
LinealePtr with_imp(const LinealePtr& base, LinealeSpec::Binary imp, std::string name);

}  // namespace dialnet
