#include "dialnet/lineale.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "dialnet/error.hpp"

namespace dialnet {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("integer addition overflows 64 bits");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw arithmetic_overflow("integer negation overflows 64 bits");
    return -a;
}

std::int64_t narrow(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw arithmetic_overflow(std::string(what) + " overflows 64 bits");
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Position of the comma separating the two halves of "(a,b)" contents, or npos.
std::size_t top_level_comma(std::string_view s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) return i;
    }
    return std::string_view::npos;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') return std::nullopt;
    Int out{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return out;
}

}  // namespace

// ---- LinealeTag ------------------------------------------------------------

LinealeTag::LinealeTag(carrier_kind kind) : kind_(kind) {
    if (kind == carrier_kind::pair) throw semantic_error("product tags need two factors; use LinealeTag::product");
}

LinealeTag LinealeTag::product(LinealeTag first, LinealeTag second) {
    LinealeTag t(carrier_kind::boolean);
    t.kind_ = carrier_kind::pair;
    t.factors_ = std::make_shared<const std::pair<LinealeTag, LinealeTag>>(std::move(first), std::move(second));
    return t;
}

const LinealeTag& LinealeTag::first() const {
    if (!factors_) throw tag_mismatch("tag " + to_string() + " is not a product");
    return factors_->first;
}

const LinealeTag& LinealeTag::second() const {
    if (!factors_) throw tag_mismatch("tag " + to_string() + " is not a product");
    return factors_->second;
}

std::string LinealeTag::to_string() const {
    switch (kind_) {
        case carrier_kind::boolean: return "bool2";
        case carrier_kind::kleene: return "kleene3";
        case carrier_kind::natural: return "nat";
        case carrier_kind::integer: return "int";
        case carrier_kind::unit_interval: return "prob";
        case carrier_kind::pair: return "prod(" + factors_->first.to_string() + "," + factors_->second.to_string() + ")";
    }
    return "?";
}

LinealeTag LinealeTag::parse(std::string_view text) {
    auto s = trim(text);
    if (s == "bool2") return LinealeTag(carrier_kind::boolean);
    if (s == "kleene3") return LinealeTag(carrier_kind::kleene);
    if (s == "nat") return LinealeTag(carrier_kind::natural);
    if (s == "int") return LinealeTag(carrier_kind::integer);
    if (s == "prob") return LinealeTag(carrier_kind::unit_interval);
    if (s.starts_with("prod(") && s.ends_with(")")) {
        auto inner = s.substr(5, s.size() - 6);
        auto comma = top_level_comma(inner);
        if (comma != std::string_view::npos)
            return product(parse(inner.substr(0, comma)), parse(inner.substr(comma + 1)));
    }
    throw parse_error("unknown lineale tag '" + std::string(text) + "'");
}

bool operator==(const LinealeTag& a, const LinealeTag& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != carrier_kind::pair) return true;
    return a.factors_->first == b.factors_->first && a.factors_->second == b.factors_->second;
}

// ---- UnitFraction ----------------------------------------------------------

UnitFraction UnitFraction::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw value_error("fraction with zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    if (num < 0 || num > den)
        throw value_error(std::to_string(num) + "/" + std::to_string(den) + " is outside [0,1]");
    auto g = std::gcd(num, den);
    if (g == 0) g = 1;
    return UnitFraction(num / g, den / g);
}

UnitFraction UnitFraction::operator*(const UnitFraction& other) const {
    __int128 n = static_cast<__int128>(num_) * other.num_;
    __int128 d = static_cast<__int128>(den_) * other.den_;
    auto g = gcd128(n, d);
    if (g == 0) g = 1;
    return UnitFraction(narrow(n / g, "fraction product"), narrow(d / g, "fraction product"));
}

UnitFraction UnitFraction::operator/(const UnitFraction& other) const {
    if (other.num_ == 0) throw value_error("division by zero fraction");
    __int128 n = static_cast<__int128>(num_) * other.den_;
    __int128 d = static_cast<__int128>(den_) * other.num_;
    auto g = gcd128(n, d);
    if (g == 0) g = 1;
    n /= g;
    d /= g;
    if (n > d) throw value_error("fraction quotient exceeds 1");
    return UnitFraction(narrow(n, "fraction quotient"), narrow(d, "fraction quotient"));
}

bool operator<(const UnitFraction& a, const UnitFraction& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

// ---- LinealeValue ----------------------------------------------------------

LinealeValue LinealeValue::boolean(bool b) { return LinealeValue(Payload(std::in_place_index<0>, b)); }
LinealeValue LinealeValue::kleene(Kleene k) { return LinealeValue(Payload(std::in_place_index<1>, k)); }

LinealeValue LinealeValue::kleene(int k) {
    if (k < -1 || k > 1) throw value_error(std::to_string(k) + " is not a Kleene value (-1, 0, 1)");
    return kleene(static_cast<Kleene>(k));
}

LinealeValue LinealeValue::natural(std::uint64_t n) { return LinealeValue(Payload(std::in_place_index<2>, Natural{n})); }
LinealeValue LinealeValue::integer(std::int64_t z) { return LinealeValue(Payload(std::in_place_index<3>, Integer{z})); }
LinealeValue LinealeValue::fraction(UnitFraction q) { return LinealeValue(Payload(std::in_place_index<4>, q)); }
LinealeValue LinealeValue::fraction(std::int64_t num, std::int64_t den) { return fraction(UnitFraction::make(num, den)); }

LinealeValue LinealeValue::pair(LinealeValue first, LinealeValue second) {
    return LinealeValue(
        Payload(std::in_place_index<5>, std::make_shared<const pair_type>(std::move(first), std::move(second))));
}

namespace {
[[noreturn]] void wrong_kind(const LinealeValue& v, const char* wanted) {
    throw tag_mismatch("expected a " + std::string(wanted) + " value, got " + v.shape().to_string() + " value " +
                       format_value(v));
}
}  // namespace

bool LinealeValue::as_boolean() const {
    if (auto p = std::get_if<0>(&payload_)) return *p;
    wrong_kind(*this, "bool2");
}
Kleene LinealeValue::as_kleene() const {
    if (auto p = std::get_if<1>(&payload_)) return *p;
    wrong_kind(*this, "kleene3");
}
std::uint64_t LinealeValue::as_natural() const {
    if (auto p = std::get_if<2>(&payload_)) return p->value;
    wrong_kind(*this, "nat");
}
std::int64_t LinealeValue::as_integer() const {
    if (auto p = std::get_if<3>(&payload_)) return p->value;
    wrong_kind(*this, "int");
}
const UnitFraction& LinealeValue::as_fraction() const {
    if (auto p = std::get_if<4>(&payload_)) return *p;
    wrong_kind(*this, "prob");
}
const LinealeValue& LinealeValue::first() const {
    if (auto p = std::get_if<5>(&payload_)) return (*p)->first;
    wrong_kind(*this, "pair");
}
const LinealeValue& LinealeValue::second() const {
    if (auto p = std::get_if<5>(&payload_)) return (*p)->second;
    wrong_kind(*this, "pair");
}

bool LinealeValue::has_shape(const LinealeTag& tag) const {
    if (kind() != tag.kind()) return false;
    if (kind() != carrier_kind::pair) return true;
    return first().has_shape(tag.first()) && second().has_shape(tag.second());
}

LinealeTag LinealeValue::shape() const {
    if (kind() == carrier_kind::pair) return LinealeTag::product(first().shape(), second().shape());
    return LinealeTag(kind());
}

bool operator==(const LinealeValue& a, const LinealeValue& b) {
    if (a.payload_.index() != b.payload_.index()) return false;
    if (a.kind() == carrier_kind::pair) {
        const auto& pa = *std::get<5>(a.payload_);
        const auto& pb = *std::get<5>(b.payload_);
        return &pa == &pb || (pa.first == pb.first && pa.second == pb.second);
    }
    return a.payload_ == b.payload_;
}

std::string format_value(const LinealeValue& v) {
    switch (v.kind()) {
        case carrier_kind::boolean: return v.as_boolean() ? "true" : "false";
        case carrier_kind::kleene: return std::to_string(static_cast<int>(v.as_kleene()));
        case carrier_kind::natural: return std::to_string(v.as_natural());
        case carrier_kind::integer: return std::to_string(v.as_integer());
        case carrier_kind::unit_interval: {
            const auto& q = v.as_fraction();
            if (q.den() == 1) return std::to_string(q.num());
            return std::to_string(q.num()) + "/" + std::to_string(q.den());
        }
        case carrier_kind::pair: return "(" + format_value(v.first()) + "," + format_value(v.second()) + ")";
    }
    return "?";
}

LinealeValue parse_value(const LinealeTag& tag, std::string_view text) {
    auto s = trim(text);
    auto fail = [&](const std::string& why) -> LinealeValue {
        throw value_error("'" + std::string(text) + "' is not a " + tag.to_string() + " value" +
                          (why.empty() ? "" : ": " + why));
    };
    switch (tag.kind()) {
        case carrier_kind::boolean:
            if (s == "true") return LinealeValue::boolean(true);
            if (s == "false") return LinealeValue::boolean(false);
            return fail("expected true or false");
        case carrier_kind::kleene:
            if (s == "-1") return LinealeValue::kleene(Kleene::no);
            if (s == "0") return LinealeValue::kleene(Kleene::unknown);
            if (s == "1") return LinealeValue::kleene(Kleene::yes);
            return fail("expected -1, 0 or 1");
        case carrier_kind::natural: {
            if (auto n = parse_int<std::uint64_t>(s); n && s.front() != '-') return LinealeValue::natural(*n);
            return fail("expected a non-negative decimal integer");
        }
        case carrier_kind::integer: {
            if (auto z = parse_int<std::int64_t>(s)) return LinealeValue::integer(*z);
            return fail("expected a decimal integer");
        }
        case carrier_kind::unit_interval: {
            auto slash = s.find('/');
            auto num = parse_int<std::int64_t>(s.substr(0, slash));
            std::optional<std::int64_t> den = std::int64_t{1};
            if (slash != std::string_view::npos) den = parse_int<std::int64_t>(s.substr(slash + 1));
            if (!num || !den) return fail("expected p/q");
            if (*den <= 0) return fail("denominator must be positive");
            if (*num < 0 || *num > *den) return fail("outside [0,1]");
            return LinealeValue::fraction(*num, *den);
        }
        case carrier_kind::pair: {
            if (s.size() < 2 || s.front() != '(' || s.back() != ')') return fail("expected (v1,v2)");
            auto inner = s.substr(1, s.size() - 2);
            auto comma = top_level_comma(inner);
            if (comma == std::string_view::npos) return fail("expected (v1,v2)");
            return LinealeValue::pair(parse_value(tag.first(), inner.substr(0, comma)),
                                      parse_value(tag.second(), inner.substr(comma + 1)));
        }
    }
    return fail("");
}

// ---- LinealeSpec -----------------------------------------------------------

LinealeSpec::LinealeSpec(std::string name, LinealeTag carrier, LinealeValue unit, std::string description,
                         Operations ops)
    : name_(std::move(name)),
      carrier_(std::move(carrier)),
      unit_(std::move(unit)),
      description_(std::move(description)),
      ops_(std::move(ops)) {
    require(unit_);
}

void LinealeSpec::require(const LinealeValue& v) const {
    if (!accepts(v))
        throw tag_mismatch("value " + format_value(v) + " of carrier " + v.shape().to_string() +
                           " used with lineale " + name_);
}

bool LinealeSpec::leq(const LinealeValue& a, const LinealeValue& b) const {
    require(a);
    require(b);
    return ops_.leq(a, b);
}

LinealeValue LinealeSpec::tensor(const LinealeValue& a, const LinealeValue& b) const {
    require(a);
    require(b);
    return ops_.tensor(a, b);
}

LinealeValue LinealeSpec::imp(const LinealeValue& a, const LinealeValue& b) const {
    require(a);
    require(b);
    return ops_.imp(a, b);
}

LinealeValue LinealeSpec::sample(std::mt19937_64& rng, std::uint64_t bound) const {
    if (bound == 0) throw value_error("sample bound must be positive");
    return ops_.sample(rng, bound);
}

LinealeValue LinealeSpec::sample(std::uint64_t seed, std::uint64_t bound) const {
    std::mt19937_64 rng(seed);
    return sample(rng, bound);
}

std::optional<std::span<const LinealeValue>> LinealeSpec::elements() const {
    if (!ops_.elements) return std::nullopt;
    return std::span<const LinealeValue>(*ops_.elements);
}

// ---- instances -------------------------------------------------------------

namespace {

std::vector<LinealeValue> bool_elements() { return {LinealeValue::boolean(false), LinealeValue::boolean(true)}; }

std::vector<LinealeValue> kleene_elements() {
    return {LinealeValue::kleene(Kleene::no), LinealeValue::kleene(Kleene::unknown), LinealeValue::kleene(Kleene::yes)};
}

LinealePtr make_bool2() {
    LinealeSpec::Operations ops;
    ops.leq = [](const LinealeValue& a, const LinealeValue& b) { return !a.as_boolean() || b.as_boolean(); };
    ops.tensor = [](const LinealeValue& a, const LinealeValue& b) {
        return LinealeValue::boolean(a.as_boolean() && b.as_boolean());
    };
    ops.imp = [](const LinealeValue& a, const LinealeValue& b) {
        return LinealeValue::boolean(!a.as_boolean() || b.as_boolean());
    };
    ops.sample = [](std::mt19937_64& rng, std::uint64_t) { return LinealeValue::boolean(uniform_below(rng, 2) == 1); };
    ops.elements = bool_elements();
    return std::make_shared<const LinealeSpec>("bool2", LinealeTag(carrier_kind::boolean), LinealeValue::boolean(true),
                                               "two-element chain false < true, tensor = and, hom = implication",
                                               std::move(ops));
}

int kv(const LinealeValue& v) { return static_cast<int>(v.as_kleene()); }

LinealePtr make_kleene3() {
    LinealeSpec::Operations ops;
    ops.leq = [](const LinealeValue& a, const LinealeValue& b) { return kv(a) <= kv(b); };
    ops.tensor = [](const LinealeValue& a, const LinealeValue& b) { return LinealeValue::kleene(std::min(kv(a), kv(b))); };
    ops.imp = [](const LinealeValue& a, const LinealeValue& b) {
        return kv(a) <= kv(b) ? LinealeValue::kleene(Kleene::yes) : b;
    };
    ops.sample = [](std::mt19937_64& rng, std::uint64_t) {
        return LinealeValue::kleene(static_cast<int>(uniform_below(rng, 3)) - 1);
    };
    ops.elements = kleene_elements();
    return std::make_shared<const LinealeSpec>("kleene3", LinealeTag(carrier_kind::kleene),
                                               LinealeValue::kleene(Kleene::yes),
                                               "{-1,0,1} with the usual order, tensor = min, unit 1",
                                               std::move(ops));
}

LinealePtr make_nat() {
    LinealeSpec::Operations ops;
    // Opposite of the numeric order: larger numbers sit lower.
    ops.leq = [](const LinealeValue& a, const LinealeValue& b) { return a.as_natural() >= b.as_natural(); };
    ops.tensor = [](const LinealeValue& a, const LinealeValue& b) {
        std::uint64_t r;
        if (__builtin_add_overflow(a.as_natural(), b.as_natural(), &r))
            throw arithmetic_overflow("natural addition overflows 64 bits");
        return LinealeValue::natural(r);
    };
    ops.imp = [](const LinealeValue& a, const LinealeValue& b) {
        auto x = a.as_natural(), y = b.as_natural();
        return LinealeValue::natural(y > x ? y - x : 0);
    };
    ops.sample = [](std::mt19937_64& rng, std::uint64_t bound) {
        return LinealeValue::natural(uniform_below(rng, bound + 1));
    };
    return std::make_shared<const LinealeSpec>("nat", LinealeTag(carrier_kind::natural), LinealeValue::natural(0),
                                               "naturals ordered by >=, tensor = +, hom = truncated subtraction",
                                               std::move(ops));
}

LinealePtr make_prob() {
    LinealeSpec::Operations ops;
    ops.leq = [](const LinealeValue& a, const LinealeValue& b) { return a.as_fraction() <= b.as_fraction(); };
    ops.tensor = [](const LinealeValue& a, const LinealeValue& b) {
        return LinealeValue::fraction(a.as_fraction() * b.as_fraction());
    };
    ops.imp = [](const LinealeValue& a, const LinealeValue& b) {
        const auto& x = a.as_fraction();
        const auto& y = b.as_fraction();
        if (!x.is_zero() && y <= x) return LinealeValue::fraction(y / x);
        return LinealeValue::fraction(1, 1);
    };
    ops.sample = [](std::mt19937_64& rng, std::uint64_t bound) {
        auto cap = std::min<std::uint64_t>(bound, std::numeric_limits<std::int32_t>::max());
        auto den = static_cast<std::int64_t>(1 + uniform_below(rng, cap));
        auto num = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(den) + 1));
        return LinealeValue::fraction(num, den);
    };
    return std::make_shared<const LinealeSpec>("prob", LinealeTag(carrier_kind::unit_interval),
                                               LinealeValue::fraction(1, 1),
                                               "exact rationals in [0,1], tensor = product, hom = truncated division",
                                               std::move(ops));
}

}  // namespace

PoGroup integer_group(bool reversed_order) {
    PoGroup g;
    g.name = reversed_order ? "int-reversed" : "int";
    g.carrier = LinealeTag(carrier_kind::integer);
    g.unit = LinealeValue::integer(0);
    g.description = reversed_order ? "integers ordered by >=, additive group" : "integers ordered by <=, additive group";
    if (reversed_order)
        g.leq = [](const LinealeValue& a, const LinealeValue& b) { return a.as_integer() >= b.as_integer(); };
    else
        g.leq = [](const LinealeValue& a, const LinealeValue& b) { return a.as_integer() <= b.as_integer(); };
    g.op = [](const LinealeValue& a, const LinealeValue& b) {
        return LinealeValue::integer(checked_add(a.as_integer(), b.as_integer()));
    };
    g.inverse = [](const LinealeValue& a) { return LinealeValue::integer(checked_neg(a.as_integer())); };
    g.sample = [](std::mt19937_64& rng, std::uint64_t bound) {
        auto b = std::min<std::uint64_t>(bound, std::numeric_limits<std::int64_t>::max() / 2);
        return LinealeValue::integer(static_cast<std::int64_t>(uniform_below(rng, 2 * b + 1)) -
                                     static_cast<std::int64_t>(b));
    };
    return g;
}

LinealePtr from_pogroup(PoGroup group) {
    LinealeSpec::Operations ops;
    ops.leq = group.leq;
    ops.tensor = group.op;
    ops.imp = [op = group.op, inverse = group.inverse](const LinealeValue& a, const LinealeValue& b) {
        return op(b, inverse(a));
    };
    ops.sample = group.sample;
    return std::make_shared<const LinealeSpec>(group.name, group.carrier, group.unit,
                                               group.description + "; hom a -o b = b * a^-1", std::move(ops));
}

LinealePtr product_lineale(LinealePtr first, LinealePtr second) {
    LinealeSpec::Operations ops;
    ops.leq = [l = first, r = second](const LinealeValue& a, const LinealeValue& b) {
        return l->leq(a.first(), b.first()) && r->leq(a.second(), b.second());
    };
    ops.tensor = [l = first, r = second](const LinealeValue& a, const LinealeValue& b) {
        return LinealeValue::pair(l->tensor(a.first(), b.first()), r->tensor(a.second(), b.second()));
    };
    ops.imp = [l = first, r = second](const LinealeValue& a, const LinealeValue& b) {
        return LinealeValue::pair(l->imp(a.first(), b.first()), r->imp(a.second(), b.second()));
    };
    ops.sample = [l = first, r = second](std::mt19937_64& rng, std::uint64_t bound) {
        auto a = l->sample(rng, bound);
        auto b = r->sample(rng, bound);
        return LinealeValue::pair(std::move(a), std::move(b));
    };
    if (auto le = first->elements(), re = second->elements(); le && re) {
        std::vector<LinealeValue> all;
        for (const auto& a : *le)
            for (const auto& b : *re) all.push_back(LinealeValue::pair(a, b));
        ops.elements = std::move(all);
    }
    auto name = "prod(" + first->name() + "," + second->name() + ")";
    auto carrier = LinealeTag::product(first->carrier(), second->carrier());
    auto unit = LinealeValue::pair(first->unit(), second->unit());
    auto description = "componentwise product of " + first->name() + " and " + second->name();
    return std::make_shared<const LinealeSpec>(std::move(name), std::move(carrier), std::move(unit),
                                               std::move(description), std::move(ops));
}

LinealePtr bool2() {
    static const LinealePtr instance = make_bool2();
    return instance;
}

LinealePtr kleene3() {
    static const LinealePtr instance = make_kleene3();
    return instance;
}

LinealePtr nat() {
    static const LinealePtr instance = make_nat();
    return instance;
}

LinealePtr integers() {
    static const LinealePtr instance = from_pogroup(integer_group(false));
    return instance;
}

LinealePtr prob() {
    static const LinealePtr instance = make_prob();
    return instance;
}

LinealePtr lineale_for(const LinealeTag& tag) {
    switch (tag.kind()) {
        case carrier_kind::boolean: return bool2();
        case carrier_kind::kleene: return kleene3();
        case carrier_kind::natural: return nat();
        case carrier_kind::integer: return integers();
        case carrier_kind::unit_interval: return prob();
        case carrier_kind::pair: return product_lineale(lineale_for(tag.first()), lineale_for(tag.second()));
    }
    throw parse_error("unknown lineale tag");
}

LinealePtr lineale_for(std::string_view tag_text) { return lineale_for(LinealeTag::parse(tag_text)); }

LinealePtr with_imp(const LinealePtr& base, LinealeSpec::Binary imp, std::string name) {
    auto ops = base->operations();
    ops.imp = std::move(imp);
    return std::make_shared<const LinealeSpec>(std::move(name), base->carrier(), base->unit(),
                                               base->description() + " (hom replaced)", std::move(ops));
}

}  // namespace dialnet
