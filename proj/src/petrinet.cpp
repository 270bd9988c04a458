#include "dialnet/petrinet.hpp"

#include <sstream>

namespace dialnet {

PetriNet::PetriNet(DialObject pre, DialObject post, LinealeValue default_weight)
    : pre_(std::move(pre)), post_(std::move(post)), default_weight_(std::move(default_weight)) {
    if (!(pre_.rows() == post_.rows()) || !(pre_.columns() == post_.columns()))
        throw shape_mismatch("pre and post relations must share places and transitions");
    if (pre_.lineale()->name() != post_.lineale()->name())
        throw tag_mismatch("pre and post relations are over different lineales");
    pre_.lineale()->require(default_weight_);
}

bool operator==(const PetriNet& a, const PetriNet& b) {
    return a.places() == b.places() && a.transitions() == b.transitions() && a.default_weight_ == b.default_weight_ &&
           a.pre_ == b.pre_ && a.post_ == b.post_;
}

std::string_view to_string(NetSide side) { return side == NetSide::pre ? "pre" : "post"; }

std::vector<NetViolation> check_net_morphism(const PetriNet& source, const PetriNet& target, const FnTable& forward,
                                             const FnTable& backward) {
    std::vector<NetViolation> out;
    for (auto& v : check_morphism(source.pre(), target.pre(), forward, backward))
        out.push_back(NetViolation{NetSide::pre, std::move(v)});
    for (auto& v : check_morphism(source.post(), target.post(), forward, backward))
        out.push_back(NetViolation{NetSide::post, std::move(v)});
    return out;
}

namespace {
std::string describe(const std::vector<NetViolation>& vs) {
    std::ostringstream out;
    out << "net morphism condition fails at " << vs.size() << " point(s)";
    for (const auto& v : vs)
        out << "; " << to_string(v.side) << " (" << v.point.row << "," << v.point.column
            << "): " << format_value(v.point.source_weight) << " not below " << format_value(v.point.target_weight);
    return out.str();
}
}  // namespace

invalid_net_morphism::invalid_net_morphism(std::vector<NetViolation> violations)
    : semantic_error(describe(violations)), violations_(std::move(violations)) {}

NetMorphism::NetMorphism(PetriNet source, PetriNet target, FnTable forward, FnTable backward)
    : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)), backward_(std::move(backward)) {}

NetMorphism NetMorphism::make(PetriNet source, PetriNet target, FnTable forward, FnTable backward) {
    auto vs = check_net_morphism(source, target, forward, backward);
    if (!vs.empty()) throw invalid_net_morphism(std::move(vs));
    return NetMorphism(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

DialMorphism NetMorphism::on_pre() const {
    return DialMorphism::trusted(source_.pre(), target_.pre(), forward_, backward_);
}

DialMorphism NetMorphism::on_post() const {
    return DialMorphism::trusted(source_.post(), target_.post(), forward_, backward_);
}

bool operator==(const NetMorphism& a, const NetMorphism& b) {
    return a.forward_ == b.forward_ && a.backward_ == b.backward_ && a.source_ == b.source_ && a.target_ == b.target_;
}

NetMorphism identity(const PetriNet& net) {
    return NetMorphism::make(net, net, FnTable::identity(net.places()), FnTable::identity(net.transitions()));
}

NetMorphism compose(const NetMorphism& m2, const NetMorphism& m1) {
    if (!(m1.target() == m2.source())) throw shape_mismatch("compose: nets do not line up");
    auto pre = compose(m2.on_pre(), m1.on_pre());
    return NetMorphism::make(m1.source(), m2.target(), pre.forward(), pre.backward());
}

// ---- connectives -------------------------------------------------------------

PetriNet net_tensor(const PetriNet& a, const PetriNet& b, const Limits& limits) {
    return PetriNet(tensor_obj(a.pre(), b.pre(), limits), tensor_obj(a.post(), b.post(), limits),
                    a.lineale()->tensor(a.default_weight(), b.default_weight()));
}

PetriNet net_with(const PetriNet& a, const PetriNet& b, const Limits& limits) {
    return PetriNet(with_product(a.pre(), b.pre(), limits), with_product(a.post(), b.post(), limits),
                    a.default_weight());
}

PetriNet net_oplus(const PetriNet& a, const PetriNet& b, const Limits& limits) {
    return PetriNet(oplus(a.pre(), b.pre(), limits), oplus(a.post(), b.post(), limits), a.default_weight());
}

PetriNet net_hom(const PetriNet& a, const PetriNet& b, const Limits& limits) {
    return PetriNet(hom_obj(a.pre(), b.pre(), limits), hom_obj(a.post(), b.post(), limits),
                    a.lineale()->imp(a.default_weight(), b.default_weight()));
}

// ---- examples ----------------------------------------------------------------

PetriNet build_net(const LinealePtr& lineale, std::vector<std::string> places, std::vector<std::string> transitions,
                   const std::vector<Arc>& pre, const std::vector<Arc>& post, const LinealeValue& default_weight) {
    FinSet u(std::move(places));
    FinSet x(std::move(transitions));
    auto fill = [&](const std::vector<Arc>& arcs, const char* side) {
        std::vector<LinealeValue> w(u.size() * x.size(), default_weight);
        std::vector<bool> seen(w.size(), false);
        for (const auto& arc : arcs) {
            auto p = u.index_of(arc.place);
            auto t = x.index_of(arc.transition);
            if (!p) throw semantic_error(std::string(side) + " arc names unknown place '" + arc.place + "'");
            if (!t) throw semantic_error(std::string(side) + " arc names unknown transition '" + arc.transition + "'");
            auto k = *p * x.size() + *t;
            if (seen[k])
                throw semantic_error(std::string(side) + " arc (" + arc.place + "," + arc.transition + ") given twice");
            seen[k] = true;
            w[k] = arc.weight;
        }
        return DialObject(lineale, u, x, std::move(w));
    };
    return PetriNet(fill(pre, "pre"), fill(post, "post"), default_weight);
}

namespace {
LinealeValue n(std::uint64_t v) { return LinealeValue::natural(v); }
LinealeValue z(std::int64_t v) { return LinealeValue::integer(v); }
LinealeValue k(int v) { return LinealeValue::kleene(v); }
LinealeValue q(UnitFraction v) { return LinealeValue::fraction(v); }
UnitFraction complement(const UnitFraction& p) { return UnitFraction::make(p.den() - p.num(), p.den()); }
}  // namespace

PetriNet water_net() { return water_variant(2); }

PetriNet water_variant(std::uint64_t hydrogen_weight) {
    return build_net(nat(), {"H2", "O2", "H2O"}, {"t"}, {{"H2", "t", n(hydrogen_weight)}, {"O2", "t", n(1)}},
                     {{"H2O", "t", n(2)}}, n(0));
}

PetriNet water_with_extra_place() {
    return build_net(nat(), {"H2", "O2", "H2O", "Pt"}, {"t"}, {{"H2", "t", n(2)}, {"O2", "t", n(1)}},
                     {{"H2O", "t", n(2)}}, n(0));
}

PetriNet inhibitor_net() {
    return build_net(integers(), {"S1", "S2", "S3", "I"}, {"r"},
                     {{"S1", "r", z(2)}, {"S2", "r", z(2)}, {"I", "r", z(-3)}}, {{"S3", "r", z(1)}}, z(0));
}

PetriNet sir_net(const SirParameters& p) {
    auto one = UnitFraction::make(1, 1);
    return build_net(prob(), {"S", "I", "R"}, {"c", "r", "i"},
                     {{"S", "c", q(p.contact)},
                      {"I", "c", q(one)},
                      {"I", "r", q(p.recovery)},
                      {"I", "i", q(complement(p.recovery))}},
                     {{"I", "c", q(p.infection)},
                      {"S", "c", q(complement(p.infection))},
                      {"R", "r", q(one)},
                      {"I", "i", q(one)}},
                     q(UnitFraction::make(0, 1)));
}

PetriNet circadian_net() {
    // One place per species, even where the reaction diagram repeats it.
    return build_net(kleene3(), {"P", "KaiA", "KaiB", "KaiBC+P", "KaiABC+P", "KaiAC", "KaiAC+P"},
                     {"dephos1", "dephos2", "phos1", "phos2"},
                     {{"KaiABC+P", "dephos1", k(1)},
                      {"KaiAC", "dephos1", k(0)},
                      {"KaiBC+P", "dephos2", k(1)},
                      {"KaiA", "dephos2", k(1)},
                      {"P", "phos1", k(1)},
                      {"KaiAC", "phos1", k(1)},
                      {"KaiAC+P", "phos2", k(1)},
                      {"KaiB", "phos2", k(1)},
                      {"P", "phos2", k(1)},
                      {"KaiBC+P", "phos2", k(0)}},
                     {{"P", "dephos1", k(1)},
                      {"KaiBC+P", "dephos1", k(1)},
                      {"KaiA", "dephos1", k(1)},
                      {"KaiB", "dephos2", k(1)},
                      {"P", "dephos2", k(1)},
                      {"KaiAC", "dephos2", k(1)},
                      {"KaiAC+P", "phos1", k(1)},
                      {"KaiABC+P", "phos2", k(1)}},
                     k(-1));
}

PetriNet catalysis_net(const CatalysisRates& rates) {
    auto lineale = product_lineale(prob(), integers());
    auto arc = [&](std::size_t i, std::int64_t role) { return LinealeValue::pair(q(rates.rates[i]), z(role)); };
    return build_net(lineale, {"S1", "S2", "S3", "I", "C"}, {"r"},
                     {{"S1", "r", arc(0, 0)}, {"S2", "r", arc(1, 0)}, {"I", "r", arc(3, -3)}, {"C", "r", arc(4, 5)}},
                     {{"S3", "r", arc(2, 0)}}, LinealeValue::pair(q(UnitFraction::make(0, 1)), z(0)));
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = {"water", "sir", "circadian", "inhibitor", "catalysis"};
    return names;
}

PetriNet build_example(std::string_view name) {
    if (name == "water") return water_net();
    if (name == "sir") return sir_net();
    if (name == "circadian") return circadian_net();
    if (name == "inhibitor") return inhibitor_net();
    if (name == "catalysis") return catalysis_net();
    throw semantic_error("unknown example net '" + std::string(name) + "'");
}

}  // namespace dialnet
