#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dialnet/dialset.hpp"

namespace dialnet {

// Places U, transitions X and two L-valued relations pre, post : U x X -> L.
// The default weight stands for "no arc" when the net is drawn or serialized.
class PetriNet {
  public:
    // Throws shape_mismatch unless pre and post share carriers and lineale.
    PetriNet(DialObject pre, DialObject post, LinealeValue default_weight);

    const LinealePtr& lineale() const noexcept { return pre_.lineale(); }
    const FinSet& places() const noexcept { return pre_.rows(); }
    const FinSet& transitions() const noexcept { return pre_.columns(); }
    const DialObject& pre() const noexcept { return pre_; }
    const DialObject& post() const noexcept { return post_; }
    const LinealeValue& default_weight() const noexcept { return default_weight_; }

    // Carrier sizes and labels, lineale, default weight and both relations.
    friend bool operator==(const PetriNet& a, const PetriNet& b);

  private:
    DialObject pre_;
    DialObject post_;
    LinealeValue default_weight_;
};

enum class NetSide { pre, post };
std::string_view to_string(NetSide side);

struct NetViolation {
    NetSide side;
    Violation point;
    friend bool operator==(const NetViolation&, const NetViolation&) = default;
};

// All pre violations, then all post violations. Empty means (f, F) is a net morphism.
std::vector<NetViolation> check_net_morphism(const PetriNet& source, const PetriNet& target, const FnTable& forward,
                                             const FnTable& backward);

// (f, F) valid on both the pre and the post relations. f maps places
// forward; F maps target transitions back to source transitions.
class NetMorphism {
  public:
    // Throws invalid_net_morphism when either side fails.
    static NetMorphism make(PetriNet source, PetriNet target, FnTable forward, FnTable backward);

    const PetriNet& source() const noexcept { return source_; }
    const PetriNet& target() const noexcept { return target_; }
    const FnTable& forward() const noexcept { return forward_; }
    const FnTable& backward() const noexcept { return backward_; }

    DialMorphism on_pre() const;
    DialMorphism on_post() const;

    friend bool operator==(const NetMorphism&, const NetMorphism&);

  private:
    NetMorphism(PetriNet source, PetriNet target, FnTable forward, FnTable backward);
    PetriNet source_;
    PetriNet target_;
    FnTable forward_;
    FnTable backward_;
};

class invalid_net_morphism : public semantic_error {
  public:
    explicit invalid_net_morphism(std::vector<NetViolation> violations);
    const std::vector<NetViolation>& violations() const noexcept { return violations_; }

  private:
    std::vector<NetViolation> violations_;
};

NetMorphism identity(const PetriNet& net);
NetMorphism compose(const NetMorphism& m2, const NetMorphism& m1);

// Componentwise connectives. Default weights combine as d1 (x) d2 for the
// tensor and d1 -o d2 for the hom; & and + keep the left default.
PetriNet net_tensor(const PetriNet& a, const PetriNet& b, const Limits& limits = {});
PetriNet net_with(const PetriNet& a, const PetriNet& b, const Limits& limits = {});
PetriNet net_oplus(const PetriNet& a, const PetriNet& b, const Limits& limits = {});
PetriNet net_hom(const PetriNet& a, const PetriNet& b, const Limits& limits = {});

// ---- example nets ------------------------------------------------------------

// Sparse arc list used to build nets by label.
struct Arc {
    std::string place;
    std::string transition;
    LinealeValue weight;
};

// Throws semantic_error on unknown labels or repeated arcs.
PetriNet build_net(const LinealePtr& lineale, std::vector<std::string> places, std::vector<std::string> transitions,
                   const std::vector<Arc>& pre, const std::vector<Arc>& post, const LinealeValue& default_weight);

// Contact, infection and recovery probabilities; the defaults are demo values.
struct SirParameters {
    UnitFraction contact = UnitFraction::make(1, 2);
    UnitFraction infection = UnitFraction::make(1, 2);
    UnitFraction recovery = UnitFraction::make(1, 2);
};

// Rates r1..r5 of the catalysis net; the defaults k/10 are placeholders.
struct CatalysisRates {
    std::array<UnitFraction, 5> rates = {UnitFraction::make(1, 10), UnitFraction::make(2, 10),
                                         UnitFraction::make(3, 10), UnitFraction::make(4, 10),
                                         UnitFraction::make(5, 10)};
};

// 2 H2 + O2 -> 2 H2O over nat.
PetriNet water_net();
// S1 + S2 -> S3 over int with inhibitor I at weight -3.
PetriNet inhibitor_net();
// Susceptible / infectious / recovered over prob.
PetriNet sir_net(const SirParameters& params = {});
// KaiABC phosphorylation cycle over kleene3, two arcs at the unknown weight 0.
PetriNet circadian_net();
// S1 + S2 -> S3 with inhibitor I and catalyst C over prod(prob,int).
PetriNet catalysis_net(const CatalysisRates& rates = {});

const std::vector<std::string>& example_names();
// water, sir, circadian, inhibitor, catalysis; throws semantic_error otherwise.
PetriNet build_example(std::string_view name);

// The water net with pre(H2, t) set to the given stoichiometry.
PetriNet water_variant(std::uint64_t hydrogen_weight);
// The water net with an extra place "Pt" that takes no part in the reaction.
PetriNet water_with_extra_place();

}  // namespace dialnet
