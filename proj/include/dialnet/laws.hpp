#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dialnet/dialset.hpp"

namespace dialnet {

// Outcome of one law: how many instances were checked and, on failure, the
// first counterexample found.
struct LawResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    bool exhaustive = false;
    std::string counterexample;
};

struct LawOptions {
    std::uint64_t seed = 0x5eed2024;
    std::size_t lineale_cases = 1000;
    std::size_t category_cases = 500;
    std::size_t functor_cases = 200;
    std::size_t adjunction_cases = 200;
    std::size_t coherence_cases = 50;
    std::size_t universal_cases = 100;
    std::uint64_t value_bound = 10;
    // Weight bound for random objects over infinite carriers; small values make
    // non-empty hom-sets likely.
    std::uint64_t object_bound = 3;
    std::size_t max_size = 2;
    bool exhaustive = true;
    Limits limits;
};

// Order, monoid, compatibility, adjunction and hom-variance laws. Finite
// carriers are checked on every tuple; others on lineale_cases random tuples.
std::vector<LawResult> lineale_laws(const LinealeSpec& lineale, const LawOptions& options = {});

// Identity and associativity of composition.
std::vector<LawResult> category_laws(const LinealePtr& lineale, const LawOptions& options = {});

// tensor_mor and hom_mor preserve identities and composition and return valid morphisms.
std::vector<LawResult> functoriality_laws(const LinealePtr& lineale, const LawOptions& options = {});

// Hom(A (x) B, C) ~ Hom(A, [B, C]) against brute-force enumeration, plus naturality.
std::vector<LawResult> adjunction_laws(const LinealePtr& lineale, const LawOptions& options = {});

// Pentagon, triangle, inverses of the structural isomorphisms, symmetry laws.
std::vector<LawResult> coherence_laws(const LinealePtr& lineale, const LawOptions& options = {});

// Pairing into & and copairing out of + are the unique mediating morphisms.
std::vector<LawResult> universal_laws(const LinealePtr& lineale, const LawOptions& options = {});

std::vector<LawResult> all_laws(const LinealePtr& lineale, const LawOptions& options = {});

// ---- generators shared with the tests -----------------------------------------

// Sizes uniform in [min_size, max_size], weights from lineale.sample(bound).
DialObject random_object(const LinealePtr& lineale, std::mt19937_64& rng, std::size_t min_size,
                         std::size_t max_size, std::uint64_t bound);

// Every object with 1..max_rows rows, 1..max_columns columns over a finite carrier.
std::vector<DialObject> all_objects(const LinealePtr& lineale, std::size_t max_rows, std::size_t max_columns);

std::string describe(const DialObject& object);
std::string describe(const DialMorphism& morphism);

}  // namespace dialnet
