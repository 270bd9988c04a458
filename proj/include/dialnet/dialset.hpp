#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "dialnet/error.hpp"
#include "dialnet/finset.hpp"
#include "dialnet/lineale.hpp"

namespace dialnet {

// An L-valued relation: a |rows| x |columns| matrix of lineale values.
// Rows are the U carrier (places, for nets); columns are the X carrier.
class DialObject {
  public:
    using Generator = std::function<LinealeValue(std::size_t row, std::size_t column)>;

    // Throws shape_mismatch on a wrong-sized matrix, tag_mismatch on foreign values.
    DialObject(LinealePtr lineale, FinSet rows, FinSet columns, std::vector<LinealeValue> weights);
    DialObject(LinealePtr lineale, FinSet rows, FinSet columns, const Generator& weight);
    static DialObject uniform(LinealePtr lineale, FinSet rows, FinSet columns, const LinealeValue& value);

    const LinealePtr& lineale() const noexcept { return lineale_; }
    const FinSet& rows() const noexcept { return rows_; }
    const FinSet& columns() const noexcept { return columns_; }
    const LinealeValue& weight(std::size_t row, std::size_t column) const {
        return (*weights_)[row * columns_.size() + column];
    }
    std::span<const LinealeValue> weights() const noexcept { return *weights_; }

    // Carrier sizes, lineale name and every weight; labels are ignored.
    friend bool operator==(const DialObject& a, const DialObject& b);

  private:
    LinealePtr lineale_;
    FinSet rows_;
    FinSet columns_;
    std::shared_ptr<const std::vector<LinealeValue>> weights_;
};

// A point (u, y) where alpha(u, F y) is not below beta(f u, y).
struct Violation {
    std::size_t row;     // u in the source rows
    std::size_t column;  // y in the target columns
    LinealeValue source_weight;
    LinealeValue target_weight;
    friend bool operator==(const Violation&, const Violation&) = default;
};

// Every failing point of the lax square, in (u, y) order. Empty means valid.
// Throws shape_mismatch when f: U -> V or F: Y -> X do not fit, tag_mismatch
// when the lineales differ.
std::vector<Violation> check_morphism(const DialObject& source, const DialObject& target, const FnTable& forward,
                                      const FnTable& backward);

// (f, F) : (U, X, alpha) -> (V, Y, beta) with f: U -> V forward and F: Y -> X backward.
class DialMorphism {
  public:
    // Throws invalid_morphism listing the violations when the square fails.
    static DialMorphism make(DialObject source, DialObject target, FnTable forward, FnTable backward);
    // Skips the lax check; for constructors whose validity is established by construction.
    static DialMorphism trusted(DialObject source, DialObject target, FnTable forward, FnTable backward);

    const DialObject& source() const noexcept { return source_; }
    const DialObject& target() const noexcept { return target_; }
    const FnTable& forward() const noexcept { return forward_; }
    const FnTable& backward() const noexcept { return backward_; }

    friend bool operator==(const DialMorphism& a, const DialMorphism& b);

  private:
    DialMorphism(DialObject source, DialObject target, FnTable forward, FnTable backward);
    DialObject source_;
    DialObject target_;
    FnTable forward_;
    FnTable backward_;
};

class invalid_morphism : public semantic_error {
  public:
    explicit invalid_morphism(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

  private:
    std::vector<Violation> violations_;
};

std::vector<Violation> check_morphism(const DialMorphism& m);

DialMorphism identity(const DialObject& a);
// (g, G) after (f, F) = (g f, F G). Throws shape_mismatch unless m1.target == m2.source.
DialMorphism compose(const DialMorphism& m2, const DialMorphism& m1);

// I = (1, 1, e)
DialObject unit_object(const LinealePtr& lineale);

// A & B = (U x V, X + Y): weight alpha(u, x) on left columns, beta(v, y) on right ones.
DialObject with_product(const DialObject& a, const DialObject& b, const Limits& limits = {});
DialMorphism project_first(const DialObject& a, const DialObject& b, const Limits& limits = {});
DialMorphism project_second(const DialObject& a, const DialObject& b, const Limits& limits = {});
// <m1, m2> : C -> A & B for m1 : C -> A, m2 : C -> B.
DialMorphism pairing(const DialMorphism& m1, const DialMorphism& m2, const Limits& limits = {});

// A + B = (U + V, X x Y): weight alpha(u, x) on left rows, beta(v, y) on right ones.
DialObject oplus(const DialObject& a, const DialObject& b, const Limits& limits = {});
DialMorphism inject_left(const DialObject& a, const DialObject& b, const Limits& limits = {});
DialMorphism inject_right(const DialObject& a, const DialObject& b, const Limits& limits = {});
// [m1, m2] : A + B -> C for m1 : A -> C, m2 : B -> C.
DialMorphism copairing(const DialMorphism& m1, const DialMorphism& m2, const Limits& limits = {});

// A (x) B = (U x V, X^V x Y^U), weight at ((u,v),(f,g)) = alpha(u, f v) (x) beta(v, g u).
DialObject tensor_obj(const DialObject& a, const DialObject& b, const Limits& limits = {});
// (f, F) (x) (g, G) = (f x g, (f', g') |-> (F f' g, G g' f)).
DialMorphism tensor_mor(const DialMorphism& m1, const DialMorphism& m2, const Limits& limits = {});

// [A, B] = (V^U x X^Y, U x Y), weight at ((f,F),(u,y)) = alpha(u, F y) -o beta(f u, y).
DialObject hom_obj(const DialObject& a, const DialObject& b, const Limits& limits = {});
// For (f, F) : A' -> A and (g, G) : B -> B', the map [A, B] -> [A', B']
// ((h, H) |-> (g h f, F H G), f x G).
DialMorphism hom_mor(const DialMorphism& m_in, const DialMorphism& m_out, const Limits& limits = {});

// Hom(A (x) B, C) -> Hom(A, [B, C]) and its inverse.
DialMorphism curry_dial(const DialObject& a, const DialObject& b, const DialMorphism& m, const Limits& limits = {});
DialMorphism uncurry_dial(const DialObject& a, const DialObject& b, const DialObject& c, const DialMorphism& m,
                          const Limits& limits = {});

// (A (x) B) (x) C -> A (x) (B (x) C) and back.
DialMorphism associator(const DialObject& a, const DialObject& b, const DialObject& c, const Limits& limits = {});
DialMorphism associator_inverse(const DialObject& a, const DialObject& b, const DialObject& c,
                                const Limits& limits = {});
// I (x) A -> A, A (x) I -> A and inverses.
DialMorphism left_unitor(const DialObject& a, const Limits& limits = {});
DialMorphism left_unitor_inverse(const DialObject& a, const Limits& limits = {});
DialMorphism right_unitor(const DialObject& a, const Limits& limits = {});
DialMorphism right_unitor_inverse(const DialObject& a, const Limits& limits = {});
// A (x) B -> B (x) A
DialMorphism symmetry(const DialObject& a, const DialObject& b, const Limits& limits = {});

// Every valid (f, F) : A -> B, ordered lexicographically by (f table, F table).
// Throws cap_exceeded when |V|^|U| * |X|^|Y| > limits.cap.
std::vector<DialMorphism> enumerate_morphisms(const DialObject& a, const DialObject& b, const Limits& limits = {});

}  // namespace dialnet
