#include "dialnet/dialset.hpp"

#include <sstream>

namespace dialnet {

namespace {

void require_same_lineale(const DialObject& a, const DialObject& b, const char* what) {
    if (a.lineale()->name() != b.lineale()->name())
        throw tag_mismatch(std::string(what) + ": objects over lineales " + a.lineale()->name() + " and " +
                           b.lineale()->name());
}

void require_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want)
        throw shape_mismatch(std::string(what) + ": expected size " + std::to_string(want) + ", got " +
                             std::to_string(got));
}

bool lax_holds(const DialObject& a, const DialObject& b, std::span<const std::size_t> f,
               std::span<const std::size_t> big_f) {
    const auto& lineale = *a.lineale();
    for (std::size_t u = 0; u < f.size(); ++u)
        for (std::size_t y = 0; y < big_f.size(); ++y)
            if (!lineale.leq(a.weight(u, big_f[y]), b.weight(f[u], y))) return false;
    return true;
}

std::string describe(const std::vector<Violation>& vs) {
    std::ostringstream out;
    out << "morphism condition fails at " << vs.size() << " point(s)";
    for (const auto& v : vs)
        out << "; (" << v.row << "," << v.column << "): " << format_value(v.source_weight) << " not below "
            << format_value(v.target_weight);
    return out.str();
}

// Column layout of A (x) B: X^V x Y^U.
struct TensorColumns {
    Exponential xv;
    Exponential yu;
    TensorColumns(const DialObject& a, const DialObject& b, const Limits& limits)
        : xv(b.rows(), a.columns(), limits), yu(a.rows(), b.columns(), limits) {}
    std::size_t index(std::size_t i, std::size_t j) const { return pair_index(i, j, yu.size()); }
    std::pair<std::size_t, std::size_t> split(std::size_t k) const { return split_pair(k, yu.size()); }
};

// Row layout of [A, B]: V^U x X^Y.
struct HomRows {
    Exponential vu;
    Exponential xy;
    HomRows(const DialObject& a, const DialObject& b, const Limits& limits)
        : vu(a.rows(), b.rows(), limits), xy(b.columns(), a.columns(), limits) {}
    std::size_t index(std::size_t i, std::size_t j) const { return pair_index(i, j, xy.size()); }
    std::pair<std::size_t, std::size_t> split(std::size_t k) const { return split_pair(k, xy.size()); }
};

FnTable identity_on_sizes(const FinSet& dom, const FinSet& cod) {
    require_size(cod.size(), dom.size(), "identity_on_sizes");
    std::vector<std::size_t> t(dom.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return FnTable(dom, cod, std::move(t));
}

}  // namespace

// ---- objects and morphisms -------------------------------------------------

DialObject::DialObject(LinealePtr lineale, FinSet rows, FinSet columns, std::vector<LinealeValue> weights)
    : lineale_(std::move(lineale)), rows_(std::move(rows)), columns_(std::move(columns)) {
    if (!lineale_) throw semantic_error("DialObject needs a lineale");
    if (weights.size() != rows_.size() * columns_.size())
        throw shape_mismatch("weight matrix has " + std::to_string(weights.size()) + " entries, expected " +
                             std::to_string(rows_.size()) + "x" + std::to_string(columns_.size()));
    for (const auto& w : weights) lineale_->require(w);
    weights_ = std::make_shared<const std::vector<LinealeValue>>(std::move(weights));
}

DialObject::DialObject(LinealePtr lineale, FinSet rows, FinSet columns, const Generator& weight)
    : lineale_(std::move(lineale)), rows_(std::move(rows)), columns_(std::move(columns)) {
    if (!lineale_) throw semantic_error("DialObject needs a lineale");
    std::vector<LinealeValue> w;
    w.reserve(rows_.size() * columns_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            w.push_back(weight(r, c));
            lineale_->require(w.back());
        }
    weights_ = std::make_shared<const std::vector<LinealeValue>>(std::move(w));
}

DialObject DialObject::uniform(LinealePtr lineale, FinSet rows, FinSet columns, const LinealeValue& value) {
    std::vector<LinealeValue> w(rows.size() * columns.size(), value);
    return DialObject(std::move(lineale), std::move(rows), std::move(columns), std::move(w));
}

bool operator==(const DialObject& a, const DialObject& b) {
    if (a.rows_.size() != b.rows_.size() || a.columns_.size() != b.columns_.size()) return false;
    if (a.lineale_ != b.lineale_ && a.lineale_->name() != b.lineale_->name()) return false;
    return a.weights_ == b.weights_ || *a.weights_ == *b.weights_;
}

std::vector<Violation> check_morphism(const DialObject& source, const DialObject& target, const FnTable& forward,
                                      const FnTable& backward) {
    require_same_lineale(source, target, "check_morphism");
    require_size(forward.dom().size(), source.rows().size(), "check_morphism forward domain");
    require_size(forward.cod().size(), target.rows().size(), "check_morphism forward codomain");
    require_size(backward.dom().size(), target.columns().size(), "check_morphism backward domain");
    require_size(backward.cod().size(), source.columns().size(), "check_morphism backward codomain");
    const auto& lineale = *source.lineale();
    std::vector<Violation> out;
    for (std::size_t u = 0; u < source.rows().size(); ++u)
        for (std::size_t y = 0; y < target.columns().size(); ++y) {
            const auto& a = source.weight(u, backward(y));
            const auto& b = target.weight(forward(u), y);
            if (!lineale.leq(a, b)) out.push_back(Violation{u, y, a, b});
        }
    return out;
}

std::vector<Violation> check_morphism(const DialMorphism& m) {
    return check_morphism(m.source(), m.target(), m.forward(), m.backward());
}

invalid_morphism::invalid_morphism(std::vector<Violation> violations)
    : semantic_error(describe(violations)), violations_(std::move(violations)) {}

DialMorphism::DialMorphism(DialObject source, DialObject target, FnTable forward, FnTable backward)
    : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)), backward_(std::move(backward)) {}

DialMorphism DialMorphism::make(DialObject source, DialObject target, FnTable forward, FnTable backward) {
    auto vs = check_morphism(source, target, forward, backward);
    if (!vs.empty()) throw invalid_morphism(std::move(vs));
    return DialMorphism(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

DialMorphism DialMorphism::trusted(DialObject source, DialObject target, FnTable forward, FnTable backward) {
    require_same_lineale(source, target, "DialMorphism");
    require_size(forward.dom().size(), source.rows().size(), "DialMorphism forward domain");
    require_size(forward.cod().size(), target.rows().size(), "DialMorphism forward codomain");
    require_size(backward.dom().size(), target.columns().size(), "DialMorphism backward domain");
    require_size(backward.cod().size(), source.columns().size(), "DialMorphism backward codomain");
    return DialMorphism(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

bool operator==(const DialMorphism& a, const DialMorphism& b) {
    return a.forward_ == b.forward_ && a.backward_ == b.backward_ && a.source_ == b.source_ && a.target_ == b.target_;
}

DialMorphism identity(const DialObject& a) {
    return DialMorphism::trusted(a, a, FnTable::identity(a.rows()), FnTable::identity(a.columns()));
}

DialMorphism compose(const DialMorphism& m2, const DialMorphism& m1) {
    if (!(m1.target() == m2.source())) throw shape_mismatch("compose: target of the first morphism is not the source of the second");
    return DialMorphism::trusted(m1.source(), m2.target(), compose_fn(m2.forward(), m1.forward()),
                                 compose_fn(m1.backward(), m2.backward()));
}

DialObject unit_object(const LinealePtr& lineale) {
    return DialObject::uniform(lineale, singleton_set(), singleton_set(), lineale->unit());
}

// ---- products and coproducts -----------------------------------------------

DialObject with_product(const DialObject& a, const DialObject& b, const Limits& limits) {
    require_same_lineale(a, b, "with_product");
    auto rows = product_set(a.rows(), b.rows(), limits);
    auto columns = coproduct_set(a.columns(), b.columns(), limits);
    const auto nv = b.rows().size();
    const auto nx = a.columns().size();
    return DialObject(a.lineale(), std::move(rows), std::move(columns), [&](std::size_t r, std::size_t c) {
        auto [u, v] = split_pair(r, nv);
        return c < nx ? a.weight(u, c) : b.weight(v, c - nx);
    });
}

DialMorphism project_first(const DialObject& a, const DialObject& b, const Limits& limits) {
    auto ab = with_product(a, b, limits);
    return DialMorphism::trusted(ab, a, project_first(a.rows(), b.rows(), limits),
                                 inject_left(a.columns(), b.columns(), limits));
}

DialMorphism project_second(const DialObject& a, const DialObject& b, const Limits& limits) {
    auto ab = with_product(a, b, limits);
    return DialMorphism::trusted(ab, b, project_second(a.rows(), b.rows(), limits),
                                 inject_right(a.columns(), b.columns(), limits));
}

DialMorphism pairing(const DialMorphism& m1, const DialMorphism& m2, const Limits& limits) {
    if (!(m1.source() == m2.source())) throw shape_mismatch("pairing: morphisms have different sources");
    auto target = with_product(m1.target(), m2.target(), limits);
    return DialMorphism::trusted(m1.source(), std::move(target), pairing_fn(m1.forward(), m2.forward(), limits),
                                 copairing_fn(m1.backward(), m2.backward(), limits));
}

DialObject oplus(const DialObject& a, const DialObject& b, const Limits& limits) {
    require_same_lineale(a, b, "oplus");
    auto rows = coproduct_set(a.rows(), b.rows(), limits);
    auto columns = product_set(a.columns(), b.columns(), limits);
    const auto nu = a.rows().size();
    const auto ny = b.columns().size();
    return DialObject(a.lineale(), std::move(rows), std::move(columns), [&](std::size_t r, std::size_t c) {
        auto [x, y] = split_pair(c, ny);
        return r < nu ? a.weight(r, x) : b.weight(r - nu, y);
    });
}

DialMorphism inject_left(const DialObject& a, const DialObject& b, const Limits& limits) {
    auto ab = oplus(a, b, limits);
    return DialMorphism::trusted(a, ab, inject_left(a.rows(), b.rows(), limits),
                                 project_first(a.columns(), b.columns(), limits));
}

DialMorphism inject_right(const DialObject& a, const DialObject& b, const Limits& limits) {
    auto ab = oplus(a, b, limits);
    return DialMorphism::trusted(b, ab, inject_right(a.rows(), b.rows(), limits),
                                 project_second(a.columns(), b.columns(), limits));
}

DialMorphism copairing(const DialMorphism& m1, const DialMorphism& m2, const Limits& limits) {
    if (!(m1.target() == m2.target())) throw shape_mismatch("copairing: morphisms have different targets");
    auto source = oplus(m1.source(), m2.source(), limits);
    return DialMorphism::trusted(std::move(source), m1.target(), copairing_fn(m1.forward(), m2.forward(), limits),
                                 pairing_fn(m1.backward(), m2.backward(), limits));
}

// ---- tensor ----------------------------------------------------------------

DialObject tensor_obj(const DialObject& a, const DialObject& b, const Limits& limits) {
    require_same_lineale(a, b, "tensor_obj");
    TensorColumns layout(a, b, limits);
    auto rows = product_set(a.rows(), b.rows(), limits);
    auto columns = product_set(layout.xv.as_set(), layout.yu.as_set(), limits);
    const auto& lineale = *a.lineale();
    const auto nv = b.rows().size();
    return DialObject(a.lineale(), std::move(rows), std::move(columns), [&](std::size_t r, std::size_t c) {
        auto [u, v] = split_pair(r, nv);
        auto [i, j] = layout.split(c);
        return lineale.tensor(a.weight(u, layout.xv.eval(i, v)), b.weight(v, layout.yu.eval(j, u)));
    });
}

DialMorphism tensor_mor(const DialMorphism& m1, const DialMorphism& m2, const Limits& limits) {
    const auto& a = m1.source();
    const auto& a2 = m1.target();
    const auto& b = m2.source();
    const auto& b2 = m2.target();
    auto source = tensor_obj(a, b, limits);
    auto target = tensor_obj(a2, b2, limits);
    TensorColumns from(a, b, limits);
    TensorColumns to(a2, b2, limits);

    const auto& f = m1.forward();
    const auto& big_f = m1.backward();
    const auto& g = m2.forward();
    const auto& big_g = m2.backward();

    std::vector<std::size_t> back(target.columns().size());
    std::vector<std::size_t> fv(b.rows().size());
    std::vector<std::size_t> gu(a.rows().size());
    for (std::size_t k = 0; k < back.size(); ++k) {
        auto [i2, j2] = to.split(k);
        for (std::size_t v = 0; v < fv.size(); ++v) fv[v] = big_f(to.xv.eval(i2, g(v)));
        for (std::size_t u = 0; u < gu.size(); ++u) gu[u] = big_g(to.yu.eval(j2, f(u)));
        back[k] = from.index(from.xv.encode(fv), from.yu.encode(gu));
    }
    FnTable backward(target.columns(), source.columns(), std::move(back));
    return DialMorphism::trusted(std::move(source), std::move(target), product_fn(f, g, limits), std::move(backward));
}

// ---- internal hom ----------------------------------------------------------

DialObject hom_obj(const DialObject& a, const DialObject& b, const Limits& limits) {
    require_same_lineale(a, b, "hom_obj");
    HomRows layout(a, b, limits);
    auto rows = product_set(layout.vu.as_set(), layout.xy.as_set(), limits);
    auto columns = product_set(a.rows(), b.columns(), limits);
    const auto& lineale = *a.lineale();
    const auto ny = b.columns().size();
    return DialObject(a.lineale(), std::move(rows), std::move(columns), [&](std::size_t r, std::size_t c) {
        auto [i, j] = layout.split(r);
        auto [u, y] = split_pair(c, ny);
        return lineale.imp(a.weight(u, layout.xy.eval(j, y)), b.weight(layout.vu.eval(i, u), y));
    });
}

DialMorphism hom_mor(const DialMorphism& m_in, const DialMorphism& m_out, const Limits& limits) {
    const auto& a2 = m_in.source();  // A'
    const auto& a = m_in.target();   // A
    const auto& b = m_out.source();  // B
    const auto& b2 = m_out.target(); // B'
    auto source = hom_obj(a, b, limits);
    auto target = hom_obj(a2, b2, limits);
    HomRows from(a, b, limits);
    HomRows to(a2, b2, limits);

    const auto& f = m_in.forward();
    const auto& big_f = m_in.backward();
    const auto& g = m_out.forward();
    const auto& big_g = m_out.backward();

    std::vector<std::size_t> fwd(source.rows().size());
    std::vector<std::size_t> h2(a2.rows().size());
    std::vector<std::size_t> big_h2(b2.columns().size());
    for (std::size_t r = 0; r < fwd.size(); ++r) {
        auto [i, j] = from.split(r);
        for (std::size_t u = 0; u < h2.size(); ++u) h2[u] = g(from.vu.eval(i, f(u)));
        for (std::size_t y = 0; y < big_h2.size(); ++y) big_h2[y] = big_f(from.xy.eval(j, big_g(y)));
        fwd[r] = to.index(to.vu.encode(h2), to.xy.encode(big_h2));
    }
    FnTable forward(source.rows(), target.rows(), std::move(fwd));
    auto product = product_fn(f, big_g, limits);
    FnTable backward(target.columns(), source.columns(),
                     std::vector<std::size_t>(product.table().begin(), product.table().end()));
    return DialMorphism::trusted(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

// ---- closed structure ------------------------------------------------------

DialMorphism curry_dial(const DialObject& a, const DialObject& b, const DialMorphism& m, const Limits& limits) {
    auto ab = tensor_obj(a, b, limits);
    if (!(m.source() == ab)) throw shape_mismatch("curry_dial: morphism source is not A (x) B");
    const auto& c = m.target();
    auto target = hom_obj(b, c, limits);
    TensorColumns tensor_layout(a, b, limits);
    HomRows hom_layout(b, c, limits);  // W^V x Y^Z

    const auto nu = a.rows().size();
    const auto nv = b.rows().size();
    const auto nz = c.columns().size();
    const auto& f = m.forward();
    const auto& big_f = m.backward();

    std::vector<std::size_t> fwd(nu);
    std::vector<std::size_t> wv(nv);
    std::vector<std::size_t> yz(nz);
    for (std::size_t u = 0; u < nu; ++u) {
        for (std::size_t v = 0; v < nv; ++v) wv[v] = f(pair_index(u, v, nv));
        for (std::size_t z = 0; z < nz; ++z) yz[z] = tensor_layout.yu.eval(tensor_layout.split(big_f(z)).second, u);
        fwd[u] = hom_layout.index(hom_layout.vu.encode(wv), hom_layout.xy.encode(yz));
    }
    std::vector<std::size_t> back(nv * nz);
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t z = 0; z < nz; ++z)
            back[pair_index(v, z, nz)] = tensor_layout.xv.eval(tensor_layout.split(big_f(z)).first, v);

    FnTable forward(a.rows(), target.rows(), std::move(fwd));
    FnTable backward(target.columns(), a.columns(), std::move(back));
    return DialMorphism::trusted(a, std::move(target), std::move(forward), std::move(backward));
}

DialMorphism uncurry_dial(const DialObject& a, const DialObject& b, const DialObject& c, const DialMorphism& m,
                          const Limits& limits) {
    auto bc = hom_obj(b, c, limits);
    if (!(m.source() == a) || !(m.target() == bc)) throw shape_mismatch("uncurry_dial: morphism is not A -> [B, C]");
    auto source = tensor_obj(a, b, limits);
    TensorColumns tensor_layout(a, b, limits);
    HomRows hom_layout(b, c, limits);

    const auto nu = a.rows().size();
    const auto nv = b.rows().size();
    const auto nz = c.columns().size();
    const auto& g = m.forward();
    const auto& big_g = m.backward();

    std::vector<std::size_t> fwd(nu * nv);
    for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t v = 0; v < nv; ++v) fwd[pair_index(u, v, nv)] = hom_layout.vu.eval(hom_layout.split(g(u)).first, v);

    std::vector<std::size_t> back(nz);
    std::vector<std::size_t> xv(nv);
    std::vector<std::size_t> yu(nu);
    for (std::size_t z = 0; z < nz; ++z) {
        for (std::size_t v = 0; v < nv; ++v) xv[v] = big_g(pair_index(v, z, nz));
        for (std::size_t u = 0; u < nu; ++u) yu[u] = hom_layout.xy.eval(hom_layout.split(g(u)).second, z);
        back[z] = tensor_layout.index(tensor_layout.xv.encode(xv), tensor_layout.yu.encode(yu));
    }
    FnTable forward(source.rows(), c.rows(), std::move(fwd));
    FnTable backward(c.columns(), source.columns(), std::move(back));
    return DialMorphism::trusted(std::move(source), c, std::move(forward), std::move(backward));
}

// ---- coherence isomorphisms ------------------------------------------------

namespace {

// Column bookkeeping shared by the associator and its inverse.
//   left  = ((A (x) B) (x) C).columns = P^W x Z^(U x V),  P = X^V x Y^U
//   right = (A (x) (B (x) C)).columns = X^(V x W) x Q^U,  Q = Y^W x Z^V
struct AssociatorLayout {
    DialObject ab;
    DialObject bc;
    TensorColumns p;   // X^V, Y^U
    TensorColumns q;   // Y^W, Z^V
    TensorColumns left;   // P^W, Z^(U x V)
    TensorColumns right;  // X^(V x W), Q^U
    std::size_t nu, nv, nw;

    AssociatorLayout(const DialObject& a, const DialObject& b, const DialObject& c, const Limits& limits)
        : ab(tensor_obj(a, b, limits)),
          bc(tensor_obj(b, c, limits)),
          p(a, b, limits),
          q(b, c, limits),
          left(ab, c, limits),
          right(a, bc, limits),
          nu(a.rows().size()),
          nv(b.rows().size()),
          nw(c.rows().size()) {}

    // right column -> left column
    std::size_t to_left(std::size_t k) const {
        auto [fx, kq] = right.split(k);  // fx : V x W -> X, kq : U -> Q
        std::vector<std::size_t> pw(nw), xv(nv), yu(nu), zuv(nu * nv);
        for (std::size_t w = 0; w < nw; ++w) {
            for (std::size_t v = 0; v < nv; ++v) xv[v] = right.xv.eval(fx, pair_index(v, w, nw));
            for (std::size_t u = 0; u < nu; ++u) yu[u] = q.xv.eval(q.split(right.yu.eval(kq, u)).first, w);
            pw[w] = p.index(p.xv.encode(xv), p.yu.encode(yu));
        }
        for (std::size_t u = 0; u < nu; ++u)
            for (std::size_t v = 0; v < nv; ++v)
                zuv[pair_index(u, v, nv)] = q.yu.eval(q.split(right.yu.eval(kq, u)).second, v);
        return left.index(left.xv.encode(pw), left.yu.encode(zuv));
    }

    // left column -> right column
    std::size_t to_right(std::size_t k) const {
        auto [pw, zuv] = left.split(k);  // pw : W -> P, zuv : U x V -> Z
        std::vector<std::size_t> fx(nv * nw), kq(nu), yw(nw), zv(nv);
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t w = 0; w < nw; ++w)
                fx[pair_index(v, w, nw)] = p.xv.eval(p.split(left.xv.eval(pw, w)).first, v);
        for (std::size_t u = 0; u < nu; ++u) {
            for (std::size_t w = 0; w < nw; ++w) yw[w] = p.yu.eval(p.split(left.xv.eval(pw, w)).second, u);
            for (std::size_t v = 0; v < nv; ++v) zv[v] = left.yu.eval(zuv, pair_index(u, v, nv));
            kq[u] = q.index(q.xv.encode(yw), q.yu.encode(zv));
        }
        return right.index(right.xv.encode(fx), right.yu.encode(kq));
    }
};

}  // namespace

DialMorphism associator(const DialObject& a, const DialObject& b, const DialObject& c, const Limits& limits) {
    AssociatorLayout layout(a, b, c, limits);
    auto source = tensor_obj(layout.ab, c, limits);
    auto target = tensor_obj(a, layout.bc, limits);
    // ((u,v),w) and (u,(v,w)) share the same row-major index.
    auto forward = identity_on_sizes(source.rows(), target.rows());
    std::vector<std::size_t> back(target.columns().size());
    for (std::size_t k = 0; k < back.size(); ++k) back[k] = layout.to_left(k);
    FnTable backward(target.columns(), source.columns(), std::move(back));
    return DialMorphism::trusted(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

DialMorphism associator_inverse(const DialObject& a, const DialObject& b, const DialObject& c, const Limits& limits) {
    AssociatorLayout layout(a, b, c, limits);
    auto source = tensor_obj(a, layout.bc, limits);
    auto target = tensor_obj(layout.ab, c, limits);
    auto forward = identity_on_sizes(source.rows(), target.rows());
    std::vector<std::size_t> back(target.columns().size());
    for (std::size_t k = 0; k < back.size(); ++k) back[k] = layout.to_right(k);
    FnTable backward(target.columns(), source.columns(), std::move(back));
    return DialMorphism::trusted(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

DialMorphism left_unitor(const DialObject& a, const Limits& limits) {
    auto unit = unit_object(a.lineale());
    auto source = tensor_obj(unit, a, limits);
    TensorColumns layout(unit, a, limits);  // X^1 x 1^U
    // Rows 1 x U index as u.
    auto forward = identity_on_sizes(source.rows(), a.rows());
    std::vector<std::size_t> back(a.columns().size());
    std::vector<std::size_t> one_u(a.rows().size(), 0);
    for (std::size_t x = 0; x < back.size(); ++x) {
        std::size_t xs[] = {x};
        back[x] = layout.index(layout.xv.encode(one_u), layout.yu.encode(xs));
    }
    FnTable backward(a.columns(), source.columns(), std::move(back));
    return DialMorphism::trusted(std::move(source), a, std::move(forward), std::move(backward));
}

DialMorphism left_unitor_inverse(const DialObject& a, const Limits& limits) {
    auto unit = unit_object(a.lineale());
    auto target = tensor_obj(unit, a, limits);
    TensorColumns layout(unit, a, limits);
    auto forward = identity_on_sizes(a.rows(), target.rows());
    std::vector<std::size_t> back(target.columns().size());
    for (std::size_t k = 0; k < back.size(); ++k) back[k] = layout.yu.eval(layout.split(k).second, 0);
    FnTable backward(target.columns(), a.columns(), std::move(back));
    return DialMorphism::trusted(a, std::move(target), std::move(forward), std::move(backward));
}

DialMorphism right_unitor(const DialObject& a, const Limits& limits) {
    auto unit = unit_object(a.lineale());
    auto source = tensor_obj(a, unit, limits);
    TensorColumns layout(a, unit, limits);  // X^1 x 1^U
    auto forward = identity_on_sizes(source.rows(), a.rows());
    std::vector<std::size_t> back(a.columns().size());
    std::vector<std::size_t> one_u(a.rows().size(), 0);
    for (std::size_t x = 0; x < back.size(); ++x) {
        std::size_t xs[] = {x};
        back[x] = layout.index(layout.xv.encode(xs), layout.yu.encode(one_u));
    }
    FnTable backward(a.columns(), source.columns(), std::move(back));
    return DialMorphism::trusted(std::move(source), a, std::move(forward), std::move(backward));
}

DialMorphism right_unitor_inverse(const DialObject& a, const Limits& limits) {
    auto unit = unit_object(a.lineale());
    auto target = tensor_obj(a, unit, limits);
    TensorColumns layout(a, unit, limits);
    auto forward = identity_on_sizes(a.rows(), target.rows());
    std::vector<std::size_t> back(target.columns().size());
    for (std::size_t k = 0; k < back.size(); ++k) back[k] = layout.xv.eval(layout.split(k).first, 0);
    FnTable backward(target.columns(), a.columns(), std::move(back));
    return DialMorphism::trusted(a, std::move(target), std::move(forward), std::move(backward));
}

DialMorphism symmetry(const DialObject& a, const DialObject& b, const Limits& limits) {
    auto source = tensor_obj(a, b, limits);
    auto target = tensor_obj(b, a, limits);
    TensorColumns ab(a, b, limits);
    TensorColumns ba(b, a, limits);
    std::vector<std::size_t> back(target.columns().size());
    for (std::size_t k = 0; k < back.size(); ++k) {
        auto [j, i] = ba.split(k);  // (Y^U, X^V)
        back[k] = ab.index(i, j);
    }
    FnTable backward(target.columns(), source.columns(), std::move(back));
    auto swapped = swap_fn(a.rows(), b.rows(), limits);
    FnTable forward(source.rows(), target.rows(),
                    std::vector<std::size_t>(swapped.table().begin(), swapped.table().end()));
    return DialMorphism::trusted(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

// ---- brute-force enumeration -----------------------------------------------

std::vector<DialMorphism> enumerate_morphisms(const DialObject& a, const DialObject& b, const Limits& limits) {
    require_same_lineale(a, b, "enumerate_morphisms");
    const auto nf = exponential_size(a.rows().size(), b.rows().size(), limits);
    const auto nbig = exponential_size(b.columns().size(), a.columns().size(), limits);
    std::size_t total;
    if (__builtin_mul_overflow(nf, nbig, &total)) throw cap_exceeded("enumerate_morphisms", SIZE_MAX, limits.cap);
    if (total > limits.cap) throw cap_exceeded("enumerate_morphisms", total, limits.cap);

    auto forwards = exponential(a.rows(), b.rows(), limits);
    auto backwards = exponential(b.columns(), a.columns(), limits);
    std::vector<DialMorphism> out;
    for (const auto& f : forwards)
        for (const auto& big_f : backwards)
            if (lax_holds(a, b, f.table(), big_f.table())) out.push_back(DialMorphism::trusted(a, b, f, big_f));
    return out;
}

}  // namespace dialnet
