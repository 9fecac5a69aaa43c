#include "df/chargroup.hpp"

#include "df/limits.hpp"

#include <sstream>

namespace df {

namespace {

Rat mod1(const Rat& q) {
    Int n = Int(boost::multiprecision::numerator(q));
    Int d = Int(boost::multiprecision::denominator(q));  // > 0
    Int r = n % d;
    if (r < 0) r += d;
    return Rat(r, d);
}

Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }
Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

}  // namespace

TorsionCharacter::TorsionCharacter(const FgAbGroup& parent, std::vector<Rat> values)
    : parent_(parent), v_(std::move(values)) {
    if (v_.size() != parent_.preimage_rank())
        throw input_error("TorsionCharacter: one value per preimage coordinate required");
    for (Rat& x : v_) x = mod1(x);
    for (std::size_t i = 0; i < parent_.torsion_count(); ++i) {
        Rat on_rel = parent_.torsion_factors()[i] * v_[parent_.free_rank() + i];
        if (rat_den(on_rel) != 1)
            throw input_error("TorsionCharacter: value not well defined on relations");
    }
}

TorsionCharacter TorsionCharacter::trivial(const FgAbGroup& parent) {
    return TorsionCharacter(parent, std::vector<Rat>(parent.preimage_rank(), Rat(0)));
}

bool TorsionCharacter::is_trivial() const {
    for (const Rat& x : v_)
        if (x != 0) return false;
    return true;
}

Int TorsionCharacter::order() const {
    Int o = 1;
    for (const Rat& x : v_) o = lcm_int(o, rat_den(x));
    return o;
}

Rat TorsionCharacter::evaluate(const std::vector<Int>& x) const {
    if (x.size() != v_.size()) throw input_error("TorsionCharacter::evaluate: wrong length");
    Rat s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * x[i];
    return mod1(s);
}

TorsionCharacter TorsionCharacter::operator+(const TorsionCharacter& o) const {
    if (parent_ != o.parent_) throw input_error("TorsionCharacter: parent mismatch");
    std::vector<Rat> v(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] + o.v_[i];
    return TorsionCharacter(parent_, std::move(v));
}

TorsionCharacter TorsionCharacter::operator-(const TorsionCharacter& o) const {
    return *this + (-o);
}

TorsionCharacter TorsionCharacter::operator-() const {
    std::vector<Rat> v(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) v[i] = -v_[i];
    return TorsionCharacter(parent_, std::move(v));
}

bool TorsionCharacter::operator<(const TorsionCharacter& o) const {
    return v_ < o.v_;
}

std::string TorsionCharacter::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ", ";
        os << v_[i];
    }
    os << ")";
    return os.str();
}

Subgroup character_kernel(const TorsionCharacter& eta) {
    const FgAbGroup& h = eta.parent();
    const std::size_t big_n = h.preimage_rank();
    Int q = eta.order();
    IntMatrix row(1, big_n + 1);
    for (std::size_t i = 0; i < big_n; ++i) {
        Rat scaled = eta.values()[i] * q;
        if (rat_den(scaled) != 1) throw internal_error("character_kernel: order mismatch");
        row.at(0, i) = rat_num(scaled);
    }
    row.at(0, big_n) = q;
    IntMatrix k = kernel_basis(row);  // (big_n + 1) x big_n
    IntMatrix xs(big_n, k.cols());
    for (std::size_t i = 0; i < big_n; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) xs.at(i, j) = k.at(i, j);
    return Subgroup(h, xs);
}

TorsionCharacter compose_character(const TorsionCharacter& eta, const Homomorphism& nu) {
    if (eta.parent() != nu.target()) throw input_error("compose_character: parent mismatch");
    const IntMatrix& m = nu.matrix();
    std::vector<Rat> v(nu.source().preimage_rank(), Rat(0));
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t i = 0; i < eta.values().size(); ++i)
            v[j] += eta.values()[i] * m.at(i, j);
    return TorsionCharacter(nu.source(), std::move(v));
}

Int order_on(const TorsionCharacter& eta, const Subgroup& xi) {
    if (eta.parent() != xi.parent()) throw input_error("order_on: parent mismatch");
    Int o = 1;
    const IntMatrix& g = xi.preimage().generators();
    for (std::size_t j = 0; j < g.cols(); ++j)
        o = lcm_int(o, rat_den(eta.evaluate(as_vector(g.col(j)))));
    return o;
}

TranslatedSubgroup::TranslatedSubgroup(Subgroup x, TorsionCharacter e)
    : xi(std::move(x)), eta(std::move(e)) {
    if (xi.parent() != eta.parent()) throw input_error("TranslatedSubgroup: parent mismatch");
}

long long TranslatedSubgroup::dim() const {
    return static_cast<long long>(xi.parent().free_rank()) - static_cast<long long>(xi.rank());
}

Int TranslatedSubgroup::component_count() const {
    return quotient_invariants(xi).torsion_order();
}

bool TranslatedSubgroup::operator<(const TranslatedSubgroup& o) const {
    if (xi != o.xi) return xi < o.xi;
    return eta < o.eta;
}

std::string TranslatedSubgroup::str() const {
    std::ostringstream os;
    os << eta.str() << " * V(" << xi.preimage().generators().str() << ")";
    return os.str();
}

TranslatedSubgroup v_of(const Subgroup& xi) {
    return TranslatedSubgroup(xi, TorsionCharacter::trivial(xi.parent()));
}

Subgroup epsilon_of_cyclic_extension(const Subgroup& chi, const TorsionCharacter& beta) {
    if (chi.parent() != beta.parent())
        throw input_error("epsilon_of_cyclic_extension: parent mismatch");
    return subgroup_intersection(chi, character_kernel(beta));
}

CosetMeet coset_intersection(const TranslatedSubgroup& c1, const TranslatedSubgroup& c2) {
    if (c1.xi.parent() != c2.xi.parent()) throw input_error("coset_intersection: parent mismatch");
    Subgroup meet = subgroup_intersection(c1.xi, c2.xi);
    TorsionCharacter diff = c1.eta - c2.eta;
    const IntMatrix& g = meet.preimage().generators();
    for (std::size_t j = 0; j < g.cols(); ++j)
        if (diff.evaluate(as_vector(g.col(j))) != 0) return {false, -1};
    Subgroup join = subgroup_sum(c1.xi, c2.xi);
    return {true, static_cast<long long>(c1.xi.parent().free_rank()) -
                      static_cast<long long>(join.rank())};
}

bool coset_containment(const TranslatedSubgroup& c1, const TranslatedSubgroup& c2) {
    if (c1.xi.parent() != c2.xi.parent()) throw input_error("coset_containment: parent mismatch");
    if (subgroup_saturation(c1.xi) != c1.xi || subgroup_saturation(c2.xi) != c2.xi)
        throw input_error("coset_containment: xi fields must be saturated");
    if (!c1.xi.contains(c2.xi)) return false;
    return coset_intersection(c1, c2).nonempty;
}

std::vector<TranslatedSubgroup> components_of(const TranslatedSubgroup& c) {
    const FgAbGroup& h = c.xi.parent();
    const std::size_t big_n = h.preimage_rank();
    Lattice sat = saturation(c.xi.preimage());
    Subgroup sat_sub = Subgroup::from_preimage(h, sat);
    const IntMatrix& b = sat.generators();  // N x r, canonical
    const std::size_t r = b.cols();
    const IntMatrix& p = c.xi.preimage().generators();

    // coordinates of the sublattice in the saturated basis
    IntMatrix coords(r, p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j) {
        auto sol = sat.solve(as_vector(p.col(j)));
        if (!sol) throw internal_error("components_of: saturation misses lattice");
        for (std::size_t i = 0; i < r; ++i) coords.at(i, j) = (*sol)[i];
    }
    auto snf = smith_normal_form(coords);  // U coords V = D, adapted basis b U^{-1}
    std::vector<Int> s(r);
    Int total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        s[i] = (i < std::min(r, coords.cols())) ? snf.d.at(i, i) : Int(0);
        if (s[i] == 0) throw internal_error("components_of: determinant group not finite");
        total *= s[i];
    }
    if (total > Limits::det_group_order) throw bound_error("components_of: determinant group too large");

    // pivot rows of the canonical basis b
    std::vector<std::size_t> pivot(r);
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t i = 0;
        while (i < big_n && b.at(i, j) == 0) ++i;
        pivot[j] = i;
    }

    std::vector<TranslatedSubgroup> out;
    std::vector<Int> tuple(r, Int(0));
    while (true) {
        // character of sat/xi with value tuple_i / s_i on adapted basis vector i
        std::vector<Rat> t(r);
        for (std::size_t i = 0; i < r; ++i) t[i] = Rat(tuple[i], s[i]);
        // u = t * U, then solve w * b = u on pivot rows
        std::vector<Rat> u(r, Rat(0));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i) u[j] += t[i] * snf.u.at(i, j);
        std::vector<Rat> w(big_n, Rat(0));
        for (std::size_t j = r; j-- > 0;) {
            Rat acc = u[j];
            for (std::size_t l = j + 1; l < r; ++l) acc -= w[pivot[l]] * b.at(pivot[l], j);
            w[pivot[j]] = acc / b.at(pivot[j], j);
        }
        out.emplace_back(sat_sub, c.eta + TorsionCharacter(h, std::move(w)));

        std::size_t i = r;
        bool done = (r == 0);
        while (i > 0) {
            --i;
            if (++tuple[i] < s[i]) break;
            tuple[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

std::vector<TorsionCharacter> all_dual_characters(const FgAbGroup& t) {
    if (!t.is_finite()) throw input_error("all_dual_characters: finite groups only");
    if (t.torsion_order() > Limits::det_group_order) throw bound_error("all_dual_characters: group too large");
    const std::size_t k = t.torsion_count();
    std::vector<TorsionCharacter> out;
    std::vector<Int> tuple(k, Int(0));
    while (true) {
        std::vector<Rat> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = Rat(tuple[i], t.torsion_factors()[i]);
        out.emplace_back(t, std::move(v));
        std::size_t i = k;
        bool done = (k == 0);
        while (i > 0) {
            --i;
            if (++tuple[i] < t.torsion_factors()[i]) break;
            tuple[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

}  // namespace df
